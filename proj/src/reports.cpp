#include "cmrt/reports.hpp"

#include <algorithm>

#include "cmrt/error.hpp"

namespace cmrt {

namespace {

Json index_list(const std::vector<int>& v) { return Json(v); }

// Shared across cmtypes and reflex: the per-type lattice summary.
Json type_summary(const CMType& type, const std::vector<Subgroup>& subgroups) {
  const ReflexDatum datum = reflex(type);
  const MTInfo mt = mumford_tate_info(type);
  Json row;
  row["phi"] = index_list(type.phi());
  row["g"] = type.field().dimension();
  row["r"] = mt.r;
  row["f_order"] = integer_json(mt.f_order);
  row["reflex_degree"] = datum.reflex_degree;
  row["primitive"] = is_primitive(type, subgroups);
  return row;
}

[[noreturn]] void bad(const std::string& where) {
  throw InputError("report schema violation: " + where);
}

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key '") + key + "'");
  return j.at(key);
}

bool is_integer_like(const Json& v) {
  if (v.is_number_integer()) return true;
  if (!v.is_string()) return false;
  const auto& s = v.get_ref<const std::string&>();
  const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
  return s.size() > start &&
         std::all_of(s.begin() + static_cast<long>(start), s.end(),
                     [](char ch) { return ch >= '0' && ch <= '9'; });
}

void need_integer(const Json& j, const char* key) {
  if (!is_integer_like(need(j, key))) bad(std::string("'") + key + "' is not an integer");
}

void need_bool(const Json& j, const char* key) {
  if (!need(j, key).is_boolean()) bad(std::string("'") + key + "' is not a boolean");
}

void need_string(const Json& j, const char* key) {
  if (!need(j, key).is_string()) bad(std::string("'") + key + "' is not a string");
}

const Json& need_array(const Json& j, const char* key) {
  const Json& v = need(j, key);
  if (!v.is_array()) bad(std::string("'") + key + "' is not an array");
  return v;
}

void need_index_array(const Json& j, const char* key) {
  for (const auto& v : need_array(j, key)) {
    if (!v.is_number_integer()) bad(std::string("'") + key + "' holds a non-integer");
  }
}

void validate_type_summary(const Json& row) {
  need_index_array(row, "phi");
  for (const char* key : {"g", "r", "f_order", "reflex_degree"}) need_integer(row, key);
  need_bool(row, "primitive");
}

}  // namespace

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(to_string(v));
}

Json bound_report_json(const BoundInputs& inputs, const std::map<std::uint64_t, Integer>& deltas,
                       const BoundReport& report) {
  Json in;
  in["n"] = inputs.n;
  in["g"] = inputs.g;
  Json d_table = Json::object();
  for (const auto& [g, d] : inputs.d_table) d_table[std::to_string(g)] = d;
  in["d_table"] = d_table;
  Json delta_table = Json::object();
  for (const auto& [g, d] : deltas) delta_table[std::to_string(g)] = integer_json(d);
  in["delta"] = delta_table;
  if (inputs.tsimerman) {
    in["tsimerman"] = {{"k", to_string(inputs.tsimerman->k)},
                       {"delta", to_string(inputs.tsimerman->delta)}};
  }
  Json out;
  out["inputs"] = in;
  out["prop_key"] = integer_json(report.prop_key);
  out["c2"] = integer_json(report.c2);
  out["c1"] = integer_json(report.c1);
  out["c"] = integer_json(report.c);
  if (report.disc_cap) out["disc_cap"] = integer_json(*report.disc_cap);
  out["provenance"] = report.provenance;
  return out;
}

Json cmtypes_report_json(const CMFieldSymbol& field, const std::vector<CMType>& types) {
  const auto subgroups = all_subgroups(field.group());
  Json out;
  out["group_order"] = field.group().order();
  out["subgroup"] = index_list(field.field_subgroup().elements());
  out["conj"] = field.conj();
  out["g"] = field.dimension();
  Json names = Json::array();
  for (int rep : field.cosets().representatives) names.push_back(field.group().name(rep));
  out["cosets"] = names;
  Json rows = Json::array();
  for (const auto& t : types) rows.push_back(type_summary(t, subgroups));
  out["types"] = rows;
  return out;
}

Json reflex_report_json(const CMType& type) {
  const auto subgroups = all_subgroups(type.field().group());
  Json out = type_summary(type, subgroups);
  const ReflexDatum datum = reflex(type);
  out["h_star"] = index_list(datum.hstar.elements());
  out["phi_star"] = index_list(datum.phistar);
  Json phistar_names = Json::array();
  for (int k : datum.phistar) {
    phistar_names.push_back(type.field().group().name(datum.hstar_cosets.representatives[k]));
  }
  out["phi_star_names"] = phistar_names;
  const IntegerMatrix m = reflex_norm_matrix(type, datum);
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(row);
  }
  out["reflex_norm_matrix"] = rows;
  return out;
}

Json verify61_report_json(const std::vector<CheckResult>& checks, const C12Result& c12) {
  Json out;
  Json items = Json::array();
  bool all_ok = true;
  for (const auto& c : checks) {
    items.push_back({{"name", c.name}, {"status", c.ok ? "ok" : "fail"}, {"detail", c.detail}});
    all_ok = all_ok && c.ok;
  }
  out["checks"] = items;
  out["c12"] = {{"value", integer_json(c12.value)}, {"provenance", c12.provenance}};
  out["assumptions"] = Json::array(
      {"class number of K = Q(sqrt(-(61+6 sqrt 61))) is 1 [user-asserted, not computed]",
       "C(2,1) = 163 and the ramified-prime cap 61 are cited inputs [user-asserted]"});
  out["all_ok"] = all_ok;
  return out;
}

Json classnumbers_report_json(const ClassNumberSearch& search) {
  Json out;
  out["h_max"] = search.h_max;
  out["search_limit"] = search.search_limit;
  out["fundamental_only"] = search.fundamental_only;
  out["completeness"] = search.completeness;
  Json rows = Json::array();
  for (const auto& e : search.entries) rows.push_back({{"d", e.d}, {"h", e.h}});
  out["entries"] = rows;
  return out;
}

Json snf_report_json(const IntegerMatrix& m, const SNFResult& snf) {
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  Json divisors = Json::array();
  for (const auto& d : snf.divisors) divisors.push_back(integer_json(d));
  out["divisors"] = divisors;
  out["rank"] = snf.rank;
  out["torsion_order"] = integer_json(snf.torsion_order);
  return out;
}

void validate_bound_report(const Json& j) {
  const Json& in = need(j, "inputs");
  need_integer(in, "n");
  need_integer(in, "g");
  if (!need(in, "d_table").is_object()) bad("'d_table' is not an object");
  if (!need(in, "delta").is_object()) bad("'delta' is not an object");
  for (const char* key : {"prop_key", "c2", "c1", "c"}) need_integer(j, key);
  if (j.contains("disc_cap")) need_integer(j, "disc_cap");
  for (const auto& p : need_array(j, "provenance")) {
    if (!p.is_string()) bad("provenance entry is not a string");
  }
}

void validate_cmtypes_report(const Json& j) {
  need_integer(j, "group_order");
  need_index_array(j, "subgroup");
  need_integer(j, "conj");
  need_integer(j, "g");
  need_array(j, "cosets");
  for (const auto& row : need_array(j, "types")) validate_type_summary(row);
}

void validate_reflex_report(const Json& j) {
  validate_type_summary(j);
  need_index_array(j, "h_star");
  need_index_array(j, "phi_star");
  need_array(j, "phi_star_names");
  for (const auto& row : need_array(j, "reflex_norm_matrix")) {
    if (!row.is_array()) bad("reflex_norm_matrix row is not an array");
  }
}

void validate_verify61_report(const Json& j) {
  for (const auto& c : need_array(j, "checks")) {
    need_string(c, "name");
    need_string(c, "detail");
    const Json& status = need(c, "status");
    if (status != "ok" && status != "fail") bad("check status must be 'ok' or 'fail'");
  }
  const Json& c12 = need(j, "c12");
  need_integer(c12, "value");
  need_array(c12, "provenance");
  need_array(j, "assumptions");
  need_bool(j, "all_ok");
}

void validate_classnumbers_report(const Json& j) {
  need_integer(j, "h_max");
  need_integer(j, "search_limit");
  need_bool(j, "fundamental_only");
  need_string(j, "completeness");
  for (const auto& e : need_array(j, "entries")) {
    need_integer(e, "d");
    need_integer(e, "h");
  }
}

void validate_snf_report(const Json& j) {
  need_integer(j, "rows");
  need_integer(j, "cols");
  for (const auto& d : need_array(j, "divisors")) {
    if (!is_integer_like(d)) bad("divisor is not an integer");
  }
  need_integer(j, "rank");
  need_integer(j, "torsion_order");
}

void validate_report(const std::string& kind, const Json& j) {
  if (kind == "bound") return validate_bound_report(j);
  if (kind == "cmtypes") return validate_cmtypes_report(j);
  if (kind == "reflex") return validate_reflex_report(j);
  if (kind == "verify61") return validate_verify61_report(j);
  if (kind == "classnumbers") return validate_classnumbers_report(j);
  if (kind == "snf") return validate_snf_report(j);
  throw InputError("unknown report kind '" + kind + "'");
}

}  // namespace cmrt
