#include "cmrt/cli.hpp"

#include <algorithm>
#include <iostream>

#include "CLI11.hpp"
#include "cmrt/bounds.hpp"
#include "cmrt/class_number.hpp"
#include "cmrt/cm_type.hpp"
#include "cmrt/error.hpp"
#include "cmrt/example61.hpp"
#include "cmrt/field_records.hpp"
#include "cmrt/integer_matrix.hpp"
#include "cmrt/reports.hpp"

namespace cmrt {

namespace {

const char* subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::Bound: return "bound";
    case Subcommand::CMTypes: return "cmtypes";
    case Subcommand::Reflex: return "reflex";
    case Subcommand::Verify61: return "verify61";
    case Subcommand::ClassNumbers: return "classnumbers";
    case Subcommand::SNF: return "snf";
  }
  return "?";
}

template <typename T>
const T& require(const std::optional<T>& v, const char* flag, Subcommand s) {
  if (!v) {
    throw MissingInputError(std::string(subcommand_name(s)) + ": missing required " + flag);
  }
  return *v;
}

void require_json(const RunConfig& c) {
  if (c.format != OutputFormat::Json) {
    throw InputError(std::string(subcommand_name(c.subcommand)) +
                     ": CSV output is only available for cmtypes, classnumbers and verify61");
  }
}

// Quotes a CSV cell when it contains a separator or a quote.
std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join_indices(const Json& arr) {
  std::string out;
  for (const auto& v : arr) out += (out.empty() ? "" : " ") + std::to_string(v.get<int>());
  return out;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

CMFieldSymbol field_from(const RunConfig& c) {
  const FiniteGroup g = load_group(require(c.group_spec, "--group", c.subcommand));
  const Subgroup h =
      Subgroup::make(g, parse_index_list(require(c.subgroup_spec, "--subgroup", c.subcommand)));
  const auto conj = parse_index_list(require(c.conj_spec, "--conj", c.subcommand));
  if (conj.size() != 1) throw InputError("--conj expects exactly one element index");
  return CMFieldSymbol::make(h, conj.front());
}

void emit(const std::string& kind, const Json& report, std::ostream& out) {
  // Every report is checked against its schema before it leaves the process.
  validate_report(kind, report);
  out << report.dump(2) << '\n';
}

int run_bound(const RunConfig& c, std::ostream& out) {
  require_json(c);
  BoundInputs inputs;
  inputs.n = require(c.n, "--n", c.subcommand);
  inputs.g = require(c.g, "--g", c.subcommand);
  const FieldDataset data = ingest_field_records(require(c.delta_file, "--delta-file", c.subcommand));
  inputs.d_table = load_d_table(require(c.d_table_file, "--d-table", c.subcommand));
  if (c.tsimerman_k || c.tsimerman_delta) {
    inputs.tsimerman = TsimermanParams{
        parse_rational(require(c.tsimerman_k, "--tsimerman-k", c.subcommand)),
        parse_rational(require(c.tsimerman_delta, "--tsimerman-delta", c.subcommand))};
  }
  const BoundReport report = chain_bounds(inputs, data.delta_by_dimension);
  emit("bound", bound_report_json(inputs, data.delta_by_dimension, report), out);
  return kExitOk;
}

int run_cmtypes(const RunConfig& c, std::ostream& out) {
  const CMFieldSymbol field = field_from(c);
  std::vector<CMType> types;
  if (c.phi_spec) {
    types.push_back(CMType::make(field, parse_index_list(*c.phi_spec)));
  } else {
    types = enumerate_cm_types(field);
  }
  const Json report = cmtypes_report_json(field, types);
  validate_cmtypes_report(report);
  if (c.format == OutputFormat::Json) {
    out << report.dump(2) << '\n';
    return kExitOk;
  }
  out << "phi,g,r,f_order,reflex_degree,primitive\n";
  for (const auto& row : report["types"]) {
    out << join_indices(row["phi"]) << ',' << row["g"].dump() << ',' << row["r"].dump() << ','
        << scalar_text(row["f_order"]) << ',' << row["reflex_degree"].dump() << ','
        << (row["primitive"].get<bool>() ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int run_reflex(const RunConfig& c, std::ostream& out) {
  require_json(c);
  const CMFieldSymbol field = field_from(c);
  const CMType type = CMType::make(field, parse_index_list(require(c.phi_spec, "--phi", c.subcommand)));
  emit("reflex", reflex_report_json(type), out);
  return kExitOk;
}

int verify61_command(const RunConfig& c, std::ostream& out) {
  const auto checks = run_verify61();
  const C12Result c12 = assemble_c12({Integer(163), Integer(61), std::nullopt});
  const Json report = verify61_report_json(checks, c12);
  validate_verify61_report(report);
  if (c.format == OutputFormat::Json) {
    out << report.dump(2) << '\n';
  } else {
    out << "name,status,detail\n";
    for (const auto& item : report["checks"]) {
      out << csv_cell(item["name"].get<std::string>()) << ','
          << item["status"].get<std::string>() << ','
          << csv_cell(item["detail"].get<std::string>()) << '\n';
    }
  }
  return report["all_ok"].get<bool>() ? kExitOk : kExitVerification;
}

int run_classnumbers(const RunConfig& c, std::ostream& out) {
  const auto limit = require(c.search_limit, "--search-limit", c.subcommand);
  const auto search = discs_with_class_number_at_most(c.h_max, limit, c.fundamental_only);
  const Json report = classnumbers_report_json(search);
  validate_classnumbers_report(report);
  if (c.format == OutputFormat::Json) {
    out << report.dump(2) << '\n';
    return kExitOk;
  }
  out << "d,h\n";
  for (const auto& e : search.entries) out << e.d << ',' << e.h << '\n';
  return kExitOk;
}

int run_snf(const RunConfig& c, std::istream& in, std::ostream& out) {
  require_json(c);
  const IntegerMatrix m = read_matrix(in);
  emit("snf", snf_report_json(m, smith_normal_form(m)), out);
  return kExitOk;
}

}  // namespace

RunConfig parse_arguments(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"Exact CM-type lattices, prime-bound chains and worked-example verification"};
  app.require_subcommand(1);

  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_field = [&](CLI::App* sub, bool with_phi) {
    sub->add_option("--group", c.group_spec, "Group descriptor (C4, D4, Q8, ...) or @table-file");
    sub->add_option("--subgroup", c.subgroup_spec, "Elements of H, comma separated");
    sub->add_option("--conj", c.conj_spec, "Index of complex conjugation");
    sub->add_option("--phi", c.phi_spec,
                    with_phi ? "CM type as coset indices" : "Restrict to one CM type");
    add_format(sub);
  };

  auto* bound = app.add_subcommand("bound", "Evaluate the prime-bound chain C2, C1, C");
  bound->add_option("--n", c.n, "Degree [K:Q]");
  bound->add_option("--g", c.g, "Dimension");
  bound->add_option("--delta-file", c.delta_file, "Field-record CSV supplying Δ per dimension");
  bound->add_option("--d-table", c.d_table_file, "CSV of endomorphism-field degree caps g,D");
  bound->add_option("--tsimerman-k", c.tsimerman_k, "Constant k_g (rational)");
  bound->add_option("--tsimerman-delta", c.tsimerman_delta, "Exponent δ_g (rational)");
  add_format(bound);

  auto* cmtypes = app.add_subcommand("cmtypes", "Enumerate CM types with r, |F| and primitivity");
  add_field(cmtypes, false);
  auto* reflex_cmd = app.add_subcommand("reflex", "Reflex datum and reflex norm of one CM type");
  add_field(reflex_cmd, true);

  auto* verify = app.add_subcommand("verify61", "Run the exact checks of the conductor-61 example");
  verify->alias("verify-61");
  add_format(verify);

  auto* classes = app.add_subcommand("classnumbers", "Imaginary quadratic discriminants of small class number");
  classes->add_option("--search-limit", c.search_limit, "Scan discriminants down to -limit");
  classes->add_option("--h-max", c.h_max, "Largest class number to report");
  classes->add_flag("--fundamental", c.fundamental_only, "Only fundamental discriminants");
  add_format(classes);

  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix read from standard input");
  add_format(snf);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    CLI::App* target = &app;
    for (auto* sub : app.get_subcommands()) target = sub;
    throw HelpRequested(target->help());
  } catch (const CLI::ParseError& e) {
    throw InputError(e.what());
  }

  const std::pair<CLI::App*, Subcommand> table[] = {
      {bound, Subcommand::Bound},         {cmtypes, Subcommand::CMTypes},
      {reflex_cmd, Subcommand::Reflex},   {verify, Subcommand::Verify61},
      {classes, Subcommand::ClassNumbers}, {snf, Subcommand::SNF}};
  for (const auto& [sub, kind] : table) {
    if (sub->parsed()) c.subcommand = kind;
  }
  c.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  return c;
}

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::Bound: return run_bound(config, out);
      case Subcommand::CMTypes: return run_cmtypes(config, out);
      case Subcommand::Reflex: return run_reflex(config, out);
      case Subcommand::Verify61: return verify61_command(config, out);
      case Subcommand::ClassNumbers: return run_classnumbers(config, out);
      case Subcommand::SNF: return run_snf(config, in, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  RunConfig config;
  try {
    config = parse_arguments(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return run(config, in, out, err);
}

}  // namespace cmrt
