#include "cmrt/field_records.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "cmrt/error.hpp"

namespace cmrt {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::uint64_t parse_count(const std::string& text, int line, const char* field) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    fail(line, std::string("non-integer ") + field + " '" + text + "'");
  }
  return v;
}

// Yields (line number, cells) for each data line, skipping comments and blanks.
template <typename F>
void for_each_row(std::istream& in, const std::vector<std::string>& header, F&& visit) {
  std::string raw;
  int line = 0;
  bool seen_header = false;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    auto cells = split_csv(text);
    if (!seen_header) {
      if (cells != header) {
        std::string expected;
        for (const auto& h : header) expected += (expected.empty() ? "" : ",") + h;
        fail(line, "missing header (expected '" + expected + "')");
      }
      seen_header = true;
      continue;
    }
    if (cells.size() != header.size()) {
      fail(line, "expected " + std::to_string(header.size()) + " fields, got " +
                     std::to_string(cells.size()));
    }
    visit(line, cells);
  }
  if (!seen_header) fail(line, "missing header");
}

}  // namespace

FieldDataset read_field_records(std::istream& in) {
  FieldDataset data;
  for_each_row(in, {"label", "degree", "disc", "galois", "class_number"},
               [&](int line, const std::vector<std::string>& cells) {
                 FieldRecord rec;
                 rec.label = cells[0];
                 rec.degree = parse_count(cells[1], line, "degree");
                 if (rec.degree == 0 || rec.degree % 2 != 0) {
                   fail(line, "odd degree " + cells[1] + " (CM fields have even degree)");
                 }
                 try {
                   rec.disc = parse_integer(cells[2]);
                 } catch (const InputError&) {
                   fail(line, "non-integer disc '" + cells[2] + "'");
                 }
                 if (rec.disc == 0) fail(line, "disc must be nonzero");
                 rec.galois = cells[3];
                 if (!cells[4].empty()) rec.class_number = parse_count(cells[4], line, "class_number");
                 data.records.push_back(std::move(rec));
               });
  if (data.records.empty()) throw InputError("empty dataset");
  data.delta = 0;
  for (const auto& rec : data.records) {
    const Integer size = abs(rec.disc);
    if (size > data.delta) data.delta = size;
    Integer& slot = data.delta_by_dimension[rec.degree / 2];
    if (size > slot) slot = size;
  }
  return data;
}

FieldDataset ingest_field_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open field records '" + path + "'");
  return read_field_records(in);
}

std::map<std::uint64_t, std::uint64_t> read_d_table(std::istream& in) {
  std::map<std::uint64_t, std::uint64_t> table;
  for_each_row(in, {"g", "D"}, [&](int line, const std::vector<std::string>& cells) {
    const auto g = parse_count(cells[0], line, "g");
    const auto d = parse_count(cells[1], line, "D");
    if (g == 0 || d == 0) fail(line, "g and D must be positive");
    if (!table.emplace(g, d).second) fail(line, "duplicate entry for g = " + cells[0]);
  });
  return table;
}

std::map<std::uint64_t, std::uint64_t> load_d_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open D table '" + path + "'");
  return read_d_table(in);
}

}  // namespace cmrt
