#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmrt/bigint.hpp"

namespace cmrt {

/// One row of the CM-field dataset.
struct FieldRecord {
  std::string label;
  std::uint64_t degree = 0;
  Integer disc;
  std::string galois;
  std::optional<std::uint64_t> class_number;
};

struct FieldDataset {
  std::vector<FieldRecord> records;
  /// max |disc| over all records.
  Integer delta;
  /// max |disc| over records of degree 2g', keyed by g'.
  std::map<std::uint64_t, Integer> delta_by_dimension;
};

/// Parses the CSV schema `label,degree,disc,galois,class_number`. Lines
/// starting with '#' and blank lines are skipped. Errors name the line.
FieldDataset read_field_records(std::istream& in);
FieldDataset ingest_field_records(const std::string& path);

/// Parses a `g,D` CSV of endomorphism-field degree caps.
std::map<std::uint64_t, std::uint64_t> read_d_table(std::istream& in);
std::map<std::uint64_t, std::uint64_t> load_d_table(const std::string& path);

}  // namespace cmrt
