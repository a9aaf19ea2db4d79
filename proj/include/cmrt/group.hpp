#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cmrt {

/// Bit set over the elements of a group of order <= 64.
using ElementMask = std::uint64_t;

/// A finite group given by its full multiplication table.
///
/// Element 0 is the identity and table(i, j) is the index of g_i * g_j.
/// Construction validates the group axioms (Latin square, identity row and
/// column, associativity on all triples), so every live FiniteGroup is a
/// genuine group. Copies share the immutable table.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 64;

  /// Validates and wraps an explicit table. `names` may be empty, in which
  /// case elements are named "g0", "g1", ...
  static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                std::vector<std::string> names = {});

  int order() const { return data_->order; }
  int mul(int a, int b) const { return data_->table[a * data_->order + b]; }
  int inverse(int a) const { return data_->inverse[a]; }
  int element_order(int a) const;
  const std::string& name(int a) const { return data_->names[a]; }
  const std::vector<std::string>& names() const { return data_->names; }
  std::span<const int> row(int a) const {
    return {data_->table.data() + a * data_->order, static_cast<std::size_t>(data_->order)};
  }
  bool is_abelian() const;
  bool valid_element(int a) const { return a >= 0 && a < data_->order; }

  /// Same multiplication table (names are ignored).
  bool same_table(const FiniteGroup& other) const;

 private:
  struct Data {
    int order = 0;
    std::vector<int> table;
    std::vector<int> inverse;
    std::vector<std::string> names;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

/// A subgroup of a FiniteGroup, stored as a sorted element list.
class Subgroup {
 public:
  /// Validates closure, identity and inverses; throws InputError otherwise.
  static Subgroup make(const FiniteGroup& parent, std::vector<int> elements);
  static Subgroup generated_by(const FiniteGroup& parent, std::span<const int> generators);
  static Subgroup trivial(const FiniteGroup& parent);
  static Subgroup whole(const FiniteGroup& parent);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  ElementMask mask() const { return mask_; }
  bool contains(int g) const { return (mask_ >> g) & 1u; }
  int order() const { return static_cast<int>(elements_.size()); }
  int index() const { return parent_.order() / order(); }
  bool is_normal() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.mask_ == b.mask_ && a.parent_.same_table(b.parent_);
  }

 private:
  Subgroup(FiniteGroup parent, std::vector<int> elements, ElementMask mask)
      : parent_(std::move(parent)), elements_(std::move(elements)), mask_(mask) {}
  FiniteGroup parent_;
  std::vector<int> elements_;
  ElementMask mask_ = 0;
};

/// Every subgroup of G, ordered by (order, element mask).
std::vector<Subgroup> all_subgroups(const FiniteGroup& group);

/// Left cosets gH with their canonical representatives and the left
/// multiplication action of G on them.
struct CosetStructure {
  /// Coset k is representatives[k]·H; representatives are the minimal
  /// element index of each coset, in increasing order.
  std::vector<int> representatives;
  /// coset_of[g] = index of the coset containing g.
  std::vector<int> coset_of;
  /// action[g][k] = index of the coset g·(coset k).
  std::vector<std::vector<int>> action;

  int count() const { return static_cast<int>(representatives.size()); }
  /// All elements of coset k, sorted.
  std::vector<int> members(int k) const;
};

/// Throws InputError if `subgroup` does not belong to `group`.
CosetStructure coset_structure(const FiniteGroup& group, const Subgroup& subgroup);

bool is_central_involution(const FiniteGroup& group, int c);
std::vector<int> central_involutions(const FiniteGroup& group);

// Constructors ---------------------------------------------------------------

FiniteGroup cyclic_group(int m);
/// Dihedral group of order 2m, elements r^i s^j at index i + m*j.
FiniteGroup dihedral_group(int m);
/// <a, b | a^m, b^n = a^s, b a b^-1 = a^r>, elements a^i b^j at index i + m*j.
FiniteGroup metacyclic_group(int m, int n, int r, int s);
FiniteGroup symmetric_group(int n);
FiniteGroup alternating_group(int n);
/// Closure of permutations of {0, ..., k-1} under composition (p*q)(x) = p(q(x)).
FiniteGroup permutation_group(const std::vector<std::vector<int>>& generators);
/// Direct product with mixed-radix indexing: (a, b) at index a*|B| + b.
FiniteGroup direct_product(const std::vector<FiniteGroup>& factors);

/// Builds a group from a descriptor such as "C4", "C2xC2", "D4" (order 8),
/// "Q8", "A4", "S4xC2", "D6xC2", "C4:C4" or "C2^2:C4".
/// Throws InputError on malformed descriptors or orders above 64.
FiniteGroup build_group(std::string_view descriptor);

/// A descriptor as for build_group, or "@<path>" naming a table file.
FiniteGroup load_group(std::string_view spec);

/// Descriptors for one representative of every isomorphism class of groups
/// of order <= max_order (max_order <= 16).
std::vector<std::string> small_group_descriptors(int max_order);

// Table files ----------------------------------------------------------------

/// Reads the text table format: order, then `order` rows of indices, then
/// optional "name <i> <string>" lines; '#' starts a comment line.
FiniteGroup read_group_table(std::istream& in);
void write_group_table(std::ostream& out, const FiniteGroup& group);

}  // namespace cmrt
