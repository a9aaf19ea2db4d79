#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cmrt/bigint.hpp"
#include "cmrt/group.hpp"
#include "cmrt/integer_matrix.hpp"

namespace cmrt {

/// Group-theoretic avatar of a CM field E inside its Galois closure L:
/// G = Gal(L/Q), H = Gal(L/E), and complex conjugation c.
///
/// Embeddings of E are the left cosets G/H; G acts on them by left
/// multiplication. Construction rejects c that is not a central involution,
/// c in H, and odd index (so g = [G:H]/2 >= 1 always).
class CMFieldSymbol {
 public:
  static CMFieldSymbol make(const Subgroup& field_subgroup, int conj,
                            std::optional<Integer> disc = std::nullopt);

  const FiniteGroup& group() const { return subgroup_.parent(); }
  const Subgroup& field_subgroup() const { return subgroup_; }
  int conj() const { return conj_; }
  const std::optional<Integer>& disc() const { return disc_; }
  const CosetStructure& cosets() const { return cosets_; }
  int degree() const { return cosets_.count(); }
  int dimension() const { return cosets_.count() / 2; }
  /// Index of c·(coset k).
  int conjugate_coset(int k) const { return cosets_.action[conj_][k]; }

 private:
  CMFieldSymbol(Subgroup h, int c, std::optional<Integer> disc, CosetStructure cs)
      : subgroup_(std::move(h)), conj_(c), disc_(std::move(disc)), cosets_(std::move(cs)) {}
  Subgroup subgroup_;
  int conj_;
  std::optional<Integer> disc_;
  CosetStructure cosets_;
};

/// A CM type Φ: one coset from each {gH, c·gH} pair.
class CMType {
 public:
  /// Validates |Φ| = g and Φ ∩ cΦ = ∅.
  static CMType make(const CMFieldSymbol& field, std::vector<int> phi);

  const CMFieldSymbol& field() const { return field_; }
  /// Sorted coset indices.
  const std::vector<int>& phi() const { return phi_; }
  /// Φ_L = {σ ∈ G : σH ∈ Φ}.
  ElementMask lifted_mask() const { return lifted_; }
  std::vector<int> lifted() const;
  /// Indicator vector μ_Φ in Z[G/H].
  std::vector<int> indicator() const;

  friend bool operator==(const CMType& a, const CMType& b) {
    return a.field_.field_subgroup() == b.field_.field_subgroup() &&
           a.field_.conj() == b.field_.conj() && a.phi_ == b.phi_;
  }

 private:
  CMType(CMFieldSymbol field, std::vector<int> phi, ElementMask lifted)
      : field_(std::move(field)), phi_(std::move(phi)), lifted_(lifted) {}
  CMFieldSymbol field_;
  std::vector<int> phi_;
  ElementMask lifted_;
};

struct ReflexDatum {
  /// H* = {σ ∈ G : σΦ = Φ}.
  Subgroup hstar;
  /// Φ* as indices into hstar_cosets.
  std::vector<int> phistar;
  int reflex_degree = 0;
  CosetStructure hstar_cosets;
};

struct MTInfo {
  int r = 0;
  Integer f_order = 1;
};

/// All 2^g CM types on `field`, in lexicographic order of their sorted cosets.
std::vector<CMType> enumerate_cm_types(const CMFieldSymbol& field);

ReflexDatum reflex(const CMType& type);

/// The reflex datum viewed as a CM type on (G, H*, c).
CMType reflex_type(const CMType& type);

/// Cocharacter map of the reflex norm, Z[G/H*] -> Z[G/H]: the column of
/// τH* is the indicator of τΦ, i.e. the translate τ·μ_Φ. Its transpose (the
/// character map) sends e_ρ to the sum of e_{ρψH*} over ψ in Φ*; for a
/// cyclic quartic field with Φ = {1, σ} that is x ↦ x·σ³(x).
IntegerMatrix reflex_norm_matrix(const CMType& type, const ReflexDatum& datum);

/// Rank of the span of the G-orbit of μ_Φ (the Mumford–Tate rank r).
int mt_rank(const CMType& type);

/// Order of the component group F of ker(T_{E*} -> T_E): torsion of the
/// cokernel of the transposed reflex norm matrix.
Integer component_group_order(const CMType& type);

MTInfo mumford_tate_info(const CMType& type);

/// True iff no subgroup H' with H ⊊ H', c ∉ H' satisfies Φ_L·H' = Φ_L.
bool is_primitive(const CMType& type);
/// Same test against a precomputed list of all subgroups of G.
bool is_primitive(const CMType& type, const std::vector<Subgroup>& subgroups);

/// Every valid (H, c) on `group`: H of even index, c a central involution not in H.
std::vector<CMFieldSymbol> enumerate_cm_fields(const FiniteGroup& group);

/// Parses "<group-spec>;H=<indices>;c=<index>;phi=<coset indices>".
/// H lists the subgroup's elements exactly.
CMType parse_cm_type(std::string_view descriptor);

/// Parses a comma-separated list of nonnegative integers ("" is empty).
std::vector<int> parse_index_list(std::string_view text);

}  // namespace cmrt
