#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "isoprod/abelian.hpp"
#include "isoprod/datum.hpp"
#include "isoprod/hodge.hpp"

// Brute-force counterparts of the lattice, duality and Hodge computations.
// Nothing here goes through Hermite or Smith forms; only element indexing
// and exponent tuples are shared with the fast path.
namespace isoprod::oracle {

inline constexpr std::int64_t kDefaultCap = std::int64_t{1} << 18;

/// Explicit subset of an ambient group, stored as sorted element indices.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(AbelianGroup ambient, std::vector<std::int64_t> sorted_indices);

  const AbelianGroup& ambient() const noexcept { return ambient_; }
  const std::vector<std::int64_t>& indices() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(std::int64_t index) const;
  bool contains(const GroupElement& g) const;
  std::vector<GroupElement> elements() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.ambient_ == b.ambient_ && a.members_ == b.members_;
  }

 private:
  AbelianGroup ambient_;
  std::vector<std::int64_t> members_;
};

/// Closure of gens under addition (the identity is always included).
/// Throws Error(kOracleScale) once the closure exceeds cap.
ElementSet closure(const AbelianGroup& g, const std::vector<GroupElement>& gens,
                   std::int64_t cap = kDefaultCap);

ElementSet enumerate_subgroup(const Subgroup& h, std::int64_t cap = kDefaultCap);
ElementSet whole_group(const AbelianGroup& g, std::int64_t cap = kDefaultCap);

ElementSet intersect(const ElementSet& a, const ElementSet& b);
ElementSet sum(const ElementSet& a, const ElementSet& b, std::int64_t cap = kDefaultCap);

/// Characters (as indices of the identified dual) vanishing on every member.
ElementSet annihilator(const ElementSet& h, std::int64_t cap = kDefaultCap);

/// Multiset of element orders of the quotient a/b, ascending order -> count.
std::vector<std::pair<std::int64_t, std::int64_t>> order_census(const ElementSet& a,
                                                               const ElementSet& b);

/// Invariant factors of a finite abelian group from its order census.
InvariantFactors factors_from_census(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& census);

/// a/b via a coset table; b must be contained in a.
InvariantFactors brute_quotient(const ElementSet& a, const ElementSet& b);
InvariantFactors brute_quotient(const AbelianGroup& g, const ElementSet& h,
                                std::int64_t cap = kDefaultCap);

/// Elements of g annihilated by every character in chis.
ElementSet brute_kernel(const AbelianGroup& g, const std::vector<Character>& chis,
                        std::int64_t cap = kDefaultCap);

/// Pre-admissible check by scanning the multiples of each branch element.
bool brute_pre_admissible(const AlgebraicDatum& d, std::size_t i, const Character& chi);

/// Admissible triples by scanning all pairs (chi_1, chi_2), as characters of G^3.
std::vector<Character> brute_admissible(const AlgebraicDatum& d, bool second_kind_only,
                                        std::int64_t cap = kDefaultCap);

/// Representation kernel G_{p,q} by triple scan over G^3.
ElementSet brute_representation_kernel(const AlgebraicDatum& d, int p, int q,
                                       std::int64_t cap = kDefaultCap);

/// D_i(chi) evaluated from the formula with a private fractional sum.
std::array<std::vector<std::int64_t>, 3> brute_eigendims(const AlgebraicDatum& d);

/// Naive loops over (G*)^3.
HodgeDiamond brute_hodge(const AlgebraicDatum& d, std::int64_t cap = kDefaultCap);

/// Zero-based pair (i, j) with a nontrivial intersection, if any.
std::optional<std::pair<int, int>> brute_minimality_witness(const AlgebraicDatum& d);

/// Least nonidentity element with a fixed point on all three curves.
std::optional<GroupElement> brute_freeness_witness(const AlgebraicDatum& d);

struct Agreement {
  bool hodge = false;
  bool kernel_30 = false;
  bool kernel_20 = false;
  bool quotient = false;
  bool freeness = false;
  bool minimality = false;

  bool all() const { return hodge && kernel_30 && kernel_20 && quotient && freeness && minimality; }
};

/// Compares every fast-path result for d with the brute-force ones.
Agreement cross_check(const AlgebraicDatum& d, std::int64_t cap = kDefaultCap);

}  // namespace isoprod::oracle
