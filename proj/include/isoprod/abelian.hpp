#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "isoprod/matrix.hpp"

namespace isoprod {

/// Z_{n_1} + ... + Z_{n_k}, given by its list of cyclic orders.
///
/// Factors of order 1 are allowed and kept until normalized(). Copies share
/// the same immutable storage, so passing groups around by value is cheap.
class AbelianGroup {
 public:
  /// The trivial group with no factors.
  AbelianGroup();
  explicit AbelianGroup(std::vector<std::int64_t> orders);

  std::span<const std::int64_t> orders() const noexcept;
  std::size_t rank() const noexcept { return orders().size(); }
  std::int64_t order() const noexcept;
  /// lcm of the cyclic orders.
  std::int64_t exponent() const noexcept;

  AbelianGroup normalized() const;

  /// Mixed-radix index of a canonical exponent tuple, in [0, order()).
  std::int64_t index_of(std::span<const std::int64_t> exps) const;
  std::vector<std::int64_t> exponents_at(std::int64_t index) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b);

  std::string to_string() const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

namespace detail {
struct ElementTag {};
struct CharacterTag {};
}  // namespace detail

/// An exponent tuple over a parent group, always reduced into [0, n_j).
template <class Tag>
class Exponents {
 public:
  Exponents() = default;
  Exponents(AbelianGroup parent, std::vector<std::int64_t> exps);

  static Exponents zero(const AbelianGroup& parent);
  static Exponents unit(const AbelianGroup& parent, std::size_t j,
                        std::int64_t power = 1);
  static Exponents at_index(const AbelianGroup& parent, std::int64_t index);

  const AbelianGroup& parent() const noexcept { return parent_; }
  std::span<const std::int64_t> exponents() const noexcept { return exps_; }
  std::int64_t operator[](std::size_t j) const { return exps_[j]; }
  std::int64_t index() const { return parent_.index_of(exps_); }

  bool is_zero() const noexcept;
  /// Order of the element (for characters: order in the dual group).
  std::int64_t order() const;

  Exponents operator+(const Exponents& o) const;
  Exponents operator-(const Exponents& o) const;
  Exponents operator-() const;
  Exponents scaled(std::int64_t k) const;

  /// Equality requires equal parents; ordering is lexicographic on exponents.
  friend bool operator==(const Exponents& a, const Exponents& b) {
    return a.exps_ == b.exps_ && a.parent_ == b.parent_;
  }
  friend std::strong_ordering operator<=>(const Exponents& a,
                                          const Exponents& b) {
    return a.exps_ <=> b.exps_;
  }

  std::string to_string() const;

 private:
  void require_same_parent(const Exponents& o) const;

  AbelianGroup parent_;
  std::vector<std::int64_t> exps_;
};

using GroupElement = Exponents<detail::ElementTag>;
/// A character of G, identified coordinate-wise with an element of the same
/// orders: (a_j) maps g to exp(2 pi i sum_j a_j g_j / n_j).
using Character = Exponents<detail::CharacterTag>;

extern template class Exponents<detail::ElementTag>;
extern template class Exponents<detail::CharacterTag>;

inline Character as_character(const GroupElement& g) {
  return Character(g.parent(), {g.exponents().begin(), g.exponents().end()});
}
inline GroupElement as_element(const Character& c) {
  return GroupElement(c.parent(), {c.exponents().begin(), c.exponents().end()});
}

/// An element of Q/Z, num/den reduced with 0 <= num < den.
class RationalAngle {
 public:
  RationalAngle() = default;
  RationalAngle(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }

  /// k with *this == k / m; m must be a multiple of den().
  std::int64_t numerator_over(std::int64_t m) const;

  RationalAngle operator+(const RationalAngle& o) const;
  RationalAngle operator-() const;

  friend bool operator==(const RationalAngle&, const RationalAngle&) = default;

  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

RationalAngle pairing(const Character& chi, const GroupElement& g);

/// d_1 | d_2 | ... | d_s with each d_i >= 2; empty means trivial.
class InvariantFactors {
 public:
  InvariantFactors() = default;
  /// Throws unless the chain condition holds.
  explicit InvariantFactors(std::vector<std::int64_t> factors);
  /// Drops 1s (and rejects zeros) from a Smith diagonal.
  static InvariantFactors from_diagonal(std::span<const std::int64_t> diagonal);

  const std::vector<std::int64_t>& factors() const noexcept { return factors_; }
  std::int64_t order() const;
  bool is_trivial() const noexcept { return factors_.empty(); }

  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
  friend auto operator<=>(const InvariantFactors&, const InvariantFactors&) = default;

  /// "[2, 4]"
  std::string to_string() const;

 private:
  std::vector<std::int64_t> factors_;
};

/// A subgroup of an AbelianGroup with a canonical Hermite basis.
///
/// The basis is the row Hermite normal form of the lattice spanned by the
/// generators together with n_j e_j: upper triangular, positive pivots, and
/// entries above each pivot reduced into [0, pivot). Two subgroups are equal
/// iff their bases are.
class Subgroup {
 public:
  Subgroup() = default;

  static Subgroup generate(const AbelianGroup& ambient,
                           std::span<const GroupElement> gens);
  static Subgroup trivial(const AbelianGroup& ambient);
  static Subgroup whole(const AbelianGroup& ambient);

  const AbelianGroup& ambient() const noexcept { return ambient_; }
  const std::vector<GroupElement>& generators() const noexcept { return gens_; }
  const IntMatrix& basis() const noexcept { return basis_; }

  std::int64_t order() const noexcept { return order_; }
  /// [G : H]
  std::int64_t index() const noexcept { return ambient_.order() / order_; }

  bool contains(const GroupElement& g) const;
  /// Membership of a character in a subgroup of the dual group.
  bool contains(const Character& chi) const { return contains(as_element(chi)); }
  bool contains(const Subgroup& other) const;

  /// Lexicographically least element of the coset g + H.
  GroupElement canonical_representative(const GroupElement& g) const;

  /// Nonzero basis rows, as elements; they generate H.
  std::vector<GroupElement> basis_elements() const;

  bool is_cyclic() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subgroup(AbelianGroup ambient, std::vector<GroupElement> gens, IntMatrix basis);

  AbelianGroup ambient_;
  std::vector<GroupElement> gens_;
  IntMatrix basis_;
  std::int64_t order_ = 1;
};

Subgroup subgroup_generate(const AbelianGroup& g, std::span<const GroupElement> gens);
Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b);
bool subgroup_contains(const Subgroup& h, const GroupElement& g);

/// H^perp = characters vanishing on H, as a subgroup of the dual (same orders).
Subgroup annihilator(const Subgroup& h);

/// Characters of G containing `chis` in their kernel intersection, i.e. the
/// subgroup of G on which every listed character vanishes.
Subgroup common_kernel(const AbelianGroup& g, std::span<const Character> chis);

/// Presentation of a subquotient A/B (B contained in A) as a concrete group
/// in invariant-factor form, with maps in both directions.
class QuotientMap {
 public:
  QuotientMap(const Subgroup& numerator, const Subgroup& denominator);

  const AbelianGroup& quotient() const noexcept { return quotient_; }
  const InvariantFactors& invariant_factors() const noexcept { return factors_; }
  const Subgroup& numerator() const noexcept { return numerator_; }
  const Subgroup& denominator() const noexcept { return denominator_; }

  /// Image of a ∈ A in A/B. Throws if a is not in A.
  GroupElement project(const GroupElement& a) const;
  /// Some representative in A of q ∈ A/B.
  GroupElement lift(const GroupElement& q) const;
  /// Representatives (lex-least in their cosets) of the standard generators
  /// of A/B; entry i has coset order invariant_factors()[i].
  std::vector<GroupElement> generator_representatives() const;
  /// chi o pi for a character chi of G/B; requires A == G.
  Character pullback(const Character& chi) const;

 private:
  Subgroup numerator_;
  Subgroup denominator_;
  AbelianGroup quotient_;
  InvariantFactors factors_;
  IntMatrix v_;           // y -> y V sends A-coordinates to Smith coordinates
  IntMatrix lift_rows_;   // rows of V^{-1} B_A, one per kept factor
  std::vector<std::size_t> kept_;  // Smith indices with d_i >= 2
  std::vector<std::int64_t> diag_;
};

struct QuotientStructure {
  InvariantFactors factors;
  std::vector<GroupElement> generators;
};

/// Invariant factors of G/H and coset representatives generating it.
QuotientStructure quotient_structure(const AbelianGroup& g, const Subgroup& h);
/// Same for a subquotient A/B.
QuotientStructure quotient_structure(const Subgroup& a, const Subgroup& b);

AbelianGroup direct_product(std::span<const AbelianGroup> groups);
/// {(g, ..., g)} inside G^copies.
Subgroup diagonal_subgroup(const AbelianGroup& g, std::size_t copies);
/// H_1 x ... x H_k inside the product of their ambients.
Subgroup product_subgroup(std::span<const Subgroup> parts);
/// Embeds element of factor `slot` of a product whose factors are `groups`.
GroupElement concat_elements(std::span<const GroupElement> parts);
std::vector<GroupElement> split_element(const GroupElement& g,
                                        std::span<const AbelianGroup> groups);

/// Every element of G in index order. Intended for |G| at desk scale.
std::vector<GroupElement> all_elements(const AbelianGroup& g);

}  // namespace isoprod
