#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "isoprod/abelian.hpp"
#include "isoprod/datum.hpp"
#include "isoprod/matrix.hpp"

// Seeded random instances shared by the property tests and the acceptance
// suite.
namespace isoprod::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline IntMatrix random_matrix(Rng& rng, std::size_t max_dim, std::int64_t bound) {
  const auto r = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_dim)));
  const auto c = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_dim)));
  IntMatrix m(r, c);
  // Mix in sparse and low-rank shapes, which stress the pivot search.
  const int shape = static_cast<int>(uniform(rng, 0, 3));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (shape == 1 && uniform(rng, 0, 2) != 0) continue;
      m(i, j) = uniform(rng, -bound, bound);
    }
  if (shape == 2 && r > 1)
    for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - (r > 2 ? m(1, j) : 0);
  return m;
}

/// Random list of cyclic orders with product at most max_order.
inline AbelianGroup random_group(Rng& rng, std::int64_t max_order, std::size_t max_rank = 4) {
  std::vector<std::int64_t> orders;
  std::int64_t total = 1;
  const auto rank = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_rank)));
  for (std::size_t j = 0; j < rank; ++j) {
    const std::int64_t room = max_order / total;
    if (room < 2) break;
    const std::int64_t n = uniform(rng, 2, std::min<std::int64_t>(room, 12));
    orders.push_back(n);
    total *= n;
  }
  if (orders.empty()) orders.push_back(2);
  return AbelianGroup(std::move(orders));
}

inline GroupElement random_element(Rng& rng, const AbelianGroup& g) {
  return GroupElement::at_index(g, uniform(rng, 0, g.order() - 1));
}

inline Subgroup random_subgroup(Rng& rng, const AbelianGroup& g, int max_gens = 3) {
  std::vector<GroupElement> gens;
  const auto n = uniform(rng, 0, max_gens);
  for (std::int64_t k = 0; k < n; ++k) gens.push_back(random_element(rng, g));
  return Subgroup::generate(g, gens);
}

inline Character random_character(Rng& rng, const AbelianGroup& g) {
  return Character::at_index(g, uniform(rng, 0, g.order() - 1));
}

/// Random well-formed datum with elliptic bases and cyclic kernels, not
/// necessarily free. Groups are drawn from a fixed list with |G| <= 64.
inline std::optional<AlgebraicDatum> random_datum(Rng& rng) {
  static const std::vector<std::vector<std::int64_t>> kGroups{
      {2, 2, 2}, {2, 2, 4}, {2, 4, 4}, {4, 4, 4}, {2, 2, 2, 2}, {2, 2, 6},
      {3, 3, 3}, {2, 6, 2}, {2, 2, 2, 4}, {6, 6}, {2, 4, 8}, {4, 4, 2}};
  const AbelianGroup g(kGroups[uniform(rng, 0, static_cast<std::int64_t>(kGroups.size()) - 1)]);
  std::array<Subgroup, 3> k;
  for (auto& x : k) {
    const GroupElement e = random_element(rng, g);
    x = Subgroup::generate(g, std::span(&e, 1));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (subgroup_intersection(k[i], k[j]).order() != 1) return std::nullopt;
  std::array<FactorInput, 3> f;
  for (std::size_t i = 0; i < 3; ++i) {
    const QuotientMap qm(Subgroup::whole(g), k[i]);
    const AbelianGroup& q = qm.quotient();
    if (q.order() == 1) return std::nullopt;
    f[i].g_prime = 1;
    const auto r = uniform(rng, 1, 3);
    GroupElement sum = GroupElement::zero(q);
    for (std::int64_t t = 0; t < r; ++t) {
      GroupElement s = GroupElement::at_index(q, uniform(rng, 1, q.order() - 1));
      sum = sum + s;
      f[i].branch.push_back(qm.lift(s));
    }
    if (!sum.is_zero()) f[i].branch.push_back(qm.lift(-sum));
    for (int t = 0; t < 2; ++t) f[i].eta.push_back(qm.lift(random_element(rng, q)));
  }
  AlgebraicDatum d(g, k, std::move(f));
  if (!validate_datum(d).well_formed()) return std::nullopt;
  return d;
}

inline AlgebraicDatum random_datum_retry(Rng& rng) {
  while (true)
    if (auto d = random_datum(rng)) return *d;
}

}  // namespace isoprod::testing
