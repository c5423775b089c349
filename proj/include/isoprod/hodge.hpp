#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "isoprod/abelian.hpp"
#include "isoprod/datum.hpp"
#include "isoprod/execution.hpp"

namespace isoprod {

/// D_i(chi) = dim W_i^chi for every character chi of G (indexed by
/// character index), supported on K_i^perp.
class EigenDimTable {
 public:
  EigenDimTable(AbelianGroup group, std::array<std::vector<std::int64_t>, 3> values);

  const AbelianGroup& group() const noexcept { return group_; }
  std::int64_t at(std::size_t i, std::int64_t chi_index) const { return values_[i][chi_index]; }
  std::int64_t at(std::size_t i, const Character& chi) const { return at(i, chi.index()); }
  const std::vector<std::int64_t>& row(std::size_t i) const { return values_[i]; }
  std::int64_t row_sum(std::size_t i) const;

 private:
  AbelianGroup group_;
  std::array<std::vector<std::int64_t>, 3> values_;
};

EigenDimTable eigendim_table(const AlgebraicDatum& d);

struct HodgeDiamond {
  std::array<std::array<std::int64_t, 4>, 4> h{};

  std::int64_t operator()(int p, int q) const { return h[p][q]; }
  /// 1 - h^{1,0} + h^{2,0} - h^{3,0}
  std::int64_t chi_o() const;
  /// sum (-1)^{p+q} h^{p,q}
  std::int64_t euler() const;
  bool has_symmetries() const;

  friend bool operator==(const HodgeDiamond&, const HodgeDiamond&) = default;
};

/// Fills the diamond from h^{1,0}, h^{2,0}, h^{3,0}, h^{1,1}, h^{2,1}.
HodgeDiamond make_diamond(std::int64_t h10, std::int64_t h20, std::int64_t h30,
                          std::int64_t h11, std::int64_t h21);

/// Multiplicities of the trivial character in the Kunneth pieces, by
/// convolution over the dual group.
HodgeDiamond hodge_diamond(const EigenDimTable& table, Execution exec = Execution::kParallel);

/// As above, and when the action is free, cross-checks chi(O_X) and e(X)
/// against the product formulas (Error(kConsistency) on mismatch).
HodgeDiamond hodge_diamond(const AlgebraicDatum& d, Execution exec = Execution::kParallel);

struct IsotypicComponent {
  std::array<Character, 3> psi;
  std::int64_t dimension = 0;
};

/// Components of H^{p,q}(X) under G^3/K Delta_G, for (p,q) in
/// {(3,0), (2,1), (2,0), (1,1)}. Sorted by psi; only positive dimensions.
std::vector<IsotypicComponent> isotypic_decomposition(const AlgebraicDatum& d, int p, int q);
std::vector<IsotypicComponent> isotypic_decomposition(const EigenDimTable& table, int p, int q);

}  // namespace isoprod
