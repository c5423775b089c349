#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "isoprod/abelian.hpp"
#include "isoprod/covering.hpp"

namespace isoprod {

/// Generating-vector entries for one curve, given as representatives in G.
struct FactorInput {
  std::int64_t g_prime = 1;
  std::vector<GroupElement> branch;
  std::vector<GroupElement> eta;
};

/// (G, K_1, K_2, K_3, V_1, V_2, V_3) for a threefold (C_1 x C_2 x C_3)/G of
/// unmixed type. Construction checks only structure; use validate_datum for
/// the mathematical conditions.
class AlgebraicDatum {
 public:
  /// Throws Error(kStructural) naming the first malformed field, and
  /// Error(kArithmeticOverflow) when |G|^3 does not fit in 63 bits.
  AlgebraicDatum(AbelianGroup group, std::array<Subgroup, 3> kernels,
                 std::array<FactorInput, 3> factors);

  const AbelianGroup& group() const noexcept { return group_; }
  const Subgroup& kernel(std::size_t i) const { return kernels_.at(i); }
  const FactorInput& input(std::size_t i) const { return inputs_.at(i); }
  /// G -> G/K_i.
  const QuotientMap& quotient(std::size_t i) const { return quotients_.at(i); }
  /// V_i over G/K_i.
  const GeneratingVector& vector(std::size_t i) const { return vectors_.at(i); }

  /// G x G x G.
  const AbelianGroup& cube() const noexcept { return cube_; }
  /// K Delta_G = (K_1 x K_2 x K_3) + Delta_G inside G^3.
  const Subgroup& k_delta() const noexcept { return k_delta_; }

 private:
  AbelianGroup group_;
  std::array<Subgroup, 3> kernels_;
  std::array<FactorInput, 3> inputs_;
  std::vector<QuotientMap> quotients_;
  std::array<GeneratingVector, 3> vectors_;
  AbelianGroup cube_;
  Subgroup k_delta_;
};

struct MinimalityCheck {
  bool pass = true;
  /// Zero-based pair (i, j) with K_i cap K_j nontrivial.
  std::optional<std::pair<int, int>> witness;
};

struct FreenessCheck {
  bool pass = true;
  /// Least nonidentity g lying in all three stabilizer preimages.
  std::optional<GroupElement> witness;
};

struct HypothesisFlags {
  bool kernels_cyclic = false;
  bool all_g_prime_one = false;
  bool all_genus_at_least_two = false;
};

struct DatumReport {
  MinimalityCheck minimality;
  FreenessCheck freeness;
  std::array<ValidationOutcome, 3> vectors;
  /// Present when all three generating vectors are valid.
  std::optional<std::array<std::int64_t, 3>> genera;
  std::int64_t q = 0;
  HypothesisFlags flags;

  bool vectors_valid() const;
  /// Passes every condition except possibly freeness (a product-quotient).
  bool well_formed() const { return vectors_valid() && minimality.pass; }
  /// Defines a threefold isogenous to a product.
  bool is_valid() const {
    return well_formed() && freeness.pass && flags.all_genus_at_least_two;
  }
};

DatumReport validate_datum(const AlgebraicDatum& d);

/// Preimage in G of stabilizer_union(V_i), as a membership mask over
/// element indices of G.
std::vector<bool> stabilizer_preimage_mask(const AlgebraicDatum& d, std::size_t i);

struct NumericalInvariants {
  std::array<std::int64_t, 3> genera{};
  std::int64_t chi_o = 0;
  std::int64_t euler = 0;
  std::int64_t k_cubed = 0;
};

/// chi(O_X) = -prod(g_i - 1)/|G|, e = prod(2 - 2g_i)/|G|, K^3 = 48 prod(g_i - 1)/|G|.
/// Throws Error(kConsistency) on a non-integral value.
NumericalInvariants invariants(const AlgebraicDatum& d);

enum class RigidityClass {
  kTrivialByRigidity,
  kAut0Computable,
  kKernelOnly,
  kUnsupported,
};

std::string_view rigidity_name(RigidityClass c);

RigidityClass rigidity_class(const AlgebraicDatum& d, const DatumReport& report);
RigidityClass rigidity_class(const AlgebraicDatum& d);

}  // namespace isoprod
