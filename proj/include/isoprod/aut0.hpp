#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "isoprod/abelian.hpp"
#include "isoprod/datum.hpp"
#include "isoprod/execution.hpp"

namespace isoprod {

enum class AdmissibleKind { kFirst, kSecond };

/// chi_1 (x) chi_2 (x) chi_3 with K_i in ker chi_i and chi_1 + chi_2 + chi_3 = 0.
struct AdmissibleCharacter {
  AdmissibleKind kind;
  std::array<Character, 3> triple;

  /// The same triple as one character of G^3.
  Character as_cube_character() const;
};

struct AdmissibleSets {
  std::vector<AdmissibleCharacter> first;
  std::vector<AdmissibleCharacter> second;

  std::size_t size() const noexcept { return first.size() + second.size(); }
};

/// K_i in ker chi and chi(sigma) != 1 for some sigma in the stabilizer union
/// of factor i (zero-based i).
bool pre_admissible(const AlgebraicDatum& d, std::size_t i, const Character& chi);

/// Pre-admissible characters for factor i, in character-index order.
std::vector<Character> pre_admissible_characters(const AlgebraicDatum& d, std::size_t i);

/// Full enumeration of I_1 and I_2, each sorted lexicographically by triple.
AdmissibleSets admissible_characters(const AlgebraicDatum& d,
                                     Execution exec = Execution::kParallel);

/// G_{p,q}: kernel of G^3 acting on H^{p,q}(X), from the admissible sets.
/// p + q = 3 uses I_1 and I_2, p + q = 2 uses I_2, p + q <= 1 gives G^3; the
/// rest follow from G_{p,q} = G_{3-p,3-q}. Always contains K Delta_G.
Subgroup representation_kernel(const AlgebraicDatum& d, const AdmissibleSets& sets, int p,
                               int q);
Subgroup representation_kernel(const AlgebraicDatum& d, int p, int q);

/// Kernel computed instead from the characters with nonzero isotypic
/// components of H^{p,q}; used to cross-check the admissible-set route.
Subgroup isotypic_kernel(const AlgebraicDatum& d, int p, int q);

enum class Aut0Status { kProven, kTrivialByRigidity, kKernelOnly, kNonFreeKernelOnly };

std::string_view status_name(Aut0Status s);

struct Aut0Result {
  InvariantFactors invariant_factors;
  /// Canonical coset representatives (tau_1, tau_2, tau_3) in G^3.
  std::vector<GroupElement> generators;
  Aut0Status status = Aut0Status::kKernelOnly;
  RigidityClass rigidity = RigidityClass::kUnsupported;
  std::size_t first_count = 0;
  std::size_t second_count = 0;
  std::int64_t kernel_order = 0;
  std::int64_t k_delta_order = 0;
};

/// (intersection of ker psi over I) / K Delta_G with generators and status.
/// Requires a well-formed datum (freeness may fail). Throws
/// Error(kTheoremViolation) if a Proven result is not 2-elementary of rank
/// <= 2, or if a free q = 3 result has order above 4.
Aut0Result aut0(const AlgebraicDatum& d, Execution exec = Execution::kParallel);

/// Coset representative with the third component zeroed, then
/// lexicographically least.
GroupElement canonical_coset_representative(const AlgebraicDatum& d, const GroupElement& tau);

/// True iff psi(tau) = 1 for every admissible psi. Independent of the
/// annihilator machinery.
bool verify_generator(const AlgebraicDatum& d, const GroupElement& tau);
bool verify_generator(const AdmissibleSets& sets, const GroupElement& tau);

/// Builds (tau_1, tau_2, tau_3) in G^3.
GroupElement cube_element(const AlgebraicDatum& d, const GroupElement& t1,
                          const GroupElement& t2, const GroupElement& t3);

}  // namespace isoprod
