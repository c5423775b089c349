#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoprod/abelian.hpp"

namespace isoprod {

/// Branch data (sigma_1..sigma_r; eta_1..eta_{2g'}) of a Galois cover C -> C/Q
/// with abelian group Q. Branch entries are kept in input order.
struct GeneratingVector {
  AbelianGroup group;
  std::int64_t g_prime = 0;
  std::vector<GroupElement> branch;
  std::vector<GroupElement> eta;
};

/// [g'; m_1, ..., m_r] with m sorted ascending.
struct BranchSignature {
  std::int64_t g_prime = 0;
  std::vector<std::int64_t> orders;

  friend bool operator==(const BranchSignature&, const BranchSignature&) = default;
  std::string to_string() const;
};

enum class VectorViolationKind {
  kNotGenerating,
  kTrivialBranchElement,
  kProductRelation,
  kEtaCount,
};

struct VectorViolation {
  VectorViolationKind kind;
  /// Offending branch position for kTrivialBranchElement.
  std::optional<std::size_t> position;
  std::string message;
};

struct ValidationOutcome {
  std::vector<VectorViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(VectorViolationKind kind) const;
};

std::string_view violation_name(VectorViolationKind kind);

ValidationOutcome validate_generating_vector(const GeneratingVector& v);

BranchSignature signature(const GeneratingVector& v);

/// Riemann-Hurwitz: 2g - 2 = |Q| (2g' - 2 + sum_j (1 - 1/m_j)).
std::int64_t genus(const GeneratingVector& v);

/// Union of the cyclic groups <sigma_j>, identity included, sorted.
std::vector<GroupElement> stabilizer_union(const GeneratingVector& v);

/// Dimension of the chi-eigenspace of H^{1,0}(C):
/// (g' - 1) + sum_j k_j/m_j + [chi trivial], where chi(sigma_j) = k_j/m_j.
std::int64_t cw_dimension(const GeneratingVector& v, const Character& chi);

/// cw_dimension for every character of Q, indexed by character index.
/// Checks that the entries sum to genus(v).
std::vector<std::int64_t> cw_table(const GeneratingVector& v);

}  // namespace isoprod
