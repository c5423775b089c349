#include "isoprod/covering.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "isoprod/checked.hpp"

namespace isoprod {

std::string BranchSignature::to_string() const {
  std::ostringstream os;
  os << '[' << g_prime << ';';
  for (std::size_t i = 0; i < orders.size(); ++i) os << (i ? "," : " ") << orders[i];
  os << ']';
  return os.str();
}

bool ValidationOutcome::has(VectorViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const VectorViolation& v) { return v.kind == kind; });
}

std::string_view violation_name(VectorViolationKind kind) {
  switch (kind) {
    case VectorViolationKind::kNotGenerating: return "not_generating";
    case VectorViolationKind::kTrivialBranchElement: return "trivial_branch_element";
    case VectorViolationKind::kProductRelation: return "product_relation";
    case VectorViolationKind::kEtaCount: return "eta_count";
  }
  return "unknown";
}

namespace {

void require_members(const GeneratingVector& v) {
  auto check = [&](const GroupElement& e) {
    if (!(e.parent() == v.group))
      throw Error(ErrorCode::kParentMismatch,
                  "generating vector entry " + e.to_string() + " is not in " +
                      v.group.to_string());
  };
  for (const auto& e : v.branch) check(e);
  for (const auto& e : v.eta) check(e);
}

}  // namespace

ValidationOutcome validate_generating_vector(const GeneratingVector& v) {
  require_members(v);
  ValidationOutcome out;
  if (v.g_prime < 0 || v.eta.size() != static_cast<std::size_t>(2 * v.g_prime))
    out.violations.push_back({VectorViolationKind::kEtaCount, std::nullopt,
                              "expected " + std::to_string(2 * v.g_prime) +
                                  " eta entries, got " + std::to_string(v.eta.size())});
  GroupElement sum = GroupElement::zero(v.group);
  for (std::size_t j = 0; j < v.branch.size(); ++j) {
    if (v.branch[j].is_zero())
      out.violations.push_back({VectorViolationKind::kTrivialBranchElement, j,
                                "branch entry " + std::to_string(j) + " is trivial"});
    sum = sum + v.branch[j];
  }
  if (!sum.is_zero())
    out.violations.push_back({VectorViolationKind::kProductRelation, std::nullopt,
                              "branch entries sum to " + sum.to_string()});
  std::vector<GroupElement> gens = v.branch;
  gens.insert(gens.end(), v.eta.begin(), v.eta.end());
  if (Subgroup::generate(v.group, gens).index() != 1)
    out.violations.push_back({VectorViolationKind::kNotGenerating, std::nullopt,
                              "branch and eta entries do not generate " +
                                  v.group.to_string()});
  return out;
}

BranchSignature signature(const GeneratingVector& v) {
  BranchSignature s{v.g_prime, {}};
  for (const auto& e : v.branch) s.orders.push_back(e.order());
  std::sort(s.orders.begin(), s.orders.end());
  return s;
}

std::int64_t genus(const GeneratingVector& v) {
  require_members(v);
  const std::int64_t q = v.group.order();
  std::int64_t total = checked::mul(q, 2 * v.g_prime - 2);
  for (const auto& e : v.branch)
    total = checked::add(total, q - q / e.order());
  if (total % 2 != 0 || total < -2)
    throw Error(ErrorCode::kConsistency,
                "Riemann-Hurwitz gives 2g-2 = " + std::to_string(total));
  return total / 2 + 1;
}

std::vector<GroupElement> stabilizer_union(const GeneratingVector& v) {
  require_members(v);
  std::set<GroupElement> s;
  s.insert(GroupElement::zero(v.group));
  for (const auto& sigma : v.branch) {
    GroupElement x = sigma;
    while (!x.is_zero()) {
      s.insert(x);
      x = x + sigma;
    }
  }
  return {s.begin(), s.end()};
}

std::int64_t cw_dimension(const GeneratingVector& v, const Character& chi) {
  if (!(chi.parent() == v.group))
    throw Error(ErrorCode::kParentMismatch, "character of another group");
  const std::int64_t q = v.group.order();
  // sum_j k_j / m_j, scaled by |Q| (each m_j divides |Q|).
  std::int64_t scaled = 0;
  for (const auto& sigma : v.branch) {
    const std::int64_t m = sigma.order();
    const std::int64_t k = pairing(chi, sigma).numerator_over(m);
    scaled = checked::add(scaled, checked::mul(k, q / m));
  }
  if (scaled % q != 0)
    throw Error(ErrorCode::kConsistency,
                "non-integral eigenspace dimension for character " + chi.to_string());
  const std::int64_t d = v.g_prime - 1 + scaled / q + (chi.is_zero() ? 1 : 0);
  if (d < 0)
    throw Error(ErrorCode::kConsistency,
                "negative eigenspace dimension for character " + chi.to_string());
  return d;
}

std::vector<std::int64_t> cw_table(const GeneratingVector& v) {
  const std::int64_t q = v.group.order();
  std::vector<std::int64_t> table(static_cast<std::size_t>(q));
  std::int64_t sum = 0;
  for (std::int64_t i = 0; i < q; ++i) {
    table[i] = cw_dimension(v, Character::at_index(v.group, i));
    sum += table[i];
  }
  const std::int64_t g = genus(v);
  if (sum != g)
    throw Error(ErrorCode::kConsistency,
                "eigenspace dimensions sum to " + std::to_string(sum) +
                    " but the genus is " + std::to_string(g));
  return table;
}

}  // namespace isoprod
