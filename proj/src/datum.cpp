#include "isoprod/datum.hpp"

#include <algorithm>
#include <string>

#include "isoprod/checked.hpp"

namespace isoprod {

namespace {

[[noreturn]] void structural(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::kStructural, field + ": " + why);
}

void require_in(const AbelianGroup& g, const GroupElement& e, const std::string& field) {
  if (!(e.parent() == g))
    structural(field, "element " + e.to_string() + " is not in " + g.to_string());
}

}  // namespace

AlgebraicDatum::AlgebraicDatum(AbelianGroup group, std::array<Subgroup, 3> kernels,
                               std::array<FactorInput, 3> factors)
    : group_(std::move(group)), kernels_(std::move(kernels)), inputs_(std::move(factors)) {
  const std::int64_t n = group_.order();
  checked::mul(checked::mul(n, n), n);  // |G^3| must be representable
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string where = "factor " + std::to_string(i + 1);
    if (!(kernels_[i].ambient() == group_))
      structural("kernel " + std::to_string(i + 1), "not a subgroup of " + group_.to_string());
    if (inputs_[i].g_prime < 0) structural(where, "g_prime must be >= 0");
    for (const auto& e : inputs_[i].branch) require_in(group_, e, where + " branch");
    for (const auto& e : inputs_[i].eta) require_in(group_, e, where + " eta");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    quotients_.emplace_back(Subgroup::whole(group_), kernels_[i]);
    const QuotientMap& qm = quotients_.back();
    GeneratingVector& v = vectors_[i];
    v.group = qm.quotient();
    v.g_prime = inputs_[i].g_prime;
    for (const auto& e : inputs_[i].branch) v.branch.push_back(qm.project(e));
    for (const auto& e : inputs_[i].eta) v.eta.push_back(qm.project(e));
  }
  const std::array<AbelianGroup, 3> copies{group_, group_, group_};
  cube_ = direct_product(copies);
  k_delta_ = subgroup_sum(product_subgroup(kernels_), diagonal_subgroup(group_, 3));
}

bool DatumReport::vectors_valid() const {
  return std::all_of(vectors.begin(), vectors.end(),
                     [](const ValidationOutcome& o) { return o.ok(); });
}

std::vector<bool> stabilizer_preimage_mask(const AlgebraicDatum& d, std::size_t i) {
  const QuotientMap& qm = d.quotient(i);
  std::vector<bool> in_stab(static_cast<std::size_t>(qm.quotient().order()), false);
  for (const auto& s : stabilizer_union(d.vector(i))) in_stab[s.index()] = true;
  std::vector<bool> mask(static_cast<std::size_t>(d.group().order()), false);
  for (std::int64_t idx = 0; idx < d.group().order(); ++idx)
    mask[idx] = in_stab[qm.project(GroupElement::at_index(d.group(), idx)).index()];
  return mask;
}

DatumReport validate_datum(const AlgebraicDatum& d) {
  DatumReport r;
  for (int i = 0; i < 3 && r.minimality.pass; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (subgroup_intersection(d.kernel(i), d.kernel(j)).order() != 1) {
        r.minimality = {false, std::make_pair(i, j)};
        break;
      }

  for (std::size_t i = 0; i < 3; ++i) r.vectors[i] = validate_generating_vector(d.vector(i));

  r.q = 0;
  for (std::size_t i = 0; i < 3; ++i) r.q += d.input(i).g_prime;

  if (r.vectors_valid()) {
    std::array<std::int64_t, 3> g{};
    for (std::size_t i = 0; i < 3; ++i) g[i] = genus(d.vector(i));
    r.genera = g;
    r.flags.all_genus_at_least_two =
        std::all_of(g.begin(), g.end(), [](std::int64_t x) { return x >= 2; });

    std::array<std::vector<bool>, 3> masks;
    for (std::size_t i = 0; i < 3; ++i) masks[i] = stabilizer_preimage_mask(d, i);
    for (std::int64_t idx = 1; idx < d.group().order(); ++idx)
      if (masks[0][idx] && masks[1][idx] && masks[2][idx]) {
        r.freeness = {false, GroupElement::at_index(d.group(), idx)};
        break;
      }
  }

  r.flags.kernels_cyclic = d.kernel(0).is_cyclic() && d.kernel(1).is_cyclic() &&
                           d.kernel(2).is_cyclic();
  r.flags.all_g_prime_one = d.input(0).g_prime == 1 && d.input(1).g_prime == 1 &&
                            d.input(2).g_prime == 1;
  return r;
}

NumericalInvariants invariants(const AlgebraicDatum& d) {
  NumericalInvariants inv;
  std::int64_t prod = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!validate_generating_vector(d.vector(i)).ok())
      throw Error(ErrorCode::kInvalidArgument,
                  "invariants need valid generating vectors (factor " +
                      std::to_string(i + 1) + ")");
    inv.genera[i] = genus(d.vector(i));
    prod = checked::mul(prod, inv.genera[i] - 1);
  }
  const std::int64_t n = d.group().order();
  const std::int64_t euler_num = checked::mul(-8, prod);
  if (prod % n != 0 || euler_num % n != 0)
    throw Error(ErrorCode::kConsistency,
                "|G| = " + std::to_string(n) + " does not divide prod(g_i - 1) = " +
                    std::to_string(prod) + "; the action cannot be free");
  inv.chi_o = -(prod / n);
  inv.euler = euler_num / n;
  inv.k_cubed = checked::mul(48, prod / n);
  return inv;
}

std::string_view rigidity_name(RigidityClass c) {
  switch (c) {
    case RigidityClass::kTrivialByRigidity: return "TrivialByRigidity";
    case RigidityClass::kAut0Computable: return "Aut0Computable";
    case RigidityClass::kKernelOnly: return "KernelOnly";
    case RigidityClass::kUnsupported: return "Unsupported";
  }
  return "unknown";
}

RigidityClass rigidity_class(const AlgebraicDatum& d, const DatumReport& report) {
  for (std::size_t i = 0; i < 3; ++i)
    if (d.input(i).g_prime == 0) return RigidityClass::kUnsupported;
  if (report.q >= 4) return RigidityClass::kTrivialByRigidity;
  if (report.q <= 2) return RigidityClass::kUnsupported;
  return report.flags.kernels_cyclic ? RigidityClass::kAut0Computable
                                     : RigidityClass::kKernelOnly;
}

RigidityClass rigidity_class(const AlgebraicDatum& d) {
  return rigidity_class(d, validate_datum(d));
}

}  // namespace isoprod
