#include "isoprod/aut0.hpp"

#include <algorithm>
#include <string>

#include "isoprod/checked.hpp"
#include "isoprod/hodge.hpp"

namespace isoprod {

Character AdmissibleCharacter::as_cube_character() const {
  std::array<GroupElement, 3> parts{as_element(triple[0]), as_element(triple[1]),
                                    as_element(triple[2])};
  return as_character(concat_elements(parts));
}

GroupElement cube_element(const AlgebraicDatum& d, const GroupElement& t1,
                          const GroupElement& t2, const GroupElement& t3) {
  for (const auto* t : {&t1, &t2, &t3})
    if (!(t->parent() == d.group()))
      throw Error(ErrorCode::kParentMismatch, "component is not an element of G");
  std::array<GroupElement, 3> parts{t1, t2, t3};
  return concat_elements(parts);
}

bool pre_admissible(const AlgebraicDatum& d, std::size_t i, const Character& chi) {
  if (!(chi.parent() == d.group()))
    throw Error(ErrorCode::kParentMismatch, "character of another group");
  for (const auto& k : d.kernel(i).basis_elements())
    if (!pairing(chi, k).is_zero()) return false;
  // The stabilizer union is the union of <sigma_j>, so chi is nontrivial on
  // it iff it is nontrivial on some sigma_j.
  for (const auto& sigma : d.input(i).branch)
    if (!pairing(chi, sigma).is_zero()) return true;
  return false;
}

std::vector<Character> pre_admissible_characters(const AlgebraicDatum& d, std::size_t i) {
  const Subgroup perp = annihilator(d.kernel(i));
  std::vector<Character> out;
  for (std::int64_t idx = 0; idx < d.group().order(); ++idx) {
    Character chi = Character::at_index(d.group(), idx);
    if (perp.contains(chi) && pre_admissible(d, i, chi)) out.push_back(std::move(chi));
  }
  return out;
}

AdmissibleSets admissible_characters(const AlgebraicDatum& d, Execution exec) {
  const AbelianGroup& g = d.group();
  std::array<std::vector<Character>, 3> pre;
  std::array<std::vector<bool>, 3> mask;
  for (std::size_t i = 0; i < 3; ++i) {
    pre[i] = pre_admissible_characters(d, i);
    mask[i].assign(static_cast<std::size_t>(g.order()), false);
    for (const auto& c : pre[i]) mask[i][c.index()] = true;
  }

  AdmissibleSets sets;
  // First kind: chi_3 = -(chi_1 + chi_2). Buckets per chi_1 keep the merged
  // order independent of the thread schedule.
  std::vector<std::vector<AdmissibleCharacter>> buckets(pre[0].size());
  const auto n1 = static_cast<std::int64_t>(pre[0].size());
  auto fill = [&](std::int64_t a) {
    for (const auto& c2 : pre[1]) {
      Character c3 = -(pre[0][a] + c2);
      if (mask[2][c3.index()])
        buckets[a].push_back({AdmissibleKind::kFirst, {pre[0][a], c2, std::move(c3)}});
    }
  };
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t a = 0; a < n1; ++a) fill(a);
  } else {
    for (std::int64_t a = 0; a < n1; ++a) fill(a);
  }
  for (auto& b : buckets)
    for (auto& x : b) sets.first.push_back(std::move(x));

  // Second kind: exactly one trivial slot, the other two conjugate.
  const Character zero = Character::zero(g);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      for (const auto& c : pre[i]) {
        Character minus = -c;
        if (!mask[j][minus.index()]) continue;
        std::array<Character, 3> t{zero, zero, zero};
        t[i] = c;
        t[j] = std::move(minus);
        sets.second.push_back({AdmissibleKind::kSecond, std::move(t)});
      }
  std::sort(sets.second.begin(), sets.second.end(),
            [](const AdmissibleCharacter& a, const AdmissibleCharacter& b) {
              return a.triple < b.triple;
            });
  return sets;
}

namespace {

Subgroup kernel_of(const AlgebraicDatum& d, const std::vector<Character>& chis) {
  Subgroup k = common_kernel(d.cube(), chis);
  if (!k.contains(d.k_delta()))
    throw Error(ErrorCode::kConsistency,
                "representation kernel does not contain K Delta_G");
  return k;
}

}  // namespace

Subgroup representation_kernel(const AlgebraicDatum& d, const AdmissibleSets& sets, int p,
                               int q) {
  if (p < 0 || q < 0 || p > 3 || q > 3)
    throw Error(ErrorCode::kInvalidArgument, "Hodge indices must lie in [0, 3]");
  if (p + q > 3) {
    p = 3 - p;
    q = 3 - q;
  }
  std::vector<Character> chis;
  if (p + q == 3)
    for (const auto& a : sets.first) chis.push_back(a.as_cube_character());
  if (p + q >= 2)
    for (const auto& a : sets.second) chis.push_back(a.as_cube_character());
  return kernel_of(d, chis);
}

Subgroup representation_kernel(const AlgebraicDatum& d, int p, int q) {
  return representation_kernel(d, admissible_characters(d), p, q);
}

Subgroup isotypic_kernel(const AlgebraicDatum& d, int p, int q) {
  std::vector<Character> chis;
  for (const auto& comp : isotypic_decomposition(d, p, q)) {
    std::array<GroupElement, 3> parts{as_element(comp.psi[0]), as_element(comp.psi[1]),
                                      as_element(comp.psi[2])};
    chis.push_back(as_character(concat_elements(parts)));
  }
  return kernel_of(d, chis);
}

std::string_view status_name(Aut0Status s) {
  switch (s) {
    case Aut0Status::kProven: return "Proven";
    case Aut0Status::kTrivialByRigidity: return "TrivialByRigidity";
    case Aut0Status::kKernelOnly: return "KernelOnly";
    case Aut0Status::kNonFreeKernelOnly: return "NonFreeKernelOnly";
  }
  return "unknown";
}

GroupElement canonical_coset_representative(const AlgebraicDatum& d, const GroupElement& tau) {
  const AbelianGroup& cube = d.cube();
  if (!(tau.parent() == cube))
    throw Error(ErrorCode::kParentMismatch, "coset representative must lie in G^3");
  const std::size_t k = d.group().rank();
  // Reorder blocks as (3, 1, 2) so the lexicographic minimum zeroes block 3.
  auto to_perm = [&](std::span<const std::int64_t> e) {
    std::vector<std::int64_t> out;
    out.insert(out.end(), e.begin() + 2 * k, e.end());
    out.insert(out.end(), e.begin(), e.begin() + 2 * k);
    return GroupElement(cube, std::move(out));
  };
  std::vector<GroupElement> gens;
  for (const auto& b : d.k_delta().basis_elements()) gens.push_back(to_perm(b.exponents()));
  const Subgroup permuted = Subgroup::generate(cube, gens);
  const GroupElement rep = permuted.canonical_representative(to_perm(tau.exponents()));
  const auto e = rep.exponents();
  std::vector<std::int64_t> back;
  back.insert(back.end(), e.begin() + k, e.end());
  back.insert(back.end(), e.begin(), e.begin() + k);
  return GroupElement(cube, std::move(back));
}

bool verify_generator(const AdmissibleSets& sets, const GroupElement& tau) {
  if (sets.size() == 0) return true;
  const AdmissibleCharacter& any = sets.first.empty() ? sets.second.front() : sets.first.front();
  const std::array<AbelianGroup, 3> groups{any.triple[0].parent(), any.triple[0].parent(),
                                           any.triple[0].parent()};
  const std::vector<GroupElement> parts = split_element(tau, groups);
  for (const auto* list : {&sets.first, &sets.second})
    for (const auto& a : *list) {
      RationalAngle total;
      for (std::size_t i = 0; i < 3; ++i) total = total + pairing(a.triple[i], parts[i]);
      if (!total.is_zero()) return false;
    }
  return true;
}

bool verify_generator(const AlgebraicDatum& d, const GroupElement& tau) {
  if (!(tau.parent() == d.cube()))
    throw Error(ErrorCode::kParentMismatch, "generator must lie in G^3");
  return verify_generator(admissible_characters(d), tau);
}

namespace {

bool is_two_elementary_rank_two(const InvariantFactors& f) {
  for (std::int64_t x : f.factors())
    if (x != 2) return false;
  return f.factors().size() <= 2;
}

}  // namespace

Aut0Result aut0(const AlgebraicDatum& d, Execution exec) {
  const DatumReport report = validate_datum(d);
  if (!report.well_formed())
    throw Error(ErrorCode::kInvalidArgument,
                "Aut0 needs valid generating vectors and minimal kernels");
  Aut0Result r;
  r.rigidity = rigidity_class(d, report);
  if (!report.freeness.pass) {
    r.status = Aut0Status::kNonFreeKernelOnly;
  } else if (r.rigidity == RigidityClass::kTrivialByRigidity) {
    r.status = Aut0Status::kTrivialByRigidity;
  } else if (r.rigidity == RigidityClass::kAut0Computable) {
    r.status = Aut0Status::kProven;
  } else {
    r.status = Aut0Status::kKernelOnly;
  }

  const AdmissibleSets sets = admissible_characters(d, exec);
  r.first_count = sets.first.size();
  r.second_count = sets.second.size();
  r.k_delta_order = d.k_delta().order();
  if (r.status == Aut0Status::kTrivialByRigidity) {
    r.kernel_order = r.k_delta_order;
    return r;
  }

  const Subgroup kernel = representation_kernel(d, sets, 3, 0);
  r.kernel_order = kernel.order();
  const QuotientMap qm(kernel, d.k_delta());
  r.invariant_factors = qm.invariant_factors();
  const auto reps = qm.generator_representatives();
  for (std::size_t t = 0; t < reps.size(); ++t) {
    // Among the unit multiples of the generator, keep the least canonical one.
    const std::int64_t order = r.invariant_factors.factors()[t];
    GroupElement rep = canonical_coset_representative(d, reps[t]);
    for (std::int64_t k = 2; k < order; ++k)
      if (checked::gcd(k, order) == 1)
        rep = std::min(rep, canonical_coset_representative(d, reps[t].scaled(k)));
    if (!verify_generator(sets, rep))
      throw Error(ErrorCode::kConsistency,
                  "generator " + rep.to_string() + " fails an admissible character");
    r.generators.push_back(std::move(rep));
  }

  if (r.status == Aut0Status::kProven && !is_two_elementary_rank_two(r.invariant_factors))
    throw Error(ErrorCode::kTheoremViolation,
                "q = 3 with cyclic kernels gave Aut0 = " + r.invariant_factors.to_string() +
                    ", which is not Z_2^k with k <= 2");
  const bool bound_applies = report.freeness.pass && report.q == 3 &&
                             report.flags.all_g_prime_one &&
                             report.flags.all_genus_at_least_two;
  if (bound_applies && r.invariant_factors.order() > 4)
    throw Error(ErrorCode::kTheoremViolation,
                "free q = 3 datum gave |Aut0| = " +
                    std::to_string(r.invariant_factors.order()) + " > 4");
  return r;
}

}  // namespace isoprod
