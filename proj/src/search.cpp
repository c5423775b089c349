#include "isoprod/search.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <limits>
#include <numeric>
#include <random>

#include "isoprod/checked.hpp"
#include "isoprod/document.hpp"

namespace isoprod {

namespace {

constexpr std::int64_t kSaturated = std::numeric_limits<std::int64_t>::max();

std::int64_t sat_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}

using Mask = std::vector<std::uint64_t>;

struct VectorCandidate {
  FactorInput input;
  // Preimage in G of the stabilizer union, one bit per element index.
  std::shared_ptr<const Mask> mask;
};

std::vector<std::array<Subgroup, 3>> kernel_triples(const SearchSpec& spec,
                                                    const AbelianGroup& g) {
  std::vector<std::array<Subgroup, 3>> out;
  auto minimal = [](const std::array<Subgroup, 3>& k) {
    return subgroup_intersection(k[0], k[1]).order() == 1 &&
           subgroup_intersection(k[0], k[2]).order() == 1 &&
           subgroup_intersection(k[1], k[2]).order() == 1;
  };
  if (spec.kernel_policy == KernelPolicy::kExplicit) {
    for (const auto& triple : spec.kernels) {
      std::array<Subgroup, 3> k;
      for (std::size_t i = 0; i < 3; ++i) {
        std::vector<GroupElement> gens;
        for (const auto& e : triple[i]) gens.emplace_back(g, e);
        k[i] = Subgroup::generate(g, gens);
      }
      if (minimal(k)) out.push_back(std::move(k));
    }
    return out;
  }
  std::vector<Subgroup> cyclic;
  for (const auto& x : all_elements(g)) {
    Subgroup h = Subgroup::generate(g, std::span(&x, 1));
    if (std::find(cyclic.begin(), cyclic.end(), h) == cyclic.end()) cyclic.push_back(std::move(h));
  }
  for (const auto& a : cyclic)
    for (const auto& b : cyclic)
      for (const auto& c : cyclic) {
        std::array<Subgroup, 3> k{a, b, c};
        if (minimal(k)) out.push_back(std::move(k));
      }
  return out;
}

std::int64_t multiset_count(std::int64_t items, int max_len) {
  // sum_{k <= max_len} C(items - 1 + k, k)
  std::int64_t total = 0, term = 1;
  for (int k = 0; k <= max_len; ++k) {
    if (k > 0) {
      if (items == 0) break;
      // C(items-1+k, k) = C(items-2+k, k-1) * (items-1+k) / k
      const std::int64_t num = sat_mul(term, items - 1 + k);
      term = num == kSaturated ? kSaturated : num / k;
    }
    total = sat_add(total, term);
  }
  return total;
}

std::int64_t power(std::int64_t base, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t k = 0; k < e; ++k) r = sat_mul(r, base);
  return r;
}

std::int64_t estimate_for(const SearchSpec& spec, const std::vector<std::array<Subgroup, 3>>& ks) {
  std::int64_t total = 0;
  for (const auto& k : ks) {
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < 3; ++i) {
      const std::int64_t q = k[i].index();
      std::int64_t n = multiset_count(q - 1, spec.max_branch);
      if (spec.eta == EtaPolicy::kAll) n = sat_mul(n, power(q, 2 * spec.g_prime[i]));
      prod = sat_mul(prod, n);
    }
    total = sat_add(total, prod);
  }
  return total;
}

class CandidateBuilder {
 public:
  CandidateBuilder(const SearchSpec& spec, const AbelianGroup& g, const Subgroup& k,
                   std::int64_t g_prime)
      : spec_(spec), g_(g), qm_(Subgroup::whole(g), k), g_prime_(g_prime) {
    const AbelianGroup& q = qm_.quotient();
    for (auto& x : all_elements(q))
      if (!x.is_zero() && (!spec.max_branch_order || x.order() <= *spec.max_branch_order))
        pool_.push_back(std::move(x));
  }

  std::vector<VectorCandidate> run() {
    std::vector<GroupElement> branch;
    extend(branch, 0, GroupElement::zero(qm_.quotient()));
    return std::move(out_);
  }

 private:
  void extend(std::vector<GroupElement>& branch, std::size_t from, const GroupElement& sum) {
    if (sum.is_zero()) accept(branch);
    if (static_cast<int>(branch.size()) == spec_.max_branch) return;
    for (std::size_t j = from; j < pool_.size(); ++j) {
      branch.push_back(pool_[j]);
      extend(branch, j, sum + pool_[j]);
      branch.pop_back();
    }
  }

  void accept(const std::vector<GroupElement>& branch) {
    const AbelianGroup& q = qm_.quotient();
    const std::size_t neta = static_cast<std::size_t>(2 * g_prime_);
    GeneratingVector v{q, g_prime_, branch,
                       std::vector<GroupElement>(neta, GroupElement::zero(q))};
    if (genus(v) < 2) return;

    std::vector<std::vector<GroupElement>> etas;
    std::vector<std::int64_t> digits(neta, 0);
    while (true) {
      std::vector<GroupElement> gens = branch;
      for (std::int64_t d : digits) gens.push_back(GroupElement::at_index(q, d));
      if (Subgroup::generate(q, gens).order() == q.order()) {
        etas.emplace_back(gens.begin() + static_cast<std::ptrdiff_t>(branch.size()), gens.end());
        if (spec_.eta == EtaPolicy::kCanonical) break;
      }
      std::size_t pos = neta;
      while (pos > 0 && ++digits[pos - 1] == q.order()) digits[--pos] = 0;
      if (pos == 0) break;
    }
    if (etas.empty()) return;

    v.eta = etas.front();
    const auto stab = stabilizer_union(v);
    std::vector<bool> in_stab(static_cast<std::size_t>(q.order()), false);
    for (const auto& s : stab) in_stab[s.index()] = true;
    auto mask = std::make_shared<Mask>((g_.order() + 63) / 64, 0);
    for (std::int64_t idx = 0; idx < g_.order(); ++idx)
      if (in_stab[qm_.project(GroupElement::at_index(g_, idx)).index()])
        (*mask)[idx / 64] |= std::uint64_t{1} << (idx % 64);

    std::vector<GroupElement> lifted_branch;
    for (const auto& s : branch) lifted_branch.push_back(lift(s));
    for (const auto& eta : etas) {
      FactorInput f{g_prime_, lifted_branch, {}};
      for (const auto& e : eta) f.eta.push_back(lift(e));
      out_.push_back({std::move(f), mask});
    }
  }

  // Lex-least preimage, so emitted data do not depend on the Smith transform.
  GroupElement lift(const GroupElement& q) const {
    return qm_.denominator().canonical_representative(qm_.lift(q));
  }

  const SearchSpec& spec_;
  AbelianGroup g_;
  QuotientMap qm_;
  std::int64_t g_prime_;
  std::vector<GroupElement> pool_;
  std::vector<VectorCandidate> out_;
};

bool meets_only_identity(const Mask& a, const Mask& b, const Mask& c) {
  if ((a[0] & b[0] & c[0]) != 1) return false;
  for (std::size_t w = 1; w < a.size(); ++w)
    if ((a[w] & b[w] & c[w]) != 0) return false;
  return true;
}

struct WorkItem {
  std::size_t triple;
  std::size_t first;
};

}  // namespace

std::int64_t estimate_space(const SearchSpec& spec) {
  const AbelianGroup g(spec.group);
  return estimate_for(spec, kernel_triples(spec, g));
}

std::vector<AlgebraicDatum> enumerate_data(const SearchSpec& spec, Execution exec) {
  const AbelianGroup g(spec.group);
  checked::mul(checked::mul(g.order(), g.order()), g.order());
  const auto triples = kernel_triples(spec, g);
  const std::int64_t estimate = estimate_for(spec, triples);
  if (estimate > spec.cap)
    throw Error(ErrorCode::kSearchCap, "estimated " + std::to_string(estimate) +
                                           " candidates exceeds the cap of " +
                                           std::to_string(spec.cap));

  // Candidate vectors depend only on (kernel, g'), so build each list once.
  std::vector<Subgroup> kernels;
  std::vector<std::array<std::size_t, 3>> slots(triples.size());
  for (std::size_t t = 0; t < triples.size(); ++t)
    for (std::size_t i = 0; i < 3; ++i) {
      auto it = std::find(kernels.begin(), kernels.end(), triples[t][i]);
      slots[t][i] = static_cast<std::size_t>(it - kernels.begin());
      if (it == kernels.end()) kernels.push_back(triples[t][i]);
    }
  std::vector<std::int64_t> g_primes{spec.g_prime.begin(), spec.g_prime.end()};
  std::sort(g_primes.begin(), g_primes.end());
  g_primes.erase(std::unique(g_primes.begin(), g_primes.end()), g_primes.end());
  auto gp_slot = [&](std::size_t i) {
    return static_cast<std::size_t>(
        std::find(g_primes.begin(), g_primes.end(), spec.g_prime[i]) -
        g_primes.begin());
  };
  const std::size_t ncache = kernels.size() * g_primes.size();
  std::vector<std::vector<VectorCandidate>> cache(ncache);
  auto build = [&](std::int64_t c) {
    const std::size_t k = static_cast<std::size_t>(c) / g_primes.size();
    const std::size_t p = static_cast<std::size_t>(c) % g_primes.size();
    cache[c] = CandidateBuilder(spec, g, kernels[k], g_primes[p]).run();
  };
  const auto ncache_i = static_cast<std::int64_t>(ncache);
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < ncache_i; ++c) build(c);
  } else {
    for (std::int64_t c = 0; c < ncache_i; ++c) build(c);
  }
  auto list = [&](std::size_t t, std::size_t i) -> const std::vector<VectorCandidate>& {
    return cache[slots[t][i] * g_primes.size() + gp_slot(i)];
  };

  std::vector<WorkItem> work;
  for (std::size_t t = 0; t < triples.size(); ++t)
    for (std::size_t a = 0; a < list(t, 0).size(); ++a) work.push_back({t, a});

  std::vector<std::vector<AlgebraicDatum>> buckets(work.size());
  auto process = [&](std::size_t w) {
    const auto [t, a] = work[w];
    const auto& c0 = list(t, 0)[a];
    for (const auto& c1 : list(t, 1))
      for (const auto& c2 : list(t, 2))
        if (meets_only_identity(*c0.mask, *c1.mask, *c2.mask))
          buckets[w].emplace_back(g, triples[t],
                                  std::array<FactorInput, 3>{c0.input, c1.input, c2.input});
  };
  const auto nwork = static_cast<std::int64_t>(work.size());
  if (exec == Execution::kParallel) {
    std::vector<std::size_t> order(work.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(spec.seed);
    std::shuffle(order.begin(), order.end(), rng);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t w = 0; w < nwork; ++w) {
      try {
        process(order[w]);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::int64_t w = 0; w < nwork; ++w) process(static_cast<std::size_t>(w));
  }

  std::vector<AlgebraicDatum> out;
  for (auto& b : buckets)
    for (auto& d : b) out.push_back(std::move(d));
  return out;
}

Survey survey(const SearchSpec& spec, Execution exec) {
  Survey s;
  s.estimate = estimate_space(spec);
  s.data = enumerate_data(spec, exec);
  const auto n = static_cast<std::int64_t>(s.data.size());
  std::vector<std::optional<Aut0Result>> results(s.data.size());
  std::vector<std::exception_ptr> errors(s.data.size());
  auto one = [&](std::int64_t k) {
    try {
      results[k] = aut0(s.data[k], Execution::kSerial);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };
  if (exec == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < n; ++k) one(k);
  } else {
    for (std::int64_t k = 0; k < n; ++k) one(k);
  }
  for (std::size_t k = 0; k < errors.size(); ++k) {
    if (!errors[k]) continue;
    try {
      std::rethrow_exception(errors[k]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTheoremViolation) throw;
      throw Error(ErrorCode::kTheoremViolation,
                  std::string(e.what()) + "\ndatum: " + document::datum_json(s.data[k]).dump());
    }
  }

  for (std::size_t k = 0; k < results.size(); ++k) {
    Aut0Result& r = *results[k];
    auto it = std::find_if(s.histogram.begin(), s.histogram.end(),
                           [&](const SurveyBin& b) { return b.factors == r.invariant_factors; });
    if (it == s.histogram.end()) {
      s.histogram.push_back({r.invariant_factors, 0, {}, k});
      it = s.histogram.end() - 1;
    }
    ++it->count;
    ++it->by_status[r.status];
    const std::int64_t ord = r.invariant_factors.order();
    if (!s.smallest || ord < s.results[*s.smallest].invariant_factors.order()) s.smallest = k;
    if (!s.largest || ord > s.results[*s.largest].invariant_factors.order()) s.largest = k;
    s.results.push_back(std::move(r));
  }
  std::sort(s.histogram.begin(), s.histogram.end(),
            [](const SurveyBin& a, const SurveyBin& b) { return a.factors < b.factors; });
  return s;
}

}  // namespace isoprod
