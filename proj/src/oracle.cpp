#include "isoprod/oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "isoprod/aut0.hpp"
#include "isoprod/checked.hpp"

namespace isoprod::oracle {

namespace {

// Mixed-radix arithmetic on element indices, independent of the Exponents
// class. The first coordinate is the most significant digit.
class Digits {
 public:
  explicit Digits(const AbelianGroup& g)
      : orders_(g.orders().begin(), g.orders().end()), order_(g.order()),
        exponent_(g.exponent()) {}

  std::vector<std::int64_t> split(std::int64_t idx) const {
    std::vector<std::int64_t> e(orders_.size());
    for (std::size_t j = orders_.size(); j-- > 0;) {
      e[j] = idx % orders_[j];
      idx /= orders_[j];
    }
    return e;
  }
  std::int64_t join(const std::vector<std::int64_t>& e) const {
    std::int64_t idx = 0;
    for (std::size_t j = 0; j < orders_.size(); ++j) idx = idx * orders_[j] + e[j];
    return idx;
  }
  std::int64_t add(std::int64_t a, std::int64_t b) const {
    auto x = split(a), y = split(b);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = (x[j] + y[j]) % orders_[j];
    return join(x);
  }
  std::int64_t neg(std::int64_t a) const {
    auto x = split(a);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = (orders_[j] - x[j]) % orders_[j];
    return join(x);
  }
  // chi(g) as a numerator over the exponent, in [0, exponent).
  std::int64_t pair(std::int64_t chi, std::int64_t g) const {
    auto a = split(chi), x = split(g);
    std::int64_t v = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
      v = (v + (a[j] * x[j] % orders_[j]) * (exponent_ / orders_[j])) % exponent_;
    return v;
  }
  std::int64_t order() const { return order_; }
  std::int64_t exponent() const { return exponent_; }

 private:
  std::vector<std::int64_t> orders_;
  std::int64_t order_;
  std::int64_t exponent_;
};

void require_scale(std::int64_t n, std::int64_t cap, const char* what) {
  if (n > cap)
    throw Error(ErrorCode::kOracleScale, std::string(what) + " of size " + std::to_string(n) +
                                             " exceeds the oracle cap " + std::to_string(cap));
}

ElementSet from_unordered(const AbelianGroup& g, const std::unordered_set<std::int64_t>& s) {
  std::vector<std::int64_t> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return ElementSet(g, std::move(v));
}

void require_same(const AbelianGroup& a, const AbelianGroup& b) {
  if (!(a == b)) throw Error(ErrorCode::kParentMismatch, "element sets in different groups");
}

std::int64_t element_index(const GroupElement& g) {
  std::vector<std::int64_t> e(g.exponents().begin(), g.exponents().end());
  return Digits(g.parent()).join(e);
}

}  // namespace

ElementSet::ElementSet(AbelianGroup ambient, std::vector<std::int64_t> sorted_indices)
    : ambient_(std::move(ambient)), members_(std::move(sorted_indices)) {}

bool ElementSet::contains(std::int64_t index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

bool ElementSet::contains(const GroupElement& g) const {
  require_same(ambient_, g.parent());
  return contains(element_index(g));
}

std::vector<GroupElement> ElementSet::elements() const {
  const Digits dg(ambient_);
  std::vector<GroupElement> out;
  out.reserve(members_.size());
  for (std::int64_t i : members_) out.emplace_back(ambient_, dg.split(i));
  return out;
}

ElementSet closure(const AbelianGroup& g, const std::vector<GroupElement>& gens,
                   std::int64_t cap) {
  const Digits dg(g);
  std::vector<std::int64_t> gi;
  for (const auto& x : gens) {
    require_same(g, x.parent());
    gi.push_back(element_index(x));
  }
  std::unordered_set<std::int64_t> seen{0};
  std::vector<std::int64_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (std::int64_t a : frontier)
      for (std::int64_t b : gi) {
        const std::int64_t c = dg.add(a, b);
        if (seen.insert(c).second) {
          require_scale(static_cast<std::int64_t>(seen.size()), cap, "subgroup");
          next.push_back(c);
        }
      }
    frontier = std::move(next);
  }
  return from_unordered(g, seen);
}

ElementSet enumerate_subgroup(const Subgroup& h, std::int64_t cap) {
  return closure(h.ambient(), h.generators(), cap);
}

ElementSet whole_group(const AbelianGroup& g, std::int64_t cap) {
  require_scale(g.order(), cap, "group");
  std::vector<std::int64_t> all(static_cast<std::size_t>(g.order()));
  for (std::int64_t i = 0; i < g.order(); ++i) all[i] = i;
  return ElementSet(g, std::move(all));
}

ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  require_same(a.ambient(), b.ambient());
  std::vector<std::int64_t> out;
  std::set_intersection(a.indices().begin(), a.indices().end(), b.indices().begin(),
                        b.indices().end(), std::back_inserter(out));
  return ElementSet(a.ambient(), std::move(out));
}

ElementSet sum(const ElementSet& a, const ElementSet& b, std::int64_t cap) {
  require_same(a.ambient(), b.ambient());
  const Digits dg(a.ambient());
  std::unordered_set<std::int64_t> s;
  for (std::int64_t x : a.indices())
    for (std::int64_t y : b.indices()) {
      s.insert(dg.add(x, y));
      require_scale(static_cast<std::int64_t>(s.size()), cap, "sum");
    }
  return from_unordered(a.ambient(), s);
}

ElementSet annihilator(const ElementSet& h, std::int64_t cap) {
  const Digits dg(h.ambient());
  require_scale(dg.order(), cap, "dual group");
  std::vector<std::int64_t> out;
  for (std::int64_t chi = 0; chi < dg.order(); ++chi) {
    bool kills = true;
    for (std::int64_t x : h.indices())
      if (dg.pair(chi, x) != 0) {
        kills = false;
        break;
      }
    if (kills) out.push_back(chi);
  }
  return ElementSet(h.ambient(), std::move(out));
}

std::vector<std::pair<std::int64_t, std::int64_t>> order_census(const ElementSet& a,
                                                               const ElementSet& b) {
  require_same(a.ambient(), b.ambient());
  for (std::int64_t x : b.indices())
    if (!a.contains(x))
      throw Error(ErrorCode::kInvalidArgument, "denominator is not contained in numerator");
  const Digits dg(a.ambient());
  std::map<std::int64_t, std::int64_t> census;
  for (std::int64_t x : a.indices()) {
    std::int64_t k = 1;
    for (std::int64_t acc = x; !b.contains(acc); acc = dg.add(acc, x)) ++k;
    ++census[k];
  }
  // Each coset was counted once per member.
  const auto bsize = static_cast<std::int64_t>(b.size());
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (auto [ord, count] : census) out.emplace_back(ord, count / bsize);
  return out;
}

InvariantFactors factors_from_census(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& census) {
  std::vector<std::int64_t> primes;
  for (auto [ord, count] : census) {
    std::int64_t m = ord;
    for (std::int64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        primes.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) primes.push_back(m);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  // For Q = sum Z_{p^{e_t}} (p-part), the p^k-torsion has p^{sum min(k, e_t)}
  // elements, so the number of e_t >= k is log_p of consecutive ratios.
  std::vector<std::vector<std::int64_t>> exps;  // per prime, descending
  for (std::int64_t p : primes) {
    auto torsion = [&](std::int64_t pk) {
      std::int64_t n = 0;
      for (auto [ord, count] : census)
        if (pk % ord == 0) n += count;
      return n;
    };
    std::vector<std::int64_t> ranks;  // ranks[k-1] = #{t : e_t >= k}
    std::int64_t prev = 1, pk = 1;
    while (true) {
      pk *= p;
      const std::int64_t now = torsion(pk);
      std::int64_t ratio = now / prev, r = 0;
      while (ratio > 1) {
        ratio /= p;
        ++r;
      }
      if (r == 0) break;
      ranks.push_back(r);
      prev = now;
    }
    std::vector<std::int64_t> e;
    for (std::size_t k = 0; k < ranks.size(); ++k) {
      const std::int64_t exactly = ranks[k] - (k + 1 < ranks.size() ? ranks[k + 1] : 0);
      for (std::int64_t t = 0; t < exactly; ++t) e.push_back(static_cast<std::int64_t>(k + 1));
    }
    std::sort(e.rbegin(), e.rend());
    exps.push_back(std::move(e));
  }
  std::size_t width = 0;
  for (const auto& e : exps) width = std::max(width, e.size());
  std::vector<std::int64_t> factors(width, 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi)
    for (std::size_t t = 0; t < exps[pi].size(); ++t)
      for (std::int64_t k = 0; k < exps[pi][t]; ++k) factors[t] *= primes[pi];
  std::reverse(factors.begin(), factors.end());
  return InvariantFactors(std::move(factors));
}

InvariantFactors brute_quotient(const ElementSet& a, const ElementSet& b) {
  return factors_from_census(order_census(a, b));
}

InvariantFactors brute_quotient(const AbelianGroup& g, const ElementSet& h, std::int64_t cap) {
  return brute_quotient(whole_group(g, cap), h);
}

ElementSet brute_kernel(const AbelianGroup& g, const std::vector<Character>& chis,
                        std::int64_t cap) {
  const Digits dg(g);
  require_scale(dg.order(), cap, "group");
  std::vector<std::int64_t> ci;
  for (const auto& c : chis) {
    require_same(g, c.parent());
    ci.push_back(element_index(as_element(c)));
  }
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < dg.order(); ++x) {
    bool in = true;
    for (std::int64_t c : ci)
      if (dg.pair(c, x) != 0) {
        in = false;
        break;
      }
    if (in) out.push_back(x);
  }
  return ElementSet(g, std::move(out));
}

namespace {

struct FactorSets {
  ElementSet kernel;
  // All multiples of the branch representatives, as indices in G.
  std::vector<std::int64_t> stabilizer;
};

FactorSets factor_sets(const AlgebraicDatum& d, std::size_t i) {
  const Digits dg(d.group());
  FactorSets f{enumerate_subgroup(d.kernel(i)), {}};
  for (const auto& s : d.input(i).branch) {
    const std::int64_t si = element_index(s);
    std::int64_t acc = si;
    for (std::int64_t k = 1; k <= dg.order(); ++k, acc = dg.add(acc, si)) {
      f.stabilizer.push_back(acc);
      if (acc == 0) break;
    }
  }
  return f;
}

bool kills(const Digits& dg, std::int64_t chi, const ElementSet& set) {
  for (std::int64_t x : set.indices())
    if (dg.pair(chi, x) != 0) return false;
  return true;
}

bool pre_admissible_index(const Digits& dg, const FactorSets& f, std::int64_t chi) {
  if (!kills(dg, chi, f.kernel)) return false;
  for (std::int64_t s : f.stabilizer)
    if (dg.pair(chi, s) != 0) return true;
  return false;
}

Character cube_character(const AlgebraicDatum& d, std::int64_t a, std::int64_t b,
                         std::int64_t c) {
  const Digits dg(d.group());
  std::vector<std::int64_t> e;
  for (std::int64_t x : {a, b, c}) {
    auto part = dg.split(x);
    e.insert(e.end(), part.begin(), part.end());
  }
  return Character(d.cube(), std::move(e));
}

}  // namespace

bool brute_pre_admissible(const AlgebraicDatum& d, std::size_t i, const Character& chi) {
  require_same(d.group(), chi.parent());
  return pre_admissible_index(Digits(d.group()), factor_sets(d, i),
                              element_index(as_element(chi)));
}

std::vector<Character> brute_admissible(const AlgebraicDatum& d, bool second_kind_only,
                                        std::int64_t cap) {
  const Digits dg(d.group());
  require_scale(checked::mul(dg.order(), dg.order()), cap, "character pairs");
  std::array<std::vector<bool>, 3> pre;
  for (std::size_t i = 0; i < 3; ++i) {
    const FactorSets f = factor_sets(d, i);
    pre[i].resize(static_cast<std::size_t>(dg.order()));
    for (std::int64_t chi = 0; chi < dg.order(); ++chi)
      pre[i][chi] = pre_admissible_index(dg, f, chi);
  }
  std::vector<Character> out;
  for (std::int64_t a = 0; a < dg.order(); ++a)
    for (std::int64_t b = 0; b < dg.order(); ++b) {
      const std::int64_t c = dg.neg(dg.add(a, b));
      const std::array<std::int64_t, 3> t{a, b, c};
      int trivial = 0;
      bool all_pre = true;
      for (std::size_t i = 0; i < 3; ++i) {
        if (t[i] == 0)
          ++trivial;
        else
          all_pre = all_pre && pre[i][t[i]];
      }
      if (!all_pre) continue;
      if ((trivial == 0 && !second_kind_only) || trivial == 1)
        out.push_back(cube_character(d, a, b, c));
    }
  return out;
}

ElementSet brute_representation_kernel(const AlgebraicDatum& d, int p, int q,
                                       std::int64_t cap) {
  if (p < 0 || q < 0 || p > 3 || q > 3)
    throw Error(ErrorCode::kInvalidArgument, "Hodge indices must lie in [0, 3]");
  if (p + q > 3) {
    p = 3 - p;
    q = 3 - q;
  }
  if (p + q <= 1) return whole_group(d.cube(), cap);
  return brute_kernel(d.cube(), brute_admissible(d, p + q == 2, cap), cap);
}

std::array<std::vector<std::int64_t>, 3> brute_eigendims(const AlgebraicDatum& d) {
  const Digits dg(d.group());
  std::array<std::vector<std::int64_t>, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const ElementSet kernel = enumerate_subgroup(d.kernel(i));
    std::vector<std::int64_t> branch;
    for (const auto& s : d.input(i).branch) branch.push_back(element_index(s));
    out[i].assign(static_cast<std::size_t>(dg.order()), 0);
    for (std::int64_t chi = 0; chi < dg.order(); ++chi) {
      if (!kills(dg, chi, kernel)) continue;
      std::int64_t total = 0;  // sum of chi(sigma_j), over the exponent
      for (std::int64_t s : branch) total += dg.pair(chi, s);
      if (total % dg.exponent() != 0)
        throw Error(ErrorCode::kConsistency, "non-integral eigenspace dimension");
      out[i][chi] = d.input(i).g_prime - 1 + total / dg.exponent() + (chi == 0 ? 1 : 0);
    }
  }
  return out;
}

HodgeDiamond brute_hodge(const AlgebraicDatum& d, std::int64_t cap) {
  const Digits dg(d.group());
  const std::int64_t n = dg.order();
  require_scale(checked::mul(checked::mul(n, n), n), cap, "character triples");
  const auto D = brute_eigendims(d);
  std::int64_t h10 = D[0][0] + D[1][0] + D[2][0];
  std::int64_t h20 = 0, h11 = 3;
  const std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (auto [i, j] : pairs)
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b) {
        if (dg.add(a, b) == 0) h20 += D[i][a] * D[j][b];
        if (a == b) h11 += 2 * D[i][a] * D[j][b];
      }
  std::int64_t h30 = 0, h21 = 2 * h10;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c) {
        const std::int64_t w = D[0][a] * D[1][b] * D[2][c];
        if (w == 0) continue;
        const std::int64_t ab = dg.add(a, b);
        if (dg.add(ab, c) == 0) h30 += w;
        // One conjugated slot at a time.
        if (dg.add(dg.neg(a), dg.add(b, c)) == 0) h21 += w;
        if (dg.add(dg.neg(b), dg.add(a, c)) == 0) h21 += w;
        if (dg.add(dg.neg(c), ab) == 0) h21 += w;
      }
  return make_diamond(h10, h20, h30, h11, h21);
}

std::optional<std::pair<int, int>> brute_minimality_witness(const AlgebraicDatum& d) {
  std::array<ElementSet, 3> k;
  for (std::size_t i = 0; i < 3; ++i) k[i] = enumerate_subgroup(d.kernel(i));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (intersect(k[i], k[j]).size() > 1) return std::pair{i, j};
  return std::nullopt;
}

std::optional<GroupElement> brute_freeness_witness(const AlgebraicDatum& d) {
  const Digits dg(d.group());
  std::array<FactorSets, 3> f{factor_sets(d, 0), factor_sets(d, 1), factor_sets(d, 2)};
  auto fixes = [&](const FactorSets& fs, std::int64_t g) {
    if (fs.kernel.contains(g)) return true;
    for (std::int64_t s : fs.stabilizer)
      if (fs.kernel.contains(dg.add(g, dg.neg(s)))) return true;
    return false;
  };
  for (std::int64_t g = 1; g < dg.order(); ++g)
    if (fixes(f[0], g) && fixes(f[1], g) && fixes(f[2], g))
      return GroupElement(d.group(), dg.split(g));
  return std::nullopt;
}

Agreement cross_check(const AlgebraicDatum& d, std::int64_t cap) {
  Agreement a;
  const DatumReport report = validate_datum(d);
  a.minimality = report.minimality.witness == brute_minimality_witness(d);
  a.freeness = report.freeness.witness == brute_freeness_witness(d);
  a.hodge = hodge_diamond(eigendim_table(d), Execution::kSerial) == brute_hodge(d, cap);
  const AdmissibleSets sets = admissible_characters(d, Execution::kSerial);
  const Subgroup k30 = representation_kernel(d, sets, 3, 0);
  const ElementSet b30 = brute_representation_kernel(d, 3, 0, cap);
  a.kernel_30 = enumerate_subgroup(k30, cap) == b30;
  a.kernel_20 = enumerate_subgroup(representation_kernel(d, sets, 2, 0), cap) ==
                brute_representation_kernel(d, 2, 0, cap);
  a.quotient = QuotientMap(k30, d.k_delta()).invariant_factors() ==
               brute_quotient(b30, enumerate_subgroup(d.k_delta(), cap));
  return a;
}

}  // namespace isoprod::oracle
