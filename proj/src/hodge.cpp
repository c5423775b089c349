#include "isoprod/hodge.hpp"

#include <map>
#include <numeric>
#include <string>

#include "isoprod/checked.hpp"

namespace isoprod {

EigenDimTable::EigenDimTable(AbelianGroup group,
                             std::array<std::vector<std::int64_t>, 3> values)
    : group_(std::move(group)), values_(std::move(values)) {
  for (const auto& v : values_)
    if (static_cast<std::int64_t>(v.size()) != group_.order())
      throw Error(ErrorCode::kInvalidArgument, "eigendimension row has wrong length");
}

std::int64_t EigenDimTable::row_sum(std::size_t i) const {
  return std::accumulate(values_[i].begin(), values_[i].end(), std::int64_t{0});
}

EigenDimTable eigendim_table(const AlgebraicDatum& d) {
  std::array<std::vector<std::int64_t>, 3> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    rows[i].assign(static_cast<std::size_t>(d.group().order()), 0);
    const GeneratingVector& v = d.vector(i);
    const std::vector<std::int64_t> cw = cw_table(v);
    for (std::int64_t c = 0; c < v.group.order(); ++c) {
      const Character chi = d.quotient(i).pullback(Character::at_index(v.group, c));
      rows[i][chi.index()] = cw[c];
    }
    if (std::accumulate(rows[i].begin(), rows[i].end(), std::int64_t{0}) != genus(v))
      throw Error(ErrorCode::kConsistency,
                  "pulled-back eigendimensions of factor " + std::to_string(i + 1) +
                      " do not sum to the genus");
  }
  return EigenDimTable(d.group(), std::move(rows));
}

std::int64_t HodgeDiamond::chi_o() const { return 1 - h[1][0] + h[2][0] - h[3][0]; }

std::int64_t HodgeDiamond::euler() const {
  std::int64_t e = 0;
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) e += ((p + q) % 2 == 0 ? 1 : -1) * h[p][q];
  return e;
}

bool HodgeDiamond::has_symmetries() const {
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q)
      if (h[p][q] != h[q][p] || h[p][q] != h[3 - p][3 - q] || h[p][q] < 0) return false;
  return h[0][0] == 1 && h[3][3] == 1;
}

HodgeDiamond make_diamond(std::int64_t h10, std::int64_t h20, std::int64_t h30,
                          std::int64_t h11, std::int64_t h21) {
  HodgeDiamond d;
  auto set = [&](int p, int q, std::int64_t v) {
    d.h[p][q] = d.h[q][p] = d.h[3 - p][3 - q] = d.h[3 - q][3 - p] = v;
  };
  set(0, 0, 1);
  set(1, 0, h10);
  set(2, 0, h20);
  set(3, 0, h30);
  set(1, 1, h11);
  set(2, 1, h21);
  return d;
}

namespace {

// Index arithmetic on the dual group, with digits cached per index.
class DualArithmetic {
 public:
  explicit DualArithmetic(const AbelianGroup& g) : orders_(g.orders().begin(), g.orders().end()) {
    size_ = g.order();
    digits_.resize(static_cast<std::size_t>(size_) * orders_.size());
    neg_.resize(static_cast<std::size_t>(size_));
    for (std::int64_t i = 0; i < size_; ++i) {
      auto e = g.exponents_at(i);
      std::copy(e.begin(), e.end(), digits_.begin() + i * orders_.size());
    }
    for (std::int64_t i = 0; i < size_; ++i) neg_[i] = combine(0, 0, i, -1);
  }

  std::int64_t size() const { return size_; }
  std::int64_t neg(std::int64_t a) const { return neg_[a]; }
  /// sa * a + sb * b with signs in {-1, 0, 1}
  std::int64_t combine(std::int64_t a, int sa, std::int64_t b, int sb) const {
    std::int64_t idx = 0;
    const std::size_t k = orders_.size();
    for (std::size_t j = 0; j < k; ++j) {
      const std::int64_t n = orders_[j];
      std::int64_t x = sa * digits_[a * k + j] + sb * digits_[b * k + j];
      x %= n;
      if (x < 0) x += n;
      idx = idx * n + x;
    }
    return idx;
  }

 private:
  std::vector<std::int64_t> orders_;
  std::int64_t size_ = 1;
  std::vector<std::int64_t> digits_;
  std::vector<std::int64_t> neg_;
};

struct HodgeSums {
  std::int64_t h30 = 0;
  std::int64_t h21_triple = 0;
};

// The two double sums over (chi1, chi2); everything else is linear.
HodgeSums triple_sums(const EigenDimTable& t, const DualArithmetic& ar, Execution exec) {
  const std::int64_t n = ar.size();
  const auto& d1 = t.row(0);
  const auto& d2 = t.row(1);
  const auto& d3 = t.row(2);
  std::int64_t h30 = 0;
  std::int64_t h21 = 0;
  auto body = [&](std::int64_t a, std::int64_t& s30, std::int64_t& s21) {
    const std::int64_t x = d1[a];
    if (x == 0) return;
    for (std::int64_t b = 0; b < n; ++b) {
      const std::int64_t y = d2[b];
      if (y == 0) continue;
      const std::int64_t sum = ar.combine(a, 1, b, 1);
      const std::int64_t diff = ar.combine(a, 1, b, -1);
      s30 += x * y * d3[ar.neg(sum)];
      s21 += x * y * (d3[diff] + d3[ar.neg(diff)] + d3[sum]);
    }
  };
  if (exec == Execution::kParallel) {
#pragma omp parallel for reduction(+ : h30, h21) schedule(dynamic, 16)
    for (std::int64_t a = 0; a < n; ++a) body(a, h30, h21);
  } else {
    for (std::int64_t a = 0; a < n; ++a) body(a, h30, h21);
  }
  return {h30, h21};
}

}  // namespace

HodgeDiamond hodge_diamond(const EigenDimTable& t, Execution exec) {
  const DualArithmetic ar(t.group());
  const std::int64_t n = ar.size();
  std::int64_t h10 = 0;
  for (std::size_t i = 0; i < 3; ++i) h10 += t.at(i, 0);
  std::int64_t h20 = 0;
  std::int64_t h11_pairs = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      for (std::int64_t c = 0; c < n; ++c) {
        h20 += t.at(i, c) * t.at(j, ar.neg(c));
        h11_pairs += t.at(i, c) * t.at(j, c);
      }
  const HodgeSums s = triple_sums(t, ar, exec);
  HodgeDiamond d = make_diamond(h10, h20, s.h30, 3 + 2 * h11_pairs, 2 * h10 + s.h21_triple);
  if (!d.has_symmetries())
    throw Error(ErrorCode::kConsistency, "Hodge diamond violates symmetry");
  return d;
}

HodgeDiamond hodge_diamond(const AlgebraicDatum& d, Execution exec) {
  HodgeDiamond hd = hodge_diamond(eigendim_table(d), exec);
  const DatumReport r = validate_datum(d);
  if (r.freeness.pass && r.vectors_valid()) {
    const NumericalInvariants inv = invariants(d);
    if (hd.chi_o() != inv.chi_o)
      throw Error(ErrorCode::kConsistency,
                  "chi(O_X) from the diamond is " + std::to_string(hd.chi_o()) +
                      ", product formula gives " + std::to_string(inv.chi_o));
    if (hd.euler() != inv.euler)
      throw Error(ErrorCode::kConsistency,
                  "e(X) from the diamond is " + std::to_string(hd.euler()) +
                      ", product formula gives " + std::to_string(inv.euler));
  }
  return hd;
}

std::vector<IsotypicComponent> isotypic_decomposition(const EigenDimTable& t, int p, int q) {
  const DualArithmetic ar(t.group());
  const std::int64_t n = ar.size();
  std::map<std::array<std::int64_t, 3>, std::int64_t> acc;
  auto add = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t dim) {
    if (dim != 0) acc[{a, b, c}] += dim;
  };
  auto D = [&](std::size_t i, std::int64_t c) { return t.at(i, c); };
  const std::int64_t trivial_extra_21 = 2 * (D(0, 0) + D(1, 0) + D(2, 0));

  if (p == 3 && q == 0) {
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b) {
        const std::int64_t c = ar.neg(ar.combine(a, 1, b, 1));
        add(a, b, c, D(0, a) * D(1, b) * D(2, c));
      }
  } else if (p == 2 && q == 1) {
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b) {
        const std::int64_t c = ar.neg(ar.combine(a, 1, b, 1));
        add(a, b, c,
            D(0, ar.neg(a)) * D(1, b) * D(2, c) + D(0, a) * D(1, ar.neg(b)) * D(2, c) +
                D(0, a) * D(1, b) * D(2, ar.neg(c)));
      }
    add(0, 0, 0, trivial_extra_21);
  } else if ((p == 2 && q == 0) || (p == 1 && q == 1)) {
    const bool hol = (p == 2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        for (std::int64_t c = 0; c < n; ++c) {
          std::array<std::int64_t, 3> key{0, 0, 0};
          key[i] = c;
          key[j] = ar.neg(c);
          if (hol) {
            add(key[0], key[1], key[2], D(i, c) * D(j, ar.neg(c)));
          } else {
            // W_i^chi (x) conj(W_j^chi) and its conjugate pattern.
            const std::int64_t dim = D(i, c) * D(j, c);
            add(key[0], key[1], key[2], dim);
            key[i] = ar.neg(c);
            key[j] = c;
            add(key[0], key[1], key[2], dim);
          }
        }
    if (!hol) add(0, 0, 0, 3);
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "isotypic decomposition is provided for (3,0), (2,1), (2,0), (1,1); got (" +
                    std::to_string(p) + "," + std::to_string(q) + ")");
  }
  std::vector<IsotypicComponent> out;
  const AbelianGroup& g = t.group();
  for (const auto& [key, dim] : acc) {
    if (dim == 0) continue;
    out.push_back({{Character::at_index(g, key[0]), Character::at_index(g, key[1]),
                    Character::at_index(g, key[2])},
                   dim});
  }
  return out;
}

std::vector<IsotypicComponent> isotypic_decomposition(const AlgebraicDatum& d, int p, int q) {
  return isotypic_decomposition(eigendim_table(d), p, q);
}

}  // namespace isoprod
