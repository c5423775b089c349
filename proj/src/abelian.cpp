#include "isoprod/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "isoprod/checked.hpp"

namespace isoprod {

// ---------------------------------------------------------------------------
// AbelianGroup

struct AbelianGroup::Data {
  std::vector<std::int64_t> orders;
  std::int64_t order = 1;
  std::int64_t exponent = 1;
};

AbelianGroup::AbelianGroup() {
  static const auto kTrivial = std::make_shared<const Data>();
  data_ = kTrivial;
}

AbelianGroup::AbelianGroup(std::vector<std::int64_t> orders) {
  auto d = std::make_shared<Data>();
  for (std::int64_t n : orders) {
    if (n < 1)
      throw Error(ErrorCode::kInvalidArgument,
                  "cyclic order must be >= 1, got " + std::to_string(n));
    d->order = checked::mul(d->order, n);
    d->exponent = checked::lcm(d->exponent, n);
  }
  d->orders = std::move(orders);
  data_ = std::move(d);
}

std::span<const std::int64_t> AbelianGroup::orders() const noexcept {
  return data_->orders;
}
std::int64_t AbelianGroup::order() const noexcept { return data_->order; }
std::int64_t AbelianGroup::exponent() const noexcept { return data_->exponent; }

AbelianGroup AbelianGroup::normalized() const {
  std::vector<std::int64_t> kept;
  for (std::int64_t n : orders())
    if (n != 1) kept.push_back(n);
  return AbelianGroup(std::move(kept));
}

std::int64_t AbelianGroup::index_of(std::span<const std::int64_t> exps) const {
  if (exps.size() != rank())
    throw Error(ErrorCode::kParentMismatch, "exponent tuple width mismatch");
  std::int64_t idx = 0;
  for (std::size_t j = 0; j < rank(); ++j)
    idx = idx * data_->orders[j] + checked::mod(exps[j], data_->orders[j]);
  return idx;
}

std::vector<std::int64_t> AbelianGroup::exponents_at(std::int64_t index) const {
  std::vector<std::int64_t> e(rank());
  for (std::size_t j = rank(); j-- > 0;) {
    e[j] = index % data_->orders[j];
    index /= data_->orders[j];
  }
  return e;
}

bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
  return a.data_ == b.data_ || a.data_->orders == b.data_->orders;
}

std::string AbelianGroup::to_string() const {
  if (rank() == 0) return "Z_1";
  std::ostringstream os;
  for (std::size_t j = 0; j < rank(); ++j)
    os << (j ? " + " : "") << "Z_" << orders()[j];
  return os.str();
}

// ---------------------------------------------------------------------------
// Exponents

template <class Tag>
Exponents<Tag>::Exponents(AbelianGroup parent, std::vector<std::int64_t> exps)
    : parent_(std::move(parent)), exps_(std::move(exps)) {
  if (exps_.size() != parent_.rank())
    throw Error(ErrorCode::kParentMismatch,
                "exponent tuple has " + std::to_string(exps_.size()) +
                    " entries, group has " + std::to_string(parent_.rank()) +
                    " factors");
  for (std::size_t j = 0; j < exps_.size(); ++j)
    exps_[j] = checked::mod(exps_[j], parent_.orders()[j]);
}

template <class Tag>
Exponents<Tag> Exponents<Tag>::zero(const AbelianGroup& parent) {
  return Exponents(parent, std::vector<std::int64_t>(parent.rank(), 0));
}

template <class Tag>
Exponents<Tag> Exponents<Tag>::unit(const AbelianGroup& parent, std::size_t j,
                                    std::int64_t power) {
  std::vector<std::int64_t> e(parent.rank(), 0);
  e.at(j) = power;
  return Exponents(parent, std::move(e));
}

template <class Tag>
Exponents<Tag> Exponents<Tag>::at_index(const AbelianGroup& parent,
                                        std::int64_t index) {
  return Exponents(parent, parent.exponents_at(index));
}

template <class Tag>
bool Exponents<Tag>::is_zero() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](std::int64_t x) { return x == 0; });
}

template <class Tag>
std::int64_t Exponents<Tag>::order() const {
  std::int64_t o = 1;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    std::int64_t n = parent_.orders()[j];
    o = checked::lcm(o, n / std::gcd(n, exps_[j]));
  }
  return o;
}

template <class Tag>
void Exponents<Tag>::require_same_parent(const Exponents& o) const {
  if (!(parent_ == o.parent_))
    throw Error(ErrorCode::kParentMismatch,
                "elements of " + parent_.to_string() + " and " +
                    o.parent_.to_string() + " cannot be combined");
}

template <class Tag>
Exponents<Tag> Exponents<Tag>::operator+(const Exponents& o) const {
  require_same_parent(o);
  std::vector<std::int64_t> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = exps_[j] + o.exps_[j];
  return Exponents(parent_, std::move(e));
}

template <class Tag>
Exponents<Tag> Exponents<Tag>::operator-(const Exponents& o) const {
  require_same_parent(o);
  std::vector<std::int64_t> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = exps_[j] - o.exps_[j];
  return Exponents(parent_, std::move(e));
}

template <class Tag>
Exponents<Tag> Exponents<Tag>::operator-() const {
  std::vector<std::int64_t> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = -exps_[j];
  return Exponents(parent_, std::move(e));
}

template <class Tag>
Exponents<Tag> Exponents<Tag>::scaled(std::int64_t k) const {
  std::vector<std::int64_t> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j)
    e[j] = checked::mul(checked::mod(k, parent_.orders()[j]), exps_[j]);
  return Exponents(parent_, std::move(e));
}

template <class Tag>
std::string Exponents<Tag>::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < exps_.size(); ++j) os << (j ? "," : "") << exps_[j];
  os << ')';
  return os.str();
}

template class Exponents<detail::ElementTag>;
template class Exponents<detail::CharacterTag>;

// ---------------------------------------------------------------------------
// RationalAngle

RationalAngle::RationalAngle(std::int64_t num, std::int64_t den) {
  if (den <= 0)
    throw Error(ErrorCode::kInvalidArgument, "angle denominator must be positive");
  num = checked::mod(num, den);
  std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t RationalAngle::numerator_over(std::int64_t m) const {
  if (m <= 0 || m % den_ != 0)
    throw Error(ErrorCode::kConsistency,
                "angle " + to_string() + " is not a multiple of 1/" +
                    std::to_string(m));
  return checked::mul(num_, m / den_);
}

RationalAngle RationalAngle::operator+(const RationalAngle& o) const {
  std::int64_t den = checked::lcm(den_, o.den_);
  std::int64_t num = checked::add(checked::mul(num_, den / den_),
                                  checked::mul(o.num_, den / o.den_));
  return RationalAngle(num, den);
}

RationalAngle RationalAngle::operator-() const { return RationalAngle(-num_, den_); }

std::string RationalAngle::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

RationalAngle pairing(const Character& chi, const GroupElement& g) {
  if (!(chi.parent() == g.parent()))
    throw Error(ErrorCode::kParentMismatch,
                "character of " + chi.parent().to_string() +
                    " paired with element of " + g.parent().to_string());
  const auto orders = g.parent().orders();
  const std::int64_t L = g.parent().exponent();
  std::int64_t num = 0;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    std::int64_t term = checked::mul(checked::mul(chi[j], g[j]) % orders[j],
                                     L / orders[j]);
    num = checked::mod(checked::add(num, term), L);
  }
  return RationalAngle(num, L);
}

// ---------------------------------------------------------------------------
// InvariantFactors

InvariantFactors::InvariantFactors(std::vector<std::int64_t> factors)
    : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2)
      throw Error(ErrorCode::kInvalidArgument, "invariant factor must be >= 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw Error(ErrorCode::kInvalidArgument, "invariant factors must form a divisor chain");
  }
}

InvariantFactors InvariantFactors::from_diagonal(
    std::span<const std::int64_t> diagonal) {
  std::vector<std::int64_t> f;
  for (std::int64_t d : diagonal) {
    if (d == 0)
      throw Error(ErrorCode::kInvalidArgument, "quotient is infinite");
    if (d < 0) d = -d;
    if (d != 1) f.push_back(d);
  }
  return InvariantFactors(std::move(f));
}

std::int64_t InvariantFactors::order() const {
  std::int64_t o = 1;
  for (std::int64_t d : factors_) o = checked::mul(o, d);
  return o;
}

std::string InvariantFactors::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? ", " : "") << factors_[i];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Hermite machinery

namespace {

// Brings entries above each pivot into [0, pivot).
void hermite_reduce(IntMatrix& b) {
  const std::size_t k = b.rows();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      std::int64_t q = checked::floor_div(b(i, j), b(j, j));
      if (q != 0) b.add_row_multiple(i, j, -q);
    }
}

// Adds v to the lattice spanned by the rows of the upper triangular b.
// b always contains n_j e_j in its span, so v may be reduced mod n freely.
void hermite_insert(IntMatrix& b, std::span<const std::int64_t> n,
                    std::vector<std::int64_t> v) {
  const std::size_t k = b.rows();
  for (std::size_t j = 0; j < k; ++j) v[j] = checked::mod(v[j], n[j]);
  for (std::size_t i = 0; i < k; ++i) {
    if (v[i] == 0) continue;
    const std::int64_t a = b(i, i);
    const std::int64_t c = v[i];
    auto [d, x, y] = checked::ext_gcd(a, c);
    const std::int64_t p = a / d;
    const std::int64_t q = c / d;
    for (std::size_t j = i; j < k; ++j) {
      const std::int64_t bj = b(i, j);
      const std::int64_t vj = v[j];
      b(i, j) = checked::fma2(x, bj, y, vj);
      v[j] = checked::sub(checked::mul(p, vj), checked::mul(q, bj));
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      v[j] = checked::mod(v[j], n[j]);
      b(i, j) = checked::mod(b(i, j), n[j]);
    }
  }
  hermite_reduce(b);
}

// Solves y * B = a for upper triangular B; nullopt if y is not integral.
std::optional<std::vector<std::int64_t>> solve_upper(
    const IntMatrix& b, std::span<const std::int64_t> a) {
  const std::size_t k = b.rows();
  std::vector<std::int64_t> y(k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    std::int64_t rhs = a[j];
    for (std::size_t i = 0; i < j; ++i)
      rhs = checked::sub(rhs, checked::mul(y[i], b(i, j)));
    if (rhs % b(j, j) != 0) return std::nullopt;
    y[j] = rhs / b(j, j);
  }
  return y;
}

std::vector<std::int64_t> to_vector(std::span<const std::int64_t> s) {
  return {s.begin(), s.end()};
}

}  // namespace

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(AbelianGroup ambient, std::vector<GroupElement> gens,
                   IntMatrix basis)
    : ambient_(std::move(ambient)), gens_(std::move(gens)), basis_(std::move(basis)) {
  std::int64_t pivots = 1;
  for (std::size_t j = 0; j < basis_.rows(); ++j)
    pivots = checked::mul(pivots, basis_(j, j));
  order_ = ambient_.order() / pivots;
}

Subgroup Subgroup::generate(const AbelianGroup& ambient,
                            std::span<const GroupElement> gens) {
  const auto n = ambient.orders();
  IntMatrix b(n.size(), n.size());
  for (std::size_t j = 0; j < n.size(); ++j) b(j, j) = n[j];
  for (const auto& g : gens) {
    if (!(g.parent() == ambient))
      throw Error(ErrorCode::kParentMismatch,
                  "generator " + g.to_string() + " does not belong to " +
                      ambient.to_string());
    hermite_insert(b, n, to_vector(g.exponents()));
  }
  return Subgroup(ambient, {gens.begin(), gens.end()}, std::move(b));
}

Subgroup Subgroup::trivial(const AbelianGroup& ambient) {
  return generate(ambient, {});
}

Subgroup Subgroup::whole(const AbelianGroup& ambient) {
  std::vector<GroupElement> gens;
  for (std::size_t j = 0; j < ambient.rank(); ++j)
    gens.push_back(GroupElement::unit(ambient, j));
  return generate(ambient, gens);
}

bool Subgroup::contains(const GroupElement& g) const {
  if (!(g.parent() == ambient_))
    throw Error(ErrorCode::kParentMismatch,
                "membership test for an element of " + g.parent().to_string() +
                    " in a subgroup of " + ambient_.to_string());
  const auto n = ambient_.orders();
  std::vector<std::int64_t> v = to_vector(g.exponents());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] % basis_(i, i) != 0) return false;
    const std::int64_t q = v[i] / basis_(i, i);
    for (std::size_t j = i; j < v.size(); ++j)
      v[j] = checked::mod(checked::sub(v[j], checked::mul(q, basis_(i, j))), n[j]);
  }
  return true;
}

bool Subgroup::contains(const Subgroup& other) const {
  if (!(other.ambient_ == ambient_))
    throw Error(ErrorCode::kParentMismatch, "subgroups of different groups");
  for (const auto& g : other.basis_elements())
    if (!contains(g)) return false;
  return true;
}

GroupElement Subgroup::canonical_representative(const GroupElement& g) const {
  if (!(g.parent() == ambient_))
    throw Error(ErrorCode::kParentMismatch, "coset representative from another group");
  const auto n = ambient_.orders();
  std::vector<std::int64_t> v = to_vector(g.exponents());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::int64_t q = v[i] / basis_(i, i);
    if (q == 0) continue;
    for (std::size_t j = i; j < v.size(); ++j)
      v[j] = checked::mod(checked::sub(v[j], checked::mul(q, basis_(i, j))), n[j]);
  }
  return GroupElement(ambient_, std::move(v));
}

std::vector<GroupElement> Subgroup::basis_elements() const {
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    GroupElement e(ambient_, to_vector(basis_.row(i)));
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

bool Subgroup::is_cyclic() const {
  return QuotientMap(*this, Subgroup::trivial(ambient_))
             .invariant_factors()
             .factors()
             .size() <= 1;
}

Subgroup subgroup_generate(const AbelianGroup& g, std::span<const GroupElement> gens) {
  return Subgroup::generate(g, gens);
}

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b) {
  if (!(a.ambient() == b.ambient()))
    throw Error(ErrorCode::kParentMismatch, "sum of subgroups of different groups");
  auto gens = a.basis_elements();
  for (auto& g : b.basis_elements()) gens.push_back(std::move(g));
  return Subgroup::generate(a.ambient(), gens);
}

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
  if (!(a.ambient() == b.ambient()))
    throw Error(ErrorCode::kParentMismatch,
                "intersection of subgroups of different groups");
  // (A cap B)^perp = A^perp + B^perp
  return annihilator(subgroup_sum(annihilator(a), annihilator(b)));
}

bool subgroup_contains(const Subgroup& h, const GroupElement& g) {
  return h.contains(g);
}

Subgroup annihilator(const Subgroup& h) {
  const AbelianGroup& g = h.ambient();
  const auto n = g.orders();
  const std::size_t k = n.size();
  if (k == 0) return Subgroup::trivial(g);
  const std::int64_t L = g.exponent();
  // chi = a annihilates row r iff sum_j B(r,j) a_j L/n_j = 0 mod L.
  IntMatrix m(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < k; ++j)
      m(r, j) = checked::mod(checked::mul(h.basis()(r, j), L / n[j]), L);
  const SmithForm snf = smith_normal_form(m);
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t t = L / std::gcd(snf.S(i, i), L);
    std::vector<std::int64_t> col(k);
    for (std::size_t j = 0; j < k; ++j)
      col[j] = checked::mod(checked::mul(checked::mod(snf.V(j, i), n[j]), t), n[j]);
    gens.emplace_back(g, std::move(col));
  }
  return Subgroup::generate(g, gens);
}

Subgroup common_kernel(const AbelianGroup& g, std::span<const Character> chis) {
  std::vector<GroupElement> as_elems;
  as_elems.reserve(chis.size());
  for (const auto& c : chis) {
    if (!(c.parent() == g))
      throw Error(ErrorCode::kParentMismatch, "character of another group");
    as_elems.push_back(as_element(c));
  }
  return annihilator(Subgroup::generate(g, as_elems));
}

// ---------------------------------------------------------------------------
// QuotientMap

QuotientMap::QuotientMap(const Subgroup& numerator, const Subgroup& denominator)
    : numerator_(numerator), denominator_(denominator) {
  if (!(numerator.ambient() == denominator.ambient()))
    throw Error(ErrorCode::kParentMismatch, "quotient of subgroups of different groups");
  if (!numerator.contains(denominator))
    throw Error(ErrorCode::kInvalidArgument,
                "denominator is not contained in numerator");
  const AbelianGroup& g = numerator.ambient();
  const auto n = g.orders();
  const std::size_t k = n.size();
  const IntMatrix& ba = numerator.basis();
  const IntMatrix& bb = denominator.basis();
  // Rows of B_B in the coordinates of the lattice of A.
  IntMatrix c(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    auto y = solve_upper(ba, bb.row(r));
    if (!y)
      throw Error(ErrorCode::kConsistency, "denominator lattice not inside numerator");
    for (std::size_t j = 0; j < k; ++j) c(r, j) = (*y)[j];
  }
  SmithForm snf = smith_normal_form(c);
  diag_ = snf.diagonal();
  std::vector<std::int64_t> kept_orders;
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (diag_[i] == 0)
      throw Error(ErrorCode::kConsistency, "degenerate quotient lattice");
    if (diag_[i] >= 2) {
      kept_.push_back(i);
      kept_orders.push_back(diag_[i]);
    }
  }
  quotient_ = AbelianGroup(kept_orders);
  factors_ = InvariantFactors(kept_orders);
  v_ = std::move(snf.V);
  lift_rows_ = IntMatrix(kept_.size(), k);
  for (std::size_t t = 0; t < kept_.size(); ++t) {
    const std::size_t i = kept_[t];
    for (std::size_t j = 0; j < k; ++j) {
      std::int64_t acc = 0;
      for (std::size_t l = 0; l <= j; ++l)
        acc = checked::mod(
            checked::add(acc, checked::mul(checked::mod(snf.V_inv(i, l), n[j]), ba(l, j))),
            n[j]);
      lift_rows_(t, j) = acc;
    }
  }
}

GroupElement QuotientMap::project(const GroupElement& a) const {
  if (!(a.parent() == numerator_.ambient()))
    throw Error(ErrorCode::kParentMismatch, "projecting an element of another group");
  auto y = solve_upper(numerator_.basis(), a.exponents());
  if (!y)
    throw Error(ErrorCode::kInvalidArgument,
                "element " + a.to_string() + " is not in the numerator subgroup");
  std::vector<std::int64_t> q(kept_.size());
  for (std::size_t t = 0; t < kept_.size(); ++t) {
    const std::size_t i = kept_[t];
    const std::int64_t d = diag_[i];
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < y->size(); ++j)
      acc = checked::mod(
          checked::add(acc, checked::mul(checked::mod((*y)[j], d), checked::mod(v_(j, i), d))),
          d);
    q[t] = acc;
  }
  return GroupElement(quotient_, std::move(q));
}

GroupElement QuotientMap::lift(const GroupElement& q) const {
  if (!(q.parent() == quotient_))
    throw Error(ErrorCode::kParentMismatch, "lifting an element of another group");
  const AbelianGroup& g = numerator_.ambient();
  const auto n = g.orders();
  std::vector<std::int64_t> v(n.size(), 0);
  for (std::size_t t = 0; t < kept_.size(); ++t)
    for (std::size_t j = 0; j < n.size(); ++j)
      v[j] = checked::mod(checked::add(v[j], checked::mul(q[t], lift_rows_(t, j))), n[j]);
  return GroupElement(g, std::move(v));
}

std::vector<GroupElement> QuotientMap::generator_representatives() const {
  std::vector<GroupElement> out;
  for (std::size_t t = 0; t < kept_.size(); ++t)
    out.push_back(denominator_.canonical_representative(
        lift(GroupElement::unit(quotient_, t))));
  return out;
}

Character QuotientMap::pullback(const Character& chi) const {
  if (!(chi.parent() == quotient_))
    throw Error(ErrorCode::kParentMismatch, "pulling back a character of another group");
  const AbelianGroup& g = numerator_.ambient();
  if (numerator_.index() != 1)
    throw Error(ErrorCode::kInvalidArgument,
                "pullback needs the numerator to be the whole group");
  const auto n = g.orders();
  std::vector<std::int64_t> a(n.size());
  for (std::size_t j = 0; j < n.size(); ++j) {
    RationalAngle angle;
    for (std::size_t t = 0; t < kept_.size(); ++t) {
      const std::int64_t d = diag_[kept_[t]];
      angle = angle + RationalAngle(checked::mul(checked::mod(v_(j, kept_[t]), d), chi[t]), d);
    }
    a[j] = angle.numerator_over(n[j]);
  }
  return Character(g, std::move(a));
}

QuotientStructure quotient_structure(const AbelianGroup& g, const Subgroup& h) {
  return quotient_structure(Subgroup::whole(g), h);
}

QuotientStructure quotient_structure(const Subgroup& a, const Subgroup& b) {
  QuotientMap map(a, b);
  return {map.invariant_factors(), map.generator_representatives()};
}

// ---------------------------------------------------------------------------
// Products

AbelianGroup direct_product(std::span<const AbelianGroup> groups) {
  std::vector<std::int64_t> orders;
  for (const auto& g : groups)
    orders.insert(orders.end(), g.orders().begin(), g.orders().end());
  return AbelianGroup(std::move(orders));
}

Subgroup diagonal_subgroup(const AbelianGroup& g, std::size_t copies) {
  std::vector<AbelianGroup> parts(copies, g);
  AbelianGroup prod = direct_product(parts);
  std::vector<GroupElement> gens;
  for (std::size_t j = 0; j < g.rank(); ++j) {
    std::vector<std::int64_t> e(prod.rank(), 0);
    for (std::size_t c = 0; c < copies; ++c) e[c * g.rank() + j] = 1;
    gens.emplace_back(prod, std::move(e));
  }
  return Subgroup::generate(prod, gens);
}

GroupElement concat_elements(std::span<const GroupElement> parts) {
  std::vector<AbelianGroup> groups;
  std::vector<std::int64_t> e;
  for (const auto& p : parts) {
    groups.push_back(p.parent());
    e.insert(e.end(), p.exponents().begin(), p.exponents().end());
  }
  return GroupElement(direct_product(groups), std::move(e));
}

std::vector<GroupElement> split_element(const GroupElement& g,
                                        std::span<const AbelianGroup> groups) {
  if (!(direct_product(groups) == g.parent()))
    throw Error(ErrorCode::kParentMismatch, "element is not in the stated product");
  std::vector<GroupElement> out;
  std::size_t offset = 0;
  for (const auto& grp : groups) {
    std::vector<std::int64_t> e(g.exponents().begin() + offset,
                                g.exponents().begin() + offset + grp.rank());
    out.emplace_back(grp, std::move(e));
    offset += grp.rank();
  }
  return out;
}

Subgroup product_subgroup(std::span<const Subgroup> parts) {
  std::vector<AbelianGroup> groups;
  for (const auto& p : parts) groups.push_back(p.ambient());
  AbelianGroup prod = direct_product(groups);
  std::vector<GroupElement> gens;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (const auto& b : p.basis_elements()) {
      std::vector<std::int64_t> e(prod.rank(), 0);
      std::copy(b.exponents().begin(), b.exponents().end(), e.begin() + offset);
      gens.emplace_back(prod, std::move(e));
    }
    offset += p.ambient().rank();
  }
  return Subgroup::generate(prod, gens);
}

std::vector<GroupElement> all_elements(const AbelianGroup& g) {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (std::int64_t i = 0; i < g.order(); ++i) out.push_back(GroupElement::at_index(g, i));
  return out;
}

}  // namespace isoprod
