#include "isoprod/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "isoprod/checked.hpp"

namespace isoprod {

IntMatrix::IntMatrix(
    std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw Error(ErrorCode::kInvalidArgument, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                 std::int64_t factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) =
        checked::add((*this)(dst, c), checked::mul(factor, (*this)(src, c)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                 std::int64_t factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) =
        checked::add((*this)(r, dst), checked::mul(factor, (*this)(r, src)));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(r, c) = checked::sub(0, (*this)(r, c));
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::kInvalidArgument, "matrix shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = checked::add(out(i, j), checked::mul(aik, b(k, j)));
    }
  return out;
}

std::int64_t determinant(const IntMatrix& a) {
  if (a.rows() != a.cols())
    throw Error(ErrorCode::kInvalidArgument, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss elimination keeps every intermediate an exact minor.
  IntMatrix m = a;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = checked::sub(checked::mul(m(i, j), m(k, k)),
                               checked::mul(m(i, k), m(k, j))) /
                  prev;
    prev = m(k, k);
  }
  return checked::mul(sign, m(n - 1, n - 1));
}

std::vector<std::int64_t> SmithForm::diagonal() const {
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

namespace {

using Wide = __int128;

Wide wadd(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) checked::overflow("addition");
  return r;
}

Wide wmul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) checked::overflow("multiplication");
  return r;
}

// a*x + b*y
Wide wfma2(Wide a, Wide x, Wide b, Wide y) { return wadd(wmul(a, x), wmul(b, y)); }

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide magnitude(Wide a) { return a < 0 ? -a : a; }

// Nearest integer to a / b; b != 0.
Wide nearest_div(Wide a, Wide b) {
  if (b < 0) a = -a, b = -b;
  return floor_div(wadd(wmul(2, a), b), wmul(2, b));
}

struct Bezout {
  Wide g, x, y;
};

// g = x a + y b with g >= 0.
Bezout extended_gcd(Wide a, Wide b) {
  Wide x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const Wide q = floor_div(a, b);
    a = std::exchange(b, a - q * b);
    x0 = std::exchange(x1, x0 - q * x1);
    y0 = std::exchange(y1, y0 - q * y1);
  }
  if (a < 0) return {-a, -x0, -y0};
  return {a, x0, y0};
}

struct WideMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Wide> data;

  WideMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  static WideMatrix identity(std::size_t n) {
    WideMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  Wide& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Wide operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  // (row i, row j) <- (x ri + y rj, z ri + w rj)
  void mix_rows(std::size_t i, std::size_t j, Wide x, Wide y, Wide z, Wide w) {
    for (std::size_t c = 0; c < cols; ++c) {
      const Wide p = (*this)(i, c), q = (*this)(j, c);
      (*this)(i, c) = wfma2(x, p, y, q);
      (*this)(j, c) = wfma2(z, p, w, q);
    }
  }
  void mix_cols(std::size_t i, std::size_t j, Wide x, Wide y, Wide z, Wide w) {
    for (std::size_t r = 0; r < rows; ++r) {
      const Wide p = (*this)(r, i), q = (*this)(r, j);
      (*this)(r, i) = wfma2(x, p, y, q);
      (*this)(r, j) = wfma2(z, p, w, q);
    }
  }

  IntMatrix narrow() const {
    IntMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        const Wide x = (*this)(r, c);
        if (x > INT64_MAX || x < INT64_MIN)
          throw Error(ErrorCode::kArithmeticOverflow, "Smith transform entry exceeds 64 bits");
        out(r, c) = static_cast<std::int64_t>(x);
      }
    return out;
  }
};

WideMatrix widen(const IntMatrix& m) {
  WideMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

// A and its transforms, with every elementary step applied to the inverses.
struct SmithWork {
  WideMatrix a, u, u_inv, v, v_inv;

  explicit SmithWork(const IntMatrix& input)
      : a(widen(input)),
        u(WideMatrix::identity(input.rows())),
        u_inv(WideMatrix::identity(input.rows())),
        v(WideMatrix::identity(input.cols())),
        v_inv(WideMatrix::identity(input.cols())) {}

  // Rows (i, j) of A and U go through [[x, y], [z, w]], which must be unimodular.
  void rows(std::size_t i, std::size_t j, Wide x, Wide y, Wide z, Wide w) {
    const Wide det = x * w - y * z;
    a.mix_rows(i, j, x, y, z, w);
    u.mix_rows(i, j, x, y, z, w);
    u_inv.mix_cols(i, j, w * det, -z * det, -y * det, x * det);
  }
  // Columns: col i <- x ci + y cj, col j <- z ci + w cj.
  void cols(std::size_t i, std::size_t j, Wide x, Wide y, Wide z, Wide w) {
    const Wide det = x * w - y * z;
    a.mix_cols(i, j, x, y, z, w);
    v.mix_cols(i, j, x, y, z, w);
    v_inv.mix_rows(i, j, w * det, -z * det, -y * det, x * det);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols; ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols; ++c) u(i, c) = -u(i, c);
    for (std::size_t r = 0; r < u_inv.rows; ++r) u_inv(r, i) = -u_inv(r, i);
  }
  void negate_col(std::size_t j) {
    for (std::size_t r = 0; r < a.rows; ++r) a(r, j) = -a(r, j);
    for (std::size_t r = 0; r < v.rows; ++r) v(r, j) = -v(r, j);
    for (std::size_t c = 0; c < v_inv.cols; ++c) v_inv(j, c) = -v_inv(j, c);
  }

  // Echelon form with positive pivots and the entries above each pivot
  // reduced into [0, pivot). The transposed pass works on columns. Returns
  // the rank.
  std::size_t hermite(bool transposed) {
    const std::size_t lines = transposed ? a.cols : a.rows;
    const std::size_t width = transposed ? a.rows : a.cols;
    auto at = [&](std::size_t line, std::size_t k) {
      return transposed ? a(k, line) : a(line, k);
    };
    auto mix = [&](std::size_t i, std::size_t j, Wide x, Wide y, Wide z, Wide w) {
      transposed ? cols(i, j, x, y, z, w) : rows(i, j, x, y, z, w);
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < width && r < lines; ++c) {
      // Euclid over the whole column: the smallest entry becomes the pivot and
      // the others are reduced by their nearest quotients.
      for (;;) {
        std::size_t pivot = lines;
        for (std::size_t i = r; i < lines; ++i)
          if (at(i, c) != 0 && (pivot == lines || magnitude(at(i, c)) < magnitude(at(pivot, c))))
            pivot = i;
        if (pivot == lines) break;
        if (pivot != r) mix(r, pivot, 0, 1, 1, 0);
        bool done = true;
        for (std::size_t i = r + 1; i < lines; ++i) {
          if (at(i, c) == 0) continue;
          if (const Wide f = nearest_div(at(i, c), at(r, c)); f != 0) mix(i, r, 1, -f, 0, 1);
          if (at(i, c) != 0) done = false;
        }
        if (done) break;
      }
      if (at(r, c) == 0) continue;
      if (at(r, c) < 0) transposed ? negate_col(r) : negate_row(r);
      const Wide p = at(r, c);
      for (std::size_t i = 0; i < r; ++i)
        if (const Wide f = floor_div(at(i, c), p); f != 0) mix(i, r, 1, -f, 0, 1);
      ++r;
    }
    return r;
  }

  bool diagonal() const {
    for (std::size_t r = 0; r < a.rows; ++r)
      for (std::size_t c = 0; c < a.cols; ++c)
        if (r != c && a(r, c) != 0) return false;
    return true;
  }

  // Replaces each pair (d_i, d_j), i < j, by (gcd, lcm) so divisibility holds.
  void divisibility_chain() {
    const std::size_t k = std::min(a.rows, a.cols);
    for (std::size_t i = 0; i < k; ++i)
      if (a(i, i) < 0) negate_row(i);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        const Wide x = a(i, i), y = a(j, j);
        if (x == 0 && y != 0) {
          rows(i, j, 0, 1, 1, 0);
          cols(i, j, 0, 1, 1, 0);
        } else if (x != 0 && y % x != 0) {
          const Bezout b = extended_gcd(x, y);
          rows(i, j, b.x, b.y, -y / b.g, x / b.g);
          cols(i, j, 1, 1, wmul(-b.y, y / b.g), wmul(b.x, x / b.g));
          if (a(j, j) < 0) negate_row(j);
        }
      }
  }

  // Size-reduces lines [0, count) against the kernel lines [rank, count) of
  // U (rows) or V (columns). Any choice keeps U A V = S; this one keeps the
  // transforms short.
  void reduce_kernel(bool columns, std::size_t rank) {
    const WideMatrix& m = columns ? v : u;
    const std::size_t count = columns ? m.cols : m.rows;
    const std::size_t len = columns ? m.rows : m.cols;
    auto entry = [&](std::size_t line, std::size_t k) {
      return static_cast<long double>(columns ? m(k, line) : m(line, k));
    };
    auto dot = [&](std::size_t i, std::size_t j) {
      long double s = 0;
      for (std::size_t k = 0; k < len; ++k) s += entry(i, k) * entry(j, k);
      return s;
    };
    // Subtracts the nearest multiple of line j from line i if that shortens it.
    auto reduce = [&](std::size_t i, std::size_t j) {
      const long double nj = dot(j, j);
      if (nj == 0) return false;
      const long double f = std::round(dot(i, j) / nj);
      if (f == 0) return false;
      long double before = 0, after = 0;
      for (std::size_t k = 0; k < len; ++k) {
        const long double x = entry(i, k), y = entry(j, k);
        before += x * x;
        after += (x - f * y) * (x - f * y);
      }
      if (!(after < before)) return false;
      const auto fw = static_cast<Wide>(f);
      columns ? cols(j, i, 1, 0, -fw, 1) : rows(i, j, 1, -fw, 0, 1);
      return true;
    };
    constexpr int kMaxSweeps = 64;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      bool changed = false;
      for (std::size_t i = rank; i < count; ++i)
        for (std::size_t j = rank; j < count; ++j)
          if (i != j && reduce(i, j)) changed = true;
      if (!changed) break;
    }
    for (std::size_t i = 0; i < rank; ++i)
      for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool changed = false;
        for (std::size_t j = rank; j < count; ++j)
          if (reduce(i, j)) changed = true;
        if (!changed) break;
      }
  }
};

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

SmithForm smith_form_once(const IntMatrix& input) {
  SmithWork w(input);
  for (bool transposed = false; !w.diagonal(); transposed = !transposed)
    w.reduce_kernel(transposed, w.hermite(transposed));
  w.divisibility_chain();
  std::size_t rank = 0;
  while (rank < std::min(input.rows(), input.cols()) && w.a(rank, rank) != 0) ++rank;
  w.reduce_kernel(false, rank);
  w.reduce_kernel(true, rank);
  return SmithForm{w.a.narrow(), w.u.narrow(), w.v.narrow(), w.v_inv.narrow(),
                   w.u_inv.narrow()};
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  try {
    return smith_form_once(input);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kArithmeticOverflow) throw;
  }
  // The transposed elimination takes a different path; U' A^T V' = S gives
  // V'^T A U'^T = S^T.
  const SmithForm t = smith_form_once(transpose(input));
  return SmithForm{transpose(t.S), transpose(t.V), transpose(t.U), transpose(t.U_inv),
                   transpose(t.V_inv)};
}

}  // namespace isoprod
