#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace isoprod {

/// Dense row-major matrix of 64-bit integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<std::int64_t> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const std::int64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, std::int64_t factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, std::int64_t factor);
  void negate_row(std::size_t r);

  bool is_diagonal() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Checked product; throws on overflow or shape mismatch.
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Determinant by fraction-free elimination (square matrices only).
std::int64_t determinant(const IntMatrix& a);

/// U * A * V = S with S diagonal, d1 | d2 | ... and zeros trailing.
/// V_inv is the inverse of V, kept for lifting quotient generators; U_inv
/// certifies that U is unimodular.
struct SmithForm {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  IntMatrix V_inv;
  IntMatrix U_inv;

  /// Diagonal entries of S (length min(rows, cols)).
  std::vector<std::int64_t> diagonal() const;
};

/// Alternating row and column Hermite reduction in 128-bit arithmetic, then
/// size reduction of the kernel parts of U and V. Throws
/// Error(kArithmeticOverflow) if a transform entry does not fit in 64 bits.
SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace isoprod
