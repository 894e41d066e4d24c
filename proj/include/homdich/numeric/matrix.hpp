#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "homdich/numeric/rational.hpp"

namespace homdich {

// Exact dense matrix over Q. Entries are fixed at construction; the structural
// flags are computed once there and always agree with the entries.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix diagonal(std::span<const Rational> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  bool is_symmetric() const noexcept { return symmetric_; }
  bool is_diagonal() const noexcept { return diagonal_; }
  bool is_nonnegative() const noexcept { return nonnegative_; }
  bool is_zero() const;

  // Diagonal entries (for a diagonal matrix, its full content).
  std::vector<Rational> diagonal_entries() const;
  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> column(std::size_t j) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void compute_flags();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
  bool symmetric_ = true;
  bool diagonal_ = true;
  bool nonnegative_ = true;
};

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_add(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& a);
RationalMatrix hadamard_pow(const RationalMatrix& a, unsigned long p);
// Entrywise product with matching shapes.
RationalMatrix hadamard_mul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix submatrix(const RationalMatrix& a, std::span<const std::size_t> row_idx,
                         std::span<const std::size_t> col_idx);
RationalMatrix principal_submatrix(const RationalMatrix& a, std::span<const std::size_t> idx);
// Inverse of a diagonal matrix with nonzero diagonal.
RationalMatrix diagonal_inverse(const RationalMatrix& d);
RationalMatrix mat_pow(const RationalMatrix& a, unsigned long n);

// Fraction-free (Bareiss) elimination on the integer-scaled matrix.
std::size_t rank(const RationalMatrix& a);
Rational det(const RationalMatrix& a);

std::string to_string(const RationalMatrix& a);

}  // namespace homdich
