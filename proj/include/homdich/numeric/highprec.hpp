#pragma once

#include <mpfr.h>

#include <cstddef>
#include <string>
#include <vector>

#include "homdich/numeric/matrix.hpp"
#include "homdich/numeric/rational.hpp"

namespace homdich {

using Precision = mpfr_prec_t;
inline constexpr Precision kDefaultPrecision = 256;
inline constexpr Precision kMinPrecision = 64;

// Binary floating value with an explicit bit precision. Binary operations
// produce a result at the larger operand precision, so precision never drops.
class HighPrecReal {
 public:
  explicit HighPrecReal(Precision precision = kDefaultPrecision);
  HighPrecReal(const Rational& value, Precision precision);
  HighPrecReal(long value, Precision precision);
  HighPrecReal(const HighPrecReal& other);
  HighPrecReal(HighPrecReal&& other) noexcept;
  HighPrecReal& operator=(const HighPrecReal& other);
  HighPrecReal& operator=(HighPrecReal&& other) noexcept;
  ~HighPrecReal();

  static HighPrecReal parse(const std::string& decimal, Precision precision);
  // 2^exponent, exactly.
  static HighPrecReal exp2(long exponent, Precision precision);

  Precision precision() const noexcept { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // Scientific decimal with enough digits to round-trip at this precision.
  std::string to_string() const;
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }

  HighPrecReal& operator+=(const HighPrecReal& o);
  HighPrecReal& operator-=(const HighPrecReal& o);
  HighPrecReal& operator*=(const HighPrecReal& o);
  HighPrecReal& operator/=(const HighPrecReal& o);

  friend HighPrecReal operator+(HighPrecReal a, const HighPrecReal& b) { return a += b; }
  friend HighPrecReal operator-(HighPrecReal a, const HighPrecReal& b) { return a -= b; }
  friend HighPrecReal operator*(HighPrecReal a, const HighPrecReal& b) { return a *= b; }
  friend HighPrecReal operator/(HighPrecReal a, const HighPrecReal& b) { return a /= b; }
  HighPrecReal operator-() const;

  friend bool operator<(const HighPrecReal& a, const HighPrecReal& b) { return mpfr_less_p(a.value_, b.value_); }
  friend bool operator>(const HighPrecReal& a, const HighPrecReal& b) { return mpfr_greater_p(a.value_, b.value_); }
  friend bool operator<=(const HighPrecReal& a, const HighPrecReal& b) { return mpfr_lessequal_p(a.value_, b.value_); }
  friend bool operator>=(const HighPrecReal& a, const HighPrecReal& b) { return mpfr_greaterequal_p(a.value_, b.value_); }
  friend bool operator==(const HighPrecReal& a, const HighPrecReal& b) { return mpfr_equal_p(a.value_, b.value_); }

 private:
  void raise_precision_to(Precision p);
  mpfr_t value_;
};

HighPrecReal abs(const HighPrecReal& x);
HighPrecReal sqrt(const HighPrecReal& x);
HighPrecReal pow(const HighPrecReal& x, unsigned long n);
HighPrecReal max(const HighPrecReal& a, const HighPrecReal& b);

// Dense real matrix at one working precision.
class RealMatrix {
 public:
  RealMatrix(std::size_t rows, std::size_t cols, Precision precision);
  RealMatrix(const RationalMatrix& exact, Precision precision);

  static RealMatrix identity(std::size_t n, Precision precision);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Precision precision() const noexcept { return precision_; }

  HighPrecReal& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const HighPrecReal& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  HighPrecReal max_abs() const;
  bool is_symmetric() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Precision precision_;
  std::vector<HighPrecReal> entries_;
};

RealMatrix mat_mul(const RealMatrix& a, const RealMatrix& b);
RealMatrix transpose(const RealMatrix& a);
RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
// diag(scale) * a * diag(scale)
RealMatrix congruence_by_diagonal(const RealMatrix& a, const std::vector<HighPrecReal>& scale);

}  // namespace homdich
