#include "homdich/numeric/highprec.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "homdich/error.hpp"

namespace homdich {

namespace {

Precision checked(Precision p) {
  require(p >= kMinPrecision, ErrorKind::Contract,
          "precision " + std::to_string(p) + " below the minimum of 64 bits");
  return p;
}

}  // namespace

HighPrecReal::HighPrecReal(Precision precision) {
  mpfr_init2(value_, checked(precision));
  mpfr_set_zero(value_, 1);
}

HighPrecReal::HighPrecReal(const Rational& value, Precision precision) {
  mpfr_init2(value_, checked(precision));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

HighPrecReal::HighPrecReal(long value, Precision precision) {
  mpfr_init2(value_, checked(precision));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

HighPrecReal::HighPrecReal(const HighPrecReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

HighPrecReal::HighPrecReal(HighPrecReal&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

HighPrecReal& HighPrecReal::operator=(const HighPrecReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

HighPrecReal& HighPrecReal::operator=(HighPrecReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

HighPrecReal::~HighPrecReal() { mpfr_clear(value_); }

HighPrecReal HighPrecReal::parse(const std::string& decimal, Precision precision) {
  HighPrecReal r(precision);
  if (mpfr_set_str(r.value_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    fail(ErrorKind::Parse, "malformed decimal '" + decimal + "'");
  }
  return r;
}

HighPrecReal HighPrecReal::exp2(long exponent, Precision precision) {
  HighPrecReal r(precision);
  mpfr_set_ui_2exp(r.value_, 1, exponent, MPFR_RNDN);
  return r;
}

std::string HighPrecReal::to_string() const {
  // Digits needed to round-trip: ceil(prec * log10(2)) + 1.
  const auto digits = static_cast<std::size_t>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 1;
  const int len = mpfr_snprintf(nullptr, 0, "%.*Re", static_cast<int>(digits), value_);
  std::string out(static_cast<std::size_t>(len) + 1, '\0');
  mpfr_snprintf(out.data(), out.size(), "%.*Re", static_cast<int>(digits), value_);
  out.resize(static_cast<std::size_t>(len));
  return out;
}

void HighPrecReal::raise_precision_to(Precision p) {
  if (p > precision()) mpfr_prec_round(value_, p, MPFR_RNDN);
}

HighPrecReal& HighPrecReal::operator+=(const HighPrecReal& o) {
  raise_precision_to(o.precision());
  mpfr_add(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

HighPrecReal& HighPrecReal::operator-=(const HighPrecReal& o) {
  raise_precision_to(o.precision());
  mpfr_sub(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

HighPrecReal& HighPrecReal::operator*=(const HighPrecReal& o) {
  raise_precision_to(o.precision());
  mpfr_mul(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

HighPrecReal& HighPrecReal::operator/=(const HighPrecReal& o) {
  raise_precision_to(o.precision());
  mpfr_div(value_, value_, o.value_, MPFR_RNDN);
  return *this;
}

HighPrecReal HighPrecReal::operator-() const {
  HighPrecReal r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

HighPrecReal abs(const HighPrecReal& x) {
  HighPrecReal r(x);
  mpfr_abs(r.get(), r.get(), MPFR_RNDN);
  return r;
}

HighPrecReal sqrt(const HighPrecReal& x) {
  require(x.sign() >= 0, ErrorKind::Contract, "sqrt of a negative value");
  HighPrecReal r(x.precision());
  mpfr_sqrt(r.get(), x.get(), MPFR_RNDN);
  return r;
}

HighPrecReal pow(const HighPrecReal& x, unsigned long n) {
  HighPrecReal r(x.precision());
  mpfr_pow_ui(r.get(), x.get(), n, MPFR_RNDN);
  return r;
}

HighPrecReal max(const HighPrecReal& a, const HighPrecReal& b) { return a < b ? b : a; }

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, Precision precision)
    : rows_(rows), cols_(cols), precision_(precision), entries_(rows * cols, HighPrecReal(precision)) {}

RealMatrix::RealMatrix(const RationalMatrix& exact, Precision precision)
    : RealMatrix(exact.rows(), exact.cols(), precision) {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = HighPrecReal(exact(i, j), precision);
  }
}

RealMatrix RealMatrix::identity(std::size_t n, Precision precision) {
  RealMatrix m(n, n, precision);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = HighPrecReal(1L, precision);
  return m;
}

HighPrecReal RealMatrix::max_abs() const {
  HighPrecReal best(precision_);
  for (const auto& x : entries_) best = max(best, abs(x));
  return best;
}

bool RealMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (!((*this)(i, j) == (*this)(j, i))) return false;
    }
  }
  return true;
}

RealMatrix mat_mul(const RealMatrix& a, const RealMatrix& b) {
  require(a.cols() == b.rows(), ErrorKind::Shape, "mat_mul: real shape mismatch");
  RealMatrix c(a.rows(), b.cols(), std::max(a.precision(), b.precision()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      HighPrecReal acc(c.precision());
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = std::move(acc);
    }
  }
  return c;
}

RealMatrix transpose(const RealMatrix& a) {
  RealMatrix t(a.cols(), a.rows(), a.precision());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::Shape, "real matrix difference: shape mismatch");
  RealMatrix c(a.rows(), a.cols(), std::max(a.precision(), b.precision()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  }
  return c;
}

RealMatrix congruence_by_diagonal(const RealMatrix& a, const std::vector<HighPrecReal>& scale) {
  require(a.rows() == scale.size() && a.cols() == scale.size(), ErrorKind::Shape,
          "congruence_by_diagonal: size mismatch");
  RealMatrix c(a.rows(), a.cols(), a.precision());
  const bool mirror = a.is_symmetric();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = mirror ? i : 0; j < a.cols(); ++j) {
      c(i, j) = scale[i] * scale[j] * a(i, j);
      if (mirror) c(j, i) = c(i, j);
    }
  }
  return c;
}

}  // namespace homdich
