#include "homdich/numeric/matrix.hpp"

#include <sstream>
#include <utility>

#include "homdich/error.hpp"

namespace homdich {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : RationalMatrix(rows, cols, std::vector<Rational>(rows * cols)) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  require(entries_.size() == rows_ * cols_, ErrorKind::Shape,
          "matrix entry count " + std::to_string(entries_.size()) + " does not match " +
              std::to_string(rows_) + "x" + std::to_string(cols_));
  compute_flags();
}

RationalMatrix RationalMatrix::from_rows(
    std::initializer_list<std::initializer_list<Rational>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Rational> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    require(row.size() == c, ErrorKind::Shape, "ragged matrix literal");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return RationalMatrix(r, c, std::move(entries));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  std::vector<Rational> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return RationalMatrix(n, n, std::move(e));
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> diag) {
  const std::size_t n = diag.size();
  std::vector<Rational> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return RationalMatrix(n, n, std::move(e));
}

void RationalMatrix::compute_flags() {
  symmetric_ = rows_ == cols_;
  diagonal_ = rows_ == cols_;
  nonnegative_ = true;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& x = (*this)(i, j);
      if (sgn(x) < 0) nonnegative_ = false;
      if (i != j && sgn(x) != 0) diagonal_ = false;
      if (symmetric_ && j > i && x != (*this)(j, i)) symmetric_ = false;
    }
  }
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : entries_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

std::vector<Rational> RationalMatrix::diagonal_entries() const {
  const std::size_t n = std::min(rows_, cols_);
  std::vector<Rational> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = (*this)(i, i);
  return d;
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Rational> RationalMatrix::column(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  require(a.cols() == b.rows(), ErrorKind::Shape,
          "mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
              std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  std::vector<Rational> e(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) e[i * b.cols() + j] += aik * b(k, j);
    }
  }
  return RationalMatrix(a.rows(), b.cols(), std::move(e));
}

RationalMatrix mat_add(const RationalMatrix& a, const RationalMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::Shape, "mat_add: shape mismatch");
  std::vector<Rational> e(a.entries());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return RationalMatrix(a.rows(), a.cols(), std::move(e));
}

RationalMatrix transpose(const RationalMatrix& a) {
  std::vector<Rational> e(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) e[j * a.rows() + i] = a(i, j);
  }
  return RationalMatrix(a.cols(), a.rows(), std::move(e));
}

RationalMatrix hadamard_pow(const RationalMatrix& a, unsigned long p) {
  require(p >= 1, ErrorKind::Contract, "hadamard_pow requires p >= 1");
  std::vector<Rational> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = pow(a.entries()[i], p);
  return RationalMatrix(a.rows(), a.cols(), std::move(e));
}

RationalMatrix hadamard_mul(const RationalMatrix& a, const RationalMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::Shape,
          "hadamard_mul: shape mismatch");
  std::vector<Rational> e(a.entries().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.entries()[i] * b.entries()[i];
  return RationalMatrix(a.rows(), a.cols(), std::move(e));
}

RationalMatrix submatrix(const RationalMatrix& a, std::span<const std::size_t> row_idx,
                         std::span<const std::size_t> col_idx) {
  std::vector<Rational> e;
  e.reserve(row_idx.size() * col_idx.size());
  for (std::size_t i : row_idx) {
    for (std::size_t j : col_idx) {
      require(i < a.rows() && j < a.cols(), ErrorKind::Shape, "submatrix index out of range");
      e.push_back(a(i, j));
    }
  }
  return RationalMatrix(row_idx.size(), col_idx.size(), std::move(e));
}

RationalMatrix principal_submatrix(const RationalMatrix& a, std::span<const std::size_t> idx) {
  return submatrix(a, idx, idx);
}

RationalMatrix diagonal_inverse(const RationalMatrix& d) {
  require(d.is_diagonal(), ErrorKind::Contract, "diagonal_inverse: matrix is not diagonal");
  std::vector<Rational> diag = d.diagonal_entries();
  for (auto& x : diag) {
    require(sgn(x) != 0, ErrorKind::Contract, "diagonal_inverse: zero on the diagonal");
    x = 1 / x;
  }
  return RationalMatrix::diagonal(diag);
}

RationalMatrix mat_pow(const RationalMatrix& a, unsigned long n) {
  require(a.is_square(), ErrorKind::Shape, "mat_pow: non-square matrix");
  RationalMatrix result = RationalMatrix::identity(a.rows());
  RationalMatrix base = a;
  while (n > 0) {
    if (n & 1UL) result = mat_mul(result, base);
    n >>= 1;
    if (n > 0) base = mat_mul(base, base);
  }
  return result;
}

namespace {

// Row-scaled integer copy of the matrix; `scale` collects the product of the
// row multipliers so that det(a) = det(int_copy) / scale.
std::vector<Integer> integer_rows(const RationalMatrix& a, Integer& scale) {
  std::vector<Integer> m(a.rows() * a.cols());
  scale = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& x = a(i, j);
      m[i * a.cols() + j] = x.get_num() * (l / x.get_den());
    }
    scale *= l;
  }
  return m;
}

struct EliminationResult {
  std::size_t rank = 0;
  int sign = 1;
  Integer last_pivot = 1;
};

// Fraction-free echelon reduction; every division below is exact.
EliminationResult bareiss(std::vector<Integer>& m, std::size_t rows, std::size_t cols) {
  EliminationResult res;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m[piv * cols + c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
      res.sign = -res.sign;
    }
    const Integer pivot = m[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = m[i * cols + j] * pivot - m[i * cols + c] * m[r * cols + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i * cols + j] = v;
      }
      m[i * cols + c] = 0;
    }
    prev = pivot;
    res.last_pivot = pivot;
    ++r;
  }
  res.rank = r;
  return res;
}

}  // namespace

std::size_t rank(const RationalMatrix& a) {
  if (a.empty()) return 0;
  Integer scale;
  auto m = integer_rows(a, scale);
  return bareiss(m, a.rows(), a.cols()).rank;
}

Rational det(const RationalMatrix& a) {
  require(a.is_square(), ErrorKind::Shape,
          "det of non-square " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " matrix");
  if (a.rows() == 0) return Rational(1);
  Integer scale;
  auto m = integer_rows(a, scale);
  const auto res = bareiss(m, a.rows(), a.cols());
  if (res.rank < a.rows()) return Rational(0);
  return make_rational(res.sign * res.last_pivot, scale);
}

std::string to_string(const RationalMatrix& a) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << to_string(a(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace homdich
