#include "homdich/partition/family.hpp"

#include "homdich/error.hpp"

namespace homdich {

DegreeWeightFamily DegreeWeightFamily::explicit_list(std::vector<std::vector<Rational>> diagonals) {
  require(!diagonals.empty(), ErrorKind::Contract, "explicit family needs at least D^[[0]]");
  const std::size_t s = diagonals.front().size();
  for (const auto& d : diagonals) require(d.size() == s, ErrorKind::Shape, "explicit family diagonals differ in size");
  DegreeWeightFamily f(Kind::Explicit, s);
  f.a_ = std::move(diagonals);
  return f;
}

DegreeWeightFamily DegreeWeightFamily::constant(std::vector<Rational> diagonal) {
  DegreeWeightFamily f(Kind::Constant, diagonal.size());
  f.w_ = std::move(diagonal);
  return f;
}

DegreeWeightFamily DegreeWeightFamily::condensed(std::vector<std::vector<Rational>> alpha,
                                                 std::vector<std::vector<Rational>> mu) {
  require(alpha.size() == mu.size(), ErrorKind::Shape, "alpha and mu tables differ in size");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    require(!alpha[i].empty() && alpha[i].size() == mu[i].size(), ErrorKind::Shape, "alpha/mu group sizes differ");
    for (std::size_t j = 0; j < alpha[i].size(); ++j) {
      require(sgn(alpha[i][j]) > 0 && sgn(mu[i][j]) > 0, ErrorKind::Contract, "alpha and mu must be positive");
    }
  }
  DegreeWeightFamily f(Kind::Condensed, alpha.size());
  f.a_ = std::move(alpha);
  f.b_ = std::move(mu);
  return f;
}

DegreeWeightFamily DegreeWeightFamily::power(std::vector<Rational> w) {
  DegreeWeightFamily f(Kind::Power, w.size());
  f.w_ = std::move(w);
  return f;
}

std::vector<Rational> DegreeWeightFamily::diagonal(std::size_t k) const {
  switch (kind_) {
    case Kind::Explicit:
      require(k < a_.size(), ErrorKind::Contract, "degree " + std::to_string(k) + " beyond explicit family");
      return a_[k];
    case Kind::Constant:
      return w_;
    case Kind::Condensed: {
      std::vector<Rational> out(size_);
      for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < a_[i].size(); ++j) out[i] += a_[i][j] * pow(b_[i][j], k);
      }
      return out;
    }
    case Kind::Power: {
      std::vector<Rational> out(size_);
      for (std::size_t i = 0; i < size_; ++i) out[i] = pow(w_[i], k);
      return out;
    }
  }
  fail(ErrorKind::Internal, "unknown family kind");
}

RationalMatrix DegreeWeightFamily::matrix(std::size_t k) const {
  const auto d = diagonal(k);
  return RationalMatrix::diagonal(d);
}

}  // namespace homdich
