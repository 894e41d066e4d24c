#pragma once

#include <doctest.h>

#include <initializer_list>
#include <vector>

#include "homdich/error.hpp"
#include "homdich/numeric/matrix.hpp"

#define CHECK_THROWS_KIND(expr, expected_kind)            \
  do {                                                    \
    bool caught_ = false;                                 \
    try {                                                 \
      (void)(expr);                                       \
    } catch (const homdich::Error& e_) {                  \
      caught_ = true;                                     \
      CHECK(e_.kind() == (expected_kind));                \
    }                                                     \
    CHECK_MESSAGE(caught_, "expected a homdich::Error");  \
  } while (0)

inline homdich::RationalMatrix diag_of(std::initializer_list<homdich::Rational> v) {
  return homdich::RationalMatrix::diagonal(std::vector<homdich::Rational>(v));
}
