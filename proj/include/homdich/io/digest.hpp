#pragma once

#include <string>

#include "homdich/graphs/multigraph.hpp"
#include "homdich/numeric/matrix.hpp"

namespace homdich {

// 64-bit FNV-1a over the canonical serialization, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);
std::string digest(const RationalMatrix& a);
std::string digest(const Multigraph& g);

}  // namespace homdich
