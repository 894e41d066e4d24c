#pragma once

#include <string>

#include "homdich/numeric/matrix.hpp"

namespace homdich {

// "rows cols" on the first line, then rows*cols whitespace-separated entries
// written as integers or p/q.
RationalMatrix parse_matrix(const std::string& text);
std::string format_matrix(const RationalMatrix& a);
RationalMatrix read_matrix_file(const std::string& path);

// Accepts an m x m diagonal matrix or a 1 x m row of weights.
RationalMatrix read_vertex_weights_file(const std::string& path);
RationalMatrix vertex_weights_from(const RationalMatrix& raw);

}  // namespace homdich
