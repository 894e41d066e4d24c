#include "homdich/io/matrix_file.hpp"

#include <fstream>
#include <sstream>

#include "homdich/error.hpp"

namespace homdich {

RationalMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  long long rows = -1;
  long long cols = -1;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0) fail(ErrorKind::Parse, "matrix header must be \"rows cols\"");
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  std::string tok;
  while (in >> tok) entries.push_back(parse_rational(tok));
  if (entries.size() != static_cast<std::size_t>(rows * cols)) {
    fail(ErrorKind::Parse, "matrix declares " + std::to_string(rows * cols) + " entries but has " +
                               std::to_string(entries.size()));
  }
  return RationalMatrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(entries));
}

std::string format_matrix(const RationalMatrix& a) {
  std::ostringstream out;
  out << a.rows() << ' ' << a.cols() << '\n';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << to_string(a(i, j));
    out << '\n';
  }
  return out.str();
}

RationalMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open matrix file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

RationalMatrix vertex_weights_from(const RationalMatrix& raw) {
  if (raw.rows() == 1 && raw.cols() != 1) return RationalMatrix::diagonal(raw.row(0));
  require(raw.is_square() && raw.is_diagonal(), ErrorKind::Parse, "vertex weights must be diagonal or a single row");
  return raw;
}

RationalMatrix read_vertex_weights_file(const std::string& path) { return vertex_weights_from(read_matrix_file(path)); }

}  // namespace homdich
