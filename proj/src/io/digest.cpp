#include "homdich/io/digest.hpp"

#include <cstdint>
#include <cstdio>

#include "homdich/graphs/graph_json.hpp"
#include "homdich/io/matrix_file.hpp"

namespace homdich {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string digest(const RationalMatrix& a) { return fnv1a_hex(format_matrix(a)); }

std::string digest(const Multigraph& g) { return fnv1a_hex(graph_to_json(g).dump()); }

}  // namespace homdich
