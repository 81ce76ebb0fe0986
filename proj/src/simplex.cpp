#include "gds/simplex.hpp"

#include <iterator>
#include <sstream>

namespace gds {

int sort_with_sign(std::vector<Vertex>& seq) {
  int sign = 1;
  // insertion sort: seq is short (at most a handful of vertices)
  for (std::size_t i = 1; i < seq.size(); ++i) {
    for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
      if (seq[j - 1] == seq[j]) return 0;
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  }
  return sign;
}

int permutation_sign(std::span<const int> perm) {
  std::vector<Vertex> copy(perm.begin(), perm.end());
  return sort_with_sign(copy);
}

Simplex set_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex set_difference(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(const Simplex& a, const Simplex& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

std::string to_string(const Simplex& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ' ';
    os << s[i];
  }
  return os.str();
}

}  // namespace gds
