#ifndef ORBITSYM_RATIONAL_HPP
#define ORBITSYM_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace orbitsym {

// All exact arithmetic in the library runs over GMP rationals.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_den() == 1;
}

inline long to_long(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() != 1) throw std::invalid_argument("to_long: not an integer: " + c.get_str());
  return mpz_get_si(c.get_num().get_mpz_t());
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

using IVec = std::vector<int>;

inline int ivec_sum(const IVec& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

struct IVecHash {
  size_t operator()(const IVec& v) const {
    size_t h = 0x9e3779b97f4a7c15ull ^ v.size();
    for (int x : v) h = h * 1099511628211ull + static_cast<size_t>(x + 0x7fff);
    return h;
  }
};

}  // namespace orbitsym

#endif
