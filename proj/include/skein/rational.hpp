#ifndef SKEIN_RATIONAL_HPP
#define SKEIN_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skein {

using Int = mpz_class;
using Rational = mpq_class;  // always stored canonically by GMP

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// "3", "-2/7"
inline std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::int64_t to_int64(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer too large");
  return z.get_si();
}

}  // namespace skein

#endif
