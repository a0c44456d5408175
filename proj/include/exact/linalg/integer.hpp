#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace exact {

using Integer = mpz_class;

struct ExtendedGcd {
  Integer gcd;
  Integer x;
  Integer y;
};

// gcd >= 0 and x*a + y*b == gcd.
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Quotient rounded towards negative infinity.
Integer floor_div(const Integer& a, const Integer& b);

// Representative in [0, |m|) for m != 0; a itself for m == 0.
Integer mod_floor(const Integer& a, const Integer& m);

inline bool fits_int64(const Integer& a) { return a.fits_slong_p() != 0; }

std::string to_string(const Integer& a);
Integer parse_integer(std::string_view text);

}  // namespace exact
