#include "exact/linalg/integer.hpp"

#include <stdexcept>

namespace exact {

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  ExtendedGcd out;
  mpz_gcdext(out.gcd.get_mpz_t(), out.x.get_mpz_t(), out.y.get_mpz_t(),
             a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  if (m == 0) return a;
  Integer r;
  Integer absm = abs(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), absm.get_mpz_t());
  return r;
}

std::string to_string(const Integer& a) { return a.get_str(); }

Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace exact
