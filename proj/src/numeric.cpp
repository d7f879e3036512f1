#include "percount/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace percount {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (unsigned long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<unsigned long> primes_up_to(unsigned long bound) {
  std::vector<unsigned long> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (unsigned long p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (unsigned long m = p * p; m <= bound; m += p) composite[m] = true;
  }
  return out;
}

unsigned long valuation(const Int& x, unsigned long p) {
  if (x == 0) throw std::domain_error("valuation: x = 0 has infinite valuation");
  if (!is_prime(p)) throw std::domain_error("valuation: p is not prime");
  Int a = abs(x);
  Int reduced;
  Int pz(static_cast<unsigned long>(p));
  mp_bitcnt_t v = mpz_remove(reduced.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t());
  return static_cast<unsigned long>(v);
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_int: empty string");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("parse_int: sign without digits");
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("parse_int: not a decimal integer: '" + s + "'");
  }
  return Int(s);
}

bool divisible(const Int& x, unsigned long n) {
  return mpz_divisible_ui_p(x.get_mpz_t(), n) != 0;
}

}  // namespace percount
