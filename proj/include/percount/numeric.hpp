#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace percount {

// Exact arithmetic everywhere; terms like B_600's numerator or 2^200 - 1
// must survive untruncated.
using Int = mpz_class;
using Rat = mpq_class;

bool is_prime(unsigned long n);

std::vector<unsigned long> primes_up_to(unsigned long bound);

// v_p(|x|); x must be nonzero, p prime.
unsigned long valuation(const Int& x, unsigned long p);

Int pow_int(const Int& base, unsigned long exp);

// Strict decimal parse (optional leading '-'), throws std::invalid_argument.
Int parse_int(const std::string& s);

bool divisible(const Int& x, unsigned long n);

}  // namespace percount
