#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "percount/numeric.hpp"
#include "percount/realis.hpp"
#include "percount/sequence.hpp"

namespace percount::bern {

// Exact rationals B_0 .. B_{2N} in lowest terms.
struct BernoulliTable {
  std::vector<Rat> values;

  const Rat& at(std::size_t index) const;  // B_index
  std::size_t max_index() const { return values.size() - 1; }
};

BernoulliTable bernoulli_table(std::size_t n);

// von Staudt-Clausen: product of primes p with (p-1) | 2n.
Int vsc_denominator(std::size_t n);

// |Per_n(T_p)| for the mod-p local map: p when (p-1) | 2n, else 1;
// always 2 at p = 2 (the identity on a two-point space).
Int local_per_count(unsigned long p, std::size_t n);

// b_n = denominator of B_{2n}.
Sequence bernoulli_denominator_sequence(const BernoulliTable& table, std::size_t n);
Sequence denom_b2n_over_2n(const BernoulliTable& table, std::size_t n);
Sequence num_b2n_over_2n(const BernoulliTable& table, std::size_t n);
Sequence denom_b2n_over_4n(const BernoulliTable& table, std::size_t n);

// Convenience overloads that build their own table.
Sequence bernoulli_denominator_sequence(std::size_t n);
Sequence denom_b2n_over_2n(std::size_t n);
Sequence num_b2n_over_2n(std::size_t n);
Sequence denom_b2n_over_4n(std::size_t n);

struct Theorem3Report {
  bool global_pass = false;
  bool local_values_match = false;  // [b_n]_p == local_per_count(p, n) everywhere
  std::map<unsigned long, realis::RealisabilityVerdict> local_verdicts;
  bool all_local_pass = false;
  std::size_t checked_n = 0;
};

Theorem3Report check_theorem3_local(std::size_t n, unsigned long prime_bound);

struct PrimeLocalResult {
  bool pass = false;
  std::size_t first_failure_n = 0;  // 0 when pass
};

struct ConjectureProbe {
  std::string sequence_name;
  bool global_pass = false;
  std::map<unsigned long, PrimeLocalResult> locals;
};

// Numerical evidence for the three observed statements about B_{2n}/2n and
// B_{2n}/4n; reports evidence only, never "verified".
std::vector<ConjectureProbe> probe_conjectures(std::size_t n, unsigned long prime_bound);

struct KummerInstance {
  unsigned long p = 0;
  unsigned long r = 0;
  std::size_t n = 0;
  std::size_t n_prime = 0;
  Rat lhs;  // (1 - p^{n-1}) B_n / n
  Rat rhs;
  bool difference_zero = false;  // valuation +infinity
  long valuation = 0;            // v_p(lhs - rhs) when nonzero
  bool pass = false;             // valuation >= r + 1 (or difference zero)
};

KummerInstance kummer_check(const BernoulliTable& table, unsigned long p,
                            unsigned long r, std::size_t n, std::size_t n_prime);

}  // namespace percount::bern
