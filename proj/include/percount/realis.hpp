#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "percount/numeric.hpp"
#include "percount/sequence.hpp"

namespace percount::realis {

// star[n-1] = u*_n = (u * mu)(n), same length as the source sequence.
struct MobiusTransform {
  std::vector<Int> star;

  std::size_t length() const { return star.size(); }
  const Int& at(std::size_t n) const { return star.at(n - 1); }
};

enum class FailureKind { negative, not_divisible };

struct Failure {
  std::size_t n;
  FailureKind kind;
  Int star_value;
};

// A statement about the prefix only; says nothing about n > checked_n.
struct RealisabilityVerdict {
  bool realisable_up_to_n = false;
  std::vector<Failure> failures;  // ascending n, exhaustive
  std::size_t checked_n = 0;
};

// counts[n-1] = c_n, the number of orbits of least period n.
struct OrbitCertificate {
  std::vector<Int> counts;
};

class NotRealisableError : public std::domain_error {
 public:
  NotRealisableError(std::string msg, RealisabilityVerdict v)
      : std::domain_error(std::move(msg)), verdict(std::move(v)) {}
  RealisabilityVerdict verdict;
};

int mobius(unsigned long n);
std::vector<unsigned long> divisors(unsigned long n);

// p^{v_p(|x|)}; x must be nonzero, p prime.
Int p_part(const Int& x, unsigned long p);

MobiusTransform mobius_transform(const Sequence& u);
Sequence inverse_transform(const MobiusTransform& star);

// Prefix test: every n <= N with u*_n < 0 or n not dividing u*_n is a
// failure. Negative input terms are a precondition error, not "false".
RealisabilityVerdict check_realisable(const Sequence& u);

Sequence abs_sequence(const Sequence& u);
Sequence sum_sequences(const Sequence& u, const Sequence& v);
Sequence product_sequences(const Sequence& u, const Sequence& v);

// Throws NotRealisableError if the prefix fails the test.
OrbitCertificate orbit_certificate(const Sequence& u);
bool verify_certificate(const OrbitCertificate& c, const Sequence& u);

// n -> p_part(u_n, p); rejects sequences with a zero term.
Sequence local_sequence(const Sequence& u, unsigned long p);

struct EverywhereLocalReport {
  std::map<unsigned long, RealisabilityVerdict> by_prime;
  bool all_primes_pass = false;
  // |u_n| equals the product of its p-parts over p <= P times a cofactor
  // verified coprime to every p <= P, for every n.
  bool reconstruction_ok = false;
  std::size_t checked_n = 0;
};

EverywhereLocalReport check_everywhere_local(const Sequence& u,
                                             unsigned long prime_bound);

}  // namespace percount::realis
