#include "percount/realis.hpp"

#include <algorithm>

namespace percount::realis {

int mobius(unsigned long n) {
  if (n == 0) throw std::domain_error("mobius: n must be >= 1");
  if (n == 1) return 1;
  int k = 0;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;  // not squarefree
      ++k;
    }
  }
  if (n > 1) ++k;
  return (k % 2 == 0) ? 1 : -1;
}

std::vector<unsigned long> divisors(unsigned long n) {
  if (n == 0) throw std::domain_error("divisors: n must be >= 1");
  std::vector<unsigned long> small, large;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Int p_part(const Int& x, unsigned long p) {
  if (x == 0) throw std::domain_error("p_part: x = 0 (valuation infinite)");
  if (!is_prime(p)) throw std::domain_error("p_part: p is not prime");
  return pow_int(Int(p), valuation(x, p));
}

MobiusTransform mobius_transform(const Sequence& u) {
  if (u.length() == 0) throw std::domain_error("mobius_transform: empty sequence");
  MobiusTransform out;
  out.star.reserve(u.length());
  for (std::size_t n = 1; n <= u.length(); ++n) {
    Int s = 0;
    for (unsigned long d : divisors(n)) {
      int mu = mobius(d);
      if (mu == 1)
        s += u.at(n / d);
      else if (mu == -1)
        s -= u.at(n / d);
    }
    out.star.push_back(std::move(s));
  }
  return out;
}

Sequence inverse_transform(const MobiusTransform& star) {
  if (star.length() == 0) throw std::domain_error("inverse_transform: empty input");
  std::vector<Int> terms;
  terms.reserve(star.length());
  for (std::size_t n = 1; n <= star.length(); ++n) {
    Int s = 0;
    for (unsigned long d : divisors(n)) s += star.at(d);
    terms.push_back(std::move(s));
  }
  return Sequence(std::move(terms));
}

RealisabilityVerdict check_realisable(const Sequence& u) {
  for (std::size_t n = 1; n <= u.length(); ++n) {
    if (u.at(n) < 0)
      throw std::domain_error("check_realisable: negative term at n = " +
                              std::to_string(n) + " (use abs_sequence first)");
  }
  MobiusTransform t = mobius_transform(u);
  RealisabilityVerdict v;
  v.checked_n = u.length();
  for (std::size_t n = 1; n <= t.length(); ++n) {
    const Int& s = t.at(n);
    if (s < 0) {
      v.failures.push_back({n, FailureKind::negative, s});
    } else if (!divisible(s, n)) {
      v.failures.push_back({n, FailureKind::not_divisible, s});
    }
  }
  v.realisable_up_to_n = v.failures.empty();
  return v;
}

Sequence abs_sequence(const Sequence& u) {
  std::vector<Int> terms;
  terms.reserve(u.length());
  for (const Int& t : u.terms) terms.push_back(abs(t));
  return Sequence(std::move(terms));
}

static void require_equal_lengths(const Sequence& u, const Sequence& v) {
  if (u.length() != v.length())
    throw std::invalid_argument("sequence length mismatch: " +
                                std::to_string(u.length()) + " vs " +
                                std::to_string(v.length()));
}

Sequence sum_sequences(const Sequence& u, const Sequence& v) {
  require_equal_lengths(u, v);
  std::vector<Int> terms;
  terms.reserve(u.length());
  for (std::size_t i = 0; i < u.length(); ++i) terms.push_back(u.terms[i] + v.terms[i]);
  return Sequence(std::move(terms));
}

Sequence product_sequences(const Sequence& u, const Sequence& v) {
  require_equal_lengths(u, v);
  std::vector<Int> terms;
  terms.reserve(u.length());
  for (std::size_t i = 0; i < u.length(); ++i) terms.push_back(u.terms[i] * v.terms[i]);
  return Sequence(std::move(terms));
}

OrbitCertificate orbit_certificate(const Sequence& u) {
  RealisabilityVerdict v = check_realisable(u);
  if (!v.realisable_up_to_n) {
    std::string msg = "orbit_certificate: prefix is not realisable (first failure at n = " +
                      std::to_string(v.failures.front().n) + ")";
    throw NotRealisableError(std::move(msg), std::move(v));
  }
  MobiusTransform t = mobius_transform(u);
  OrbitCertificate c;
  c.counts.reserve(u.length());
  for (std::size_t n = 1; n <= u.length(); ++n) {
    c.counts.push_back(t.at(n) / static_cast<unsigned long>(n));
  }
  return c;
}

bool verify_certificate(const OrbitCertificate& c, const Sequence& u) {
  if (c.counts.size() != u.length()) return false;
  for (std::size_t n = 1; n <= u.length(); ++n) {
    Int s = 0;
    for (unsigned long d : divisors(n)) s += Int(d) * c.counts[d - 1];
    if (s != u.at(n)) return false;
  }
  return true;
}

Sequence local_sequence(const Sequence& u, unsigned long p) {
  if (!is_prime(p)) throw std::domain_error("local_sequence: p is not prime");
  std::vector<Int> terms;
  terms.reserve(u.length());
  for (std::size_t n = 1; n <= u.length(); ++n) {
    if (u.at(n) == 0)
      throw std::domain_error("local_sequence: zero term at n = " + std::to_string(n));
    terms.push_back(p_part(u.at(n), p));
  }
  return Sequence(std::move(terms));
}

EverywhereLocalReport check_everywhere_local(const Sequence& u,
                                             unsigned long prime_bound) {
  EverywhereLocalReport rep;
  rep.checked_n = u.length();
  std::vector<unsigned long> primes = primes_up_to(prime_bound);

  std::vector<Sequence> locals;
  locals.reserve(primes.size());
  for (unsigned long p : primes) locals.push_back(local_sequence(u, p));

  rep.all_primes_pass = true;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    RealisabilityVerdict v = check_realisable(locals[i]);
    if (!v.realisable_up_to_n) rep.all_primes_pass = false;
    rep.by_prime.emplace(primes[i], std::move(v));
  }

  // Reconstruction: the product of p-parts over p <= P must divide |u_n|
  // exactly, with a cofactor carrying no prime factor <= P.
  rep.reconstruction_ok = true;
  for (std::size_t n = 1; n <= u.length(); ++n) {
    Int prod = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) prod *= locals[i].at(n);
    Int a = abs(u.at(n));
    if (!mpz_divisible_p(a.get_mpz_t(), prod.get_mpz_t())) {
      rep.reconstruction_ok = false;
      break;
    }
    Int cofactor = a / prod;
    for (unsigned long p : primes) {
      if (divisible(cofactor, p)) {
        rep.reconstruction_ok = false;
        break;
      }
    }
    if (!rep.reconstruction_ok) break;
  }
  return rep;
}

}  // namespace percount::realis
