#include "percount/bern.hpp"

#include <stdexcept>

namespace percount::bern {

const Rat& BernoulliTable::at(std::size_t index) const {
  if (index >= values.size())
    throw std::out_of_range("BernoulliTable: index " + std::to_string(index) +
                            " beyond table size " + std::to_string(values.size()));
  return values[index];
}

BernoulliTable bernoulli_table(std::size_t n) {
  if (n < 1) throw std::domain_error("bernoulli_table: N must be >= 1");
  std::size_t top = 2 * n;
  BernoulliTable table;
  table.values.resize(top + 1);
  table.values[0] = Rat(1);
  // sum_{k=0}^{m} binom(m+1, k) B_k = 0  =>  B_m in terms of B_0..B_{m-1}
  for (std::size_t m = 1; m <= top; ++m) {
    Rat acc(0);
    Int binom;
    for (std::size_t k = 0; k < m; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, k);
      acc += Rat(binom) * table.values[k];
    }
    Rat b = -acc / Rat(Int(static_cast<unsigned long>(m + 1)));
    b.canonicalize();
    table.values[m] = b;
  }
  return table;
}

Int vsc_denominator(std::size_t n) {
  if (n < 1) throw std::domain_error("vsc_denominator: n must be >= 1");
  Int prod = 1;
  // primes p with (p-1) | 2n satisfy p <= 2n + 1
  for (unsigned long p : primes_up_to(2 * n + 1)) {
    if ((2 * n) % (p - 1) == 0) prod *= p;
  }
  return prod;
}

Int local_per_count(unsigned long p, std::size_t n) {
  if (!is_prime(p)) throw std::domain_error("local_per_count: p is not prime");
  if (n < 1) throw std::domain_error("local_per_count: n must be >= 1");
  if (p == 2) return Int(2);
  return ((2 * n) % (p - 1) == 0) ? Int(p) : Int(1);
}

namespace {

void require_table(const BernoulliTable& table, std::size_t n, const char* who) {
  if (table.max_index() < 2 * n)
    throw std::invalid_argument(std::string(who) + ": table too small (need B_" +
                                std::to_string(2 * n) + ")");
}

}  // namespace

Sequence bernoulli_denominator_sequence(const BernoulliTable& table, std::size_t n) {
  require_table(table, n, "bernoulli_denominator_sequence");
  std::vector<Int> terms;
  terms.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) terms.push_back(table.at(2 * k).get_den());
  return Sequence(std::move(terms));
}

Sequence denom_b2n_over_2n(const BernoulliTable& table, std::size_t n) {
  require_table(table, n, "denom_b2n_over_2n");
  std::vector<Int> terms;
  terms.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Rat q = table.at(2 * k) / Rat(Int(static_cast<unsigned long>(2 * k)));
    q.canonicalize();
    terms.push_back(q.get_den());
  }
  return Sequence(std::move(terms));
}

Sequence num_b2n_over_2n(const BernoulliTable& table, std::size_t n) {
  require_table(table, n, "num_b2n_over_2n");
  std::vector<Int> terms;
  terms.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Rat q = table.at(2 * k) / Rat(Int(static_cast<unsigned long>(2 * k)));
    q.canonicalize();
    terms.push_back(abs(q.get_num()));
  }
  return Sequence(std::move(terms));
}

Sequence denom_b2n_over_4n(const BernoulliTable& table, std::size_t n) {
  require_table(table, n, "denom_b2n_over_4n");
  std::vector<Int> terms;
  terms.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Rat q = table.at(2 * k) / Rat(Int(static_cast<unsigned long>(4 * k)));
    q.canonicalize();
    terms.push_back(q.get_den());
  }
  return Sequence(std::move(terms));
}

Sequence bernoulli_denominator_sequence(std::size_t n) {
  return bernoulli_denominator_sequence(bernoulli_table(n), n);
}
Sequence denom_b2n_over_2n(std::size_t n) { return denom_b2n_over_2n(bernoulli_table(n), n); }
Sequence num_b2n_over_2n(std::size_t n) { return num_b2n_over_2n(bernoulli_table(n), n); }
Sequence denom_b2n_over_4n(std::size_t n) { return denom_b2n_over_4n(bernoulli_table(n), n); }

Theorem3Report check_theorem3_local(std::size_t n, unsigned long prime_bound) {
  Theorem3Report rep;
  rep.checked_n = n;
  BernoulliTable table = bernoulli_table(n);
  Sequence b = bernoulli_denominator_sequence(table, n);
  rep.global_pass = realis::check_realisable(b).realisable_up_to_n;
  rep.local_values_match = true;
  rep.all_local_pass = true;
  for (unsigned long p : primes_up_to(prime_bound)) {
    Sequence local = realis::local_sequence(b, p);
    for (std::size_t k = 1; k <= n; ++k) {
      if (local.at(k) != local_per_count(p, k)) {
        rep.local_values_match = false;
        break;
      }
    }
    realis::RealisabilityVerdict v = realis::check_realisable(local);
    if (!v.realisable_up_to_n) rep.all_local_pass = false;
    rep.local_verdicts.emplace(p, std::move(v));
  }
  return rep;
}

std::vector<ConjectureProbe> probe_conjectures(std::size_t n, unsigned long prime_bound) {
  BernoulliTable table = bernoulli_table(n);
  struct Item {
    std::string name;
    Sequence seq;
  };
  std::vector<Item> items = {
      {"denom_b2n_over_2n", denom_b2n_over_2n(table, n)},
      {"num_b2n_over_2n", num_b2n_over_2n(table, n)},
      {"denom_b2n_over_4n", denom_b2n_over_4n(table, n)},
  };
  std::vector<ConjectureProbe> probes;
  for (Item& item : items) {
    ConjectureProbe probe;
    probe.sequence_name = item.name;
    probe.global_pass = realis::check_realisable(item.seq).realisable_up_to_n;
    for (unsigned long p : primes_up_to(prime_bound)) {
      realis::RealisabilityVerdict v =
          realis::check_realisable(realis::local_sequence(item.seq, p));
      PrimeLocalResult res;
      res.pass = v.realisable_up_to_n;
      res.first_failure_n = v.failures.empty() ? 0 : v.failures.front().n;
      probe.locals.emplace(p, res);
    }
    probes.push_back(std::move(probe));
  }
  return probes;
}

KummerInstance kummer_check(const BernoulliTable& table, unsigned long p,
                            unsigned long r, std::size_t n, std::size_t n_prime) {
  if (!is_prime(p)) throw std::domain_error("kummer_check: p is not prime");
  if (n < 1 || n % 2 != 0 || n_prime < 1 || n_prime % 2 != 0)
    throw std::domain_error("kummer_check: n and n' must be even positive integers");
  if (n % (p - 1) == 0)
    throw std::domain_error("kummer_check: hypothesis violated: (p-1) divides n");
  unsigned long modulus = p - 1;
  for (unsigned long i = 0; i < r; ++i) modulus *= p;
  long diff_idx = static_cast<long>(n) - static_cast<long>(n_prime);
  if (diff_idx % static_cast<long>(modulus) != 0)
    throw std::domain_error(
        "kummer_check: hypothesis violated: n != n' mod (p-1)p^r");
  require_table(table, std::max(n, n_prime) / 2 + (std::max(n, n_prime) % 2), "kummer_check");

  auto side = [&](std::size_t idx) {
    Rat factor = Rat(1) - Rat(pow_int(Int(p), idx - 1));
    Rat v = factor * table.at(idx) / Rat(Int(static_cast<unsigned long>(idx)));
    v.canonicalize();
    return v;
  };
  KummerInstance inst;
  inst.p = p;
  inst.r = r;
  inst.n = n;
  inst.n_prime = n_prime;
  inst.lhs = side(n);
  inst.rhs = side(n_prime);
  Rat diff = inst.lhs - inst.rhs;
  diff.canonicalize();
  if (diff == 0) {
    inst.difference_zero = true;
    inst.pass = true;
    return inst;
  }
  if (divisible(diff.get_den(), p))
    throw std::logic_error("kummer_check: p divides a denominator despite (p-1) not dividing n");
  inst.valuation = static_cast<long>(valuation(diff.get_num(), p));
  inst.pass = inst.valuation >= static_cast<long>(r) + 1;
  return inst;
}

}  // namespace percount::bern
