#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "percount/realis.hpp"
#include "percount/seqlab.hpp"

using namespace percount;
using namespace percount::realis;

namespace {

Sequence seq(std::initializer_list<long> values) {
  std::vector<Int> terms;
  for (long v : values) terms.emplace_back(v);
  return Sequence(std::move(terms));
}

std::vector<Int> ints(std::initializer_list<long> values) {
  std::vector<Int> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("mobius function") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(30) == -1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK_THROWS_AS(mobius(0), std::domain_error);
}

TEST_CASE("sum of mobius over divisors vanishes for n > 1") {
  for (unsigned long n = 1; n <= 500; ++n) {
    long s = 0;
    for (unsigned long d : divisors(n)) s += mobius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<unsigned long>{1});
  CHECK(divisors(12) == std::vector<unsigned long>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(7) == std::vector<unsigned long>{1, 7});
  CHECK_THROWS_AS(divisors(0), std::domain_error);
}

TEST_CASE("p_part") {
  CHECK(p_part(Int(63), 7) == 7);
  CHECK(p_part(Int(-12), 2) == 4);
  CHECK(p_part(Int(5), 3) == 1);
  CHECK_THROWS_AS(p_part(Int(0), 2), std::domain_error);
  CHECK_THROWS_AS(p_part(Int(10), 4), std::domain_error);
}

TEST_CASE("p_part is multiplicative") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(1, 100000);
  for (int t = 0; t < 200; ++t) {
    Int x(dist(rng)), y(dist(rng));
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
      CHECK(p_part(x * y, p) == p_part(x, p) * p_part(y, p));
    }
  }
}

TEST_CASE("mobius transform of the Mersenne prefix") {
  MobiusTransform t = mobius_transform(seq({1, 3, 7, 15, 31, 63}));
  CHECK(t.star == ints({1, 2, 6, 12, 30, 54}));
}

TEST_CASE("Fibonacci forces the n=3 failure") {
  MobiusTransform t = mobius_transform(seq({1, 1, 2, 3, 5, 8}));
  CHECK(t.at(3) == 1);
}

TEST_CASE("constant sequence transform collapses") {
  MobiusTransform t = mobius_transform(seq({9, 9, 9, 9, 9}));
  CHECK(t.star == ints({9, 0, 0, 0, 0}));
}

TEST_CASE("inverse transform") {
  MobiusTransform t{ints({1, 2, 6, 12, 30, 54})};
  CHECK(inverse_transform(t).terms == ints({1, 3, 7, 15, 31, 63}));
  MobiusTransform c{ints({5, 0, 0, 0})};
  CHECK(inverse_transform(c).terms == ints({5, 5, 5, 5}));
}

TEST_CASE("round trip on random prefixes") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> val(-1000000000L, 1000000000L);
  std::uniform_int_distribution<int> len(1, 80);
  for (int t = 0; t < 100; ++t) {
    std::vector<Int> terms;
    int n = len(rng);
    for (int i = 0; i < n; ++i) terms.emplace_back(val(rng));
    Sequence u(terms);
    CHECK(inverse_transform(mobius_transform(u)).terms == terms);
    MobiusTransform s{terms};
    CHECK(mobius_transform(inverse_transform(s)).star == terms);
  }
}

TEST_CASE("check_realisable verdicts") {
  CHECK(check_realisable(seq({1, 3, 4, 7, 11, 18})).realisable_up_to_n);  // Lucas
  RealisabilityVerdict fib = check_realisable(seq({1, 1, 2, 3, 5, 8}));
  CHECK(!fib.realisable_up_to_n);
  REQUIRE(!fib.failures.empty());
  CHECK(fib.failures.front().n == 3);
  CHECK(fib.failures.front().kind == FailureKind::not_divisible);
  CHECK(fib.failures.front().star_value == 1);
  CHECK(check_realisable(seq({0, 0, 0, 0})).realisable_up_to_n);
  CHECK(check_realisable(seq({2, 4, 8, 16, 32})).realisable_up_to_n);
}

TEST_CASE("signed input is a precondition error, not a verdict") {
  CHECK_THROWS_AS(check_realisable(seq({1, -3, 4, -7})), std::domain_error);
  CHECK(check_realisable(abs_sequence(seq({1, -3, 4, -7}))).realisable_up_to_n);
}

TEST_CASE("abs_sequence") {
  CHECK(abs_sequence(seq({1, -3, 4, -7})).terms == ints({1, 3, 4, 7}));
  CHECK(abs_sequence(seq({0, 0})).terms == ints({0, 0}));
  CHECK(abs_sequence(seq({-5})).terms == ints({5}));
}

TEST_CASE("sum and product keep realisability on examples") {
  Sequence m = seq({1, 3, 7, 15, 31, 63});
  Sequence l = seq({1, 3, 4, 7, 11, 18});
  Sequence s = sum_sequences(m, m);
  CHECK(s.terms == ints({2, 6, 14, 30, 62, 126}));
  CHECK(check_realisable(s).realisable_up_to_n);
  CHECK(check_realisable(product_sequences(m, l)).realisable_up_to_n);
  CHECK(sum_sequences(m, seq({0, 0, 0, 0, 0, 0})).terms == m.terms);
  CHECK_THROWS_AS(sum_sequences(m, seq({1, 2})), std::invalid_argument);
}

TEST_CASE("orbit certificates") {
  OrbitCertificate mc = orbit_certificate(seq({1, 3, 7, 15, 31, 63}));
  CHECK(mc.counts == ints({1, 1, 2, 3, 6, 9}));
  OrbitCertificate lc = orbit_certificate(seq({1, 3, 4, 7, 11, 18}));
  CHECK(lc.counts == ints({1, 1, 1, 1, 2, 2}));
  OrbitCertificate fc = orbit_certificate(seq({1, 1, 1, 1}));
  CHECK(fc.counts == ints({1, 0, 0, 0}));
}

TEST_CASE("certificate for a non-realisable prefix carries the verdict") {
  try {
    orbit_certificate(seq({1, 1, 2, 3, 5, 8}));
    FAIL("expected NotRealisableError");
  } catch (const NotRealisableError& e) {
    REQUIRE(!e.verdict.failures.empty());
    CHECK(e.verdict.failures.front().n == 3);
  }
}

TEST_CASE("verify_certificate") {
  Sequence m = seq({1, 3, 7, 15, 31, 63});
  Sequence l = seq({1, 3, 4, 7, 11, 18});
  OrbitCertificate mc = orbit_certificate(m);
  CHECK(verify_certificate(mc, m));
  CHECK(!verify_certificate(mc, l));
  CHECK(verify_certificate(OrbitCertificate{ints({0, 0, 0})}, seq({0, 0, 0})));
}

TEST_CASE("local_sequence examples") {
  Sequence m21 = seqlab::mersenne(21);
  Sequence l7 = local_sequence(m21, 7);
  for (std::size_t n = 1; n <= 21; ++n) {
    if (n == 21)
      CHECK(l7.at(n) == 49);
    else if (n % 3 == 0)
      CHECK(l7.at(n) == 7);
    else
      CHECK(l7.at(n) == 1);
  }
  CHECK(local_sequence(seqlab::mersenne(4), 5).terms == ints({1, 1, 1, 5}));
  CHECK(local_sequence(seq({3, 9, 27}), 5).terms == ints({1, 1, 1}));
  CHECK_THROWS_AS(local_sequence(seq({1, 0, 3}), 5), std::domain_error);
}

TEST_CASE("Mersenne is everywhere locally realisable up to the desk bound") {
  EverywhereLocalReport rep = check_everywhere_local(seqlab::mersenne(48), 50);
  CHECK(rep.all_primes_pass);
  CHECK(rep.reconstruction_ok);
  for (const auto& [p, v] : rep.by_prime) CHECK(v.realisable_up_to_n);
}

TEST_CASE("prime power congruence holds for realisable sequences") {
  // u_{p^r} = u_{p^{r-1}} mod p^r is a consequence of the main test
  std::vector<Sequence> suite = {seqlab::mersenne(64), seqlab::s_plus(64),
                                 seqlab::jacobsthal_lucas(64)};
  for (const Sequence& u : suite) {
    REQUIRE(check_realisable(u).realisable_up_to_n);
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
      unsigned long pr = p;
      unsigned long prev = 1;
      while (pr <= u.length()) {
        Int diff = u.at(pr) - u.at(prev);
        CHECK(divisible(diff, pr));
        prev = pr;
        pr *= p;
      }
    }
  }
}

TEST_CASE("verdict is prefix scoped") {
  RealisabilityVerdict v = check_realisable(seq({1, 3, 4}));
  CHECK(v.checked_n == 3);
}
