#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "percount/realis.hpp"
#include "percount/seqlab.hpp"

using namespace percount;
using namespace percount::seqlab;

namespace {

std::vector<Int> ints(std::initializer_list<long> values) {
  std::vector<Int> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("power_sequence") {
  CHECK(power_sequence(Int(2), 5).terms == ints({2, 4, 8, 16, 32}));
  CHECK(power_sequence(Int(1), 4).terms == ints({1, 1, 1, 1}));
  CHECK(power_sequence(Int(3), 3).terms == ints({3, 9, 27}));
  CHECK_THROWS_AS(power_sequence(Int(0), 3), std::domain_error);
}

TEST_CASE("closed-form families") {
  CHECK(mersenne(5).terms == ints({1, 3, 7, 15, 31}));
  CHECK(jacobsthal_lucas(5).terms == ints({3, 3, 9, 15, 33}));
  CHECK(s_plus(6).terms == ints({1, 13, 19, 97, 211, 793}));
}

TEST_CASE("linear_recurrence") {
  CHECK(linear_recurrence({Int(1), Int(1)}, {Int(1), Int(1)}, 6).terms ==
        ints({1, 1, 2, 3, 5, 8}));
  CHECK(linear_recurrence({Int(1), Int(1)}, {Int(1), Int(3)}, 6).terms ==
        ints({1, 3, 4, 7, 11, 18}));
  CHECK(linear_recurrence({Int(1), Int(1), Int(1)}, {Int(1), Int(3), Int(7)}, 5).terms ==
        ints({1, 3, 7, 11, 21}));
  CHECK_THROWS_AS(linear_recurrence({Int(1), Int(1)}, {Int(1), Int(1)}, 1),
                  std::invalid_argument);
}

TEST_CASE("companion matrices") {
  IntMatrix a = companion_matrix(IntPolynomial::parse("x^3-x^2-x-1"));
  CHECK(format_matrix(a) == "0,1,0;0,0,1;1,1,1");
  IntMatrix b = companion_matrix(IntPolynomial::parse("x-2"));
  CHECK(format_matrix(b) == "2");
  // x^2 - Bx + C with B = 3, C = 7
  IntMatrix c = companion_matrix(IntPolynomial({Int(7), Int(-3), Int(1)}));
  CHECK(format_matrix(c) == "0,1;-7,3");
}

TEST_CASE("trace sequences") {
  IntMatrix trib = companion_matrix(IntPolynomial::parse("x^3-x^2-x-1"));
  CHECK(trace_sequence(trib, 5).terms == ints({1, 3, 7, 11, 21}));
  CHECK(trace_sequence(IntMatrix::identity(3), 4).terms == ints({3, 3, 3, 3}));
  IntMatrix two(1);
  two.at(0, 0) = 2;
  CHECK(trace_sequence(two, 3).terms == ints({2, 4, 8}));
}

TEST_CASE("lehmer_pierce") {
  CHECK(lehmer_pierce(IntPolynomial::parse("x-2"), 10).terms == mersenne(10).terms);
  CHECK(lehmer_pierce(IntPolynomial::parse("x^2-x-1"), 6).terms ==
        ints({1, 1, 4, 5, 11, 16}));
  // det(A_f - I) = +-f(1)
  CHECK(lehmer_pierce(IntPolynomial::parse("x^2-x-1"), 1).at(1) == 1);
}

TEST_CASE("lehmer_pierce rejects cyclotomic factors") {
  CHECK_THROWS_AS(lehmer_pierce(IntPolynomial::parse("x-1"), 5), ErgodicityError);
  CHECK_THROWS_AS(lehmer_pierce(IntPolynomial::parse("x^2-x+1"), 5), ErgodicityError);
  CHECK_THROWS_AS(lehmer_pierce(IntPolynomial::parse("x^2+1"), 5), ErgodicityError);
  try {
    lehmer_pierce(IntPolynomial::parse("x^3-x^2+x-1"), 5);  // (x-1)(x^2+1)
    FAIL("expected ErgodicityError");
  } catch (const ErgodicityError& e) {
    CHECK(e.root_of_unity_order >= 1);
  }
}

TEST_CASE("edge shift oracle examples") {
  IntMatrix two(1);
  two.at(0, 0) = 2;
  CHECK(edge_shift_count(two, 3) == 8);
  IntMatrix golden = parse_matrix("1,1;1,0");
  CHECK(edge_shift_count(golden, 4) == 7);  // L_4
  IntMatrix any = parse_matrix("2,1;0,1");
  CHECK(edge_shift_count(any, 1) == any.trace());
  CHECK_THROWS_AS(edge_shift_count(parse_matrix("-1"), 2), std::domain_error);
  CHECK_THROWS_AS(edge_shift_count(golden, 13), std::invalid_argument);
}

TEST_CASE("oracle equivalence on random small matrices") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(0, 2);
  std::uniform_int_distribution<int> dims(1, 3);
  for (int t = 0; t < 50; ++t) {
    std::size_t d = static_cast<std::size_t>(dims(rng));
    IntMatrix a(d);
    for (Int& e : a.data) e = entry(rng);
    Sequence traces = trace_sequence(a, 8);
    for (std::size_t n = 1; n <= 8; ++n) CHECK(edge_shift_count(a, n) == traces.at(n));
  }
}

TEST_CASE("traces of nonnegative matrices are realisable") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(0, 4);
  for (int t = 0; t < 40; ++t) {
    IntMatrix a(3);
    for (Int& e : a.data) e = entry(rng);
    CHECK(realis::check_realisable(trace_sequence(a, 30)).realisable_up_to_n);
  }
}

TEST_CASE("matrix Euler-Fermat witnesses") {
  IntMatrix trib = companion_matrix(IntPolynomial::parse("x^3-x^2-x-1"));
  EulerFermatWitness w = verify_matrix_euler_fermat(trib, 2, 2);
  CHECK(w.holds);
  CHECK(w.trace_high == 11);
  CHECK(w.trace_low == 3);

  IntMatrix two(1);
  two.at(0, 0) = 2;
  EulerFermatWitness w2 = verify_matrix_euler_fermat(two, 3, 2);
  CHECK(w2.holds);
  CHECK(w2.trace_high == 512);
  CHECK(w2.trace_low == 8);

  CHECK(verify_matrix_euler_fermat(IntMatrix::identity(4), 5, 1).holds);
}

TEST_CASE("Euler-Fermat over a random signed sample") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int t = 0; t < 25; ++t) {
    IntMatrix a(3);
    for (Int& e : a.data) e = entry(rng);
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL})
      for (unsigned long r : {1UL, 2UL}) CHECK(verify_matrix_euler_fermat(a, p, r).holds);
  }
}

TEST_CASE("star divisibility for trace sequences") {
  IntMatrix trib = companion_matrix(IntPolynomial::parse("x^3-x^2-x-1"));
  StarDivisibilityReport rep = verify_star_divisibility(trib, 4);
  CHECK(rep.all_divisible);
  // u*_4 = 11 - 3 = 8
  Sequence u = trace_sequence(trib, 4);
  CHECK(realis::mobius_transform(u).at(4) == 8);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int t = 0; t < 20; ++t) {
    IntMatrix a(3);
    for (Int& e : a.data) e = entry(rng);
    CHECK(verify_star_divisibility(a, 30).all_divisible);
  }
}

TEST_CASE("families stay realisable out to N=100") {
  CHECK(realis::check_realisable(mersenne(100)).realisable_up_to_n);
  CHECK(realis::check_realisable(jacobsthal_lucas(100)).realisable_up_to_n);
  CHECK(realis::check_realisable(s_plus(100)).realisable_up_to_n);
  CHECK(realis::check_realisable(lehmer_pierce(IntPolynomial::parse("x^2-x-1"), 100))
            .realisable_up_to_n);
}

TEST_CASE("generator dispatch") {
  GeneratorSpec spec;
  spec.kind = GeneratorSpec::Kind::lucas;
  CHECK(generate(spec, 6).terms == ints({1, 3, 4, 7, 11, 18}));
  spec.kind = GeneratorSpec::Kind::power;
  spec.a = 2;
  CHECK(generate(spec, 3).terms == ints({2, 4, 8}));
  spec.kind = GeneratorSpec::Kind::lehmer_pierce;
  spec.poly = IntPolynomial::parse("x-2");
  CHECK(generate(spec, 4).terms == ints({1, 3, 7, 15}));
}
