#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "percount/realis.hpp"
#include "percount/recur.hpp"
#include "percount/seqlab.hpp"

using namespace percount;
using namespace percount::recur;

TEST_CASE("degeneracy witnesses") {
  CHECK(is_degenerate({Int(1), Int(1)}).degenerate);
  CHECK(is_degenerate({Int(1), Int(1)}).witness_order == 3);
  CHECK(!is_degenerate({Int(1), Int(-1)}).degenerate);  // Fibonacci
  CHECK(is_degenerate({Int(0), Int(-1)}).degenerate);
  CHECK(is_degenerate({Int(0), Int(-1)}).witness_order == 2);
  CHECK_THROWS_AS(is_degenerate({Int(3), Int(0)}), std::domain_error);
  CHECK_THROWS_AS(is_degenerate({Int(4), Int(4)}), std::domain_error);  // Delta = 0
}

TEST_CASE("classification: Fibonacci recurrence spans the Lucas line") {
  ClassificationReport rep = classify({Int(1), Int(-1)}, 6);
  CHECK(rep.disc_case == DiscCase::pos_nonsquare_disc);
  CHECK(rep.dimension == 1);
  REQUIRE(rep.generators.size() == 1);
  std::vector<Int> lucas = {Int(1), Int(3), Int(4), Int(7), Int(11), Int(18)};
  CHECK(rep.generators[0].prefix.terms == lucas);
}

TEST_CASE("classification: negative discriminant has dimension 0") {
  ClassificationReport rep = classify({Int(1), Int(2)});
  CHECK(rep.disc_case == DiscCase::neg_disc);
  CHECK(rep.dimension == 0);
  CHECK(rep.generators.empty());
}

TEST_CASE("classification: square discriminant splits into two power lines") {
  ClassificationReport rep = classify({Int(5), Int(6)}, 4);
  CHECK(rep.disc_case == DiscCase::pos_square_disc);
  CHECK(rep.dimension == 2);
  REQUIRE(rep.generators.size() == 2);
  std::vector<Int> threes = {Int(3), Int(9), Int(27), Int(81)};
  std::vector<Int> twos = {Int(2), Int(4), Int(8), Int(16)};
  CHECK(rep.generators[0].prefix.terms == threes);
  CHECK(rep.generators[1].prefix.terms == twos);
}

TEST_CASE("classification: zero discriminant") {
  ClassificationReport rep = classify({Int(4), Int(4)}, 4);
  CHECK(rep.disc_case == DiscCase::zero_disc);
  CHECK(rep.dimension == 1);
  REQUIRE(rep.generators.size() == 1);
  std::vector<Int> twos = {Int(2), Int(4), Int(8), Int(16)};
  CHECK(rep.generators[0].prefix.terms == twos);
}

TEST_CASE("classification refuses degenerate recurrences") {
  CHECK_THROWS_AS(classify({Int(1), Int(1)}), DegenerateRecurrenceError);
  try {
    classify({Int(0), Int(-1)});
    FAIL("expected DegenerateRecurrenceError");
  } catch (const DegenerateRecurrenceError& e) {
    CHECK(e.witness_order == 2);
  }
}

TEST_CASE("negative dominant root is sign-normalised") {
  // x^2 + x - 1: roots -1.618..., 0.618...; |u_n| matches (B, C) -> (1, -1)
  ClassificationReport rep = classify({Int(-1), Int(-1)}, 6);
  CHECK(rep.dimension == 1);
  CHECK(rep.notes.find("substitution") != std::string::npos);
  std::vector<Int> lucas = {Int(1), Int(3), Int(4), Int(7), Int(11), Int(18)};
  CHECK(rep.generators[0].prefix.terms == lucas);
}

TEST_CASE("nonneg_conjugate") {
  auto [e1, m1] = nonneg_conjugate({Int(1), Int(-1)});
  CHECK(format_matrix(m1) == "1,1;1,0");
  CHECK(determinant(e1) == 1);

  auto [e2, m2] = nonneg_conjugate({Int(4), Int(3)});
  CHECK(m2.at(1, 0) == 1);  // Delta/4
  CHECK(m2.at(1, 1) == 2);  // B/2
  CHECK(m2.trace() == 4);   // conjugation invariant

  CHECK_THROWS_AS(nonneg_conjugate({Int(-2), Int(-1)}), std::domain_error);
  CHECK_THROWS_AS(nonneg_conjugate({Int(1), Int(2)}), std::domain_error);
}

TEST_CASE("factor_count") {
  FactorCountResult r1 = factor_count(IntPolynomial::parse("x^3-x^2-x-1"));
  CHECK(r1.separable);
  CHECK(r1.factor_count == 1);

  FactorCountResult r2 = factor_count(IntPolynomial::parse("x^3-3x^2+x+2"));
  CHECK(r2.separable);
  CHECK(r2.factor_count == 2);
  CHECK(verify_factorisation(IntPolynomial::parse("x^3-3x^2+x+2"), r2.factors));

  FactorCountResult r3 = factor_count(IntPolynomial::parse("x^2-2x+1"));
  CHECK(!r3.separable);
  CHECK(r3.factor_count == 2);
}

TEST_CASE("factor_count recovers a degree-4 split") {
  // (x^2-x-1)(x^2-2) expanded
  IntPolynomial f = IntPolynomial::parse("x^4-x^3-3x^2+2x+2");
  FactorCountResult r = factor_count(f);
  CHECK(r.separable);
  CHECK(r.factor_count == 2);
  CHECK(verify_factorisation(f, r.factors));
}

TEST_CASE("factor products multiply back exactly") {
  for (const char* s : {"x^2-x-1", "x^4-1", "x^3-3x^2+x+2", "x^5-x", "x^6-1"}) {
    IntPolynomial f = IntPolynomial::parse(s);
    FactorCountResult r = factor_count(f);
    CHECK(verify_factorisation(f, r.factors));
  }
}

TEST_CASE("degree cap") {
  CHECK_THROWS_AS(factor_count(IntPolynomial::parse("x^9-2")), std::invalid_argument);
}

TEST_CASE("dominant_root verdicts") {
  DominantRootVerdict v1 = dominant_root(IntPolynomial::parse("x^3-x^2-x-1"));
  CHECK(v1.kind == DominantRootKind::yes);
  DominantRootVerdict v2 = dominant_root(IntPolynomial::parse("x^2-x+2"));
  CHECK(v2.kind == DominantRootKind::no);
  DominantRootVerdict v3 = dominant_root(IntPolynomial::parse("x^2-5x+6"));
  CHECK(v3.kind == DominantRootKind::yes);
  DominantRootVerdict v4 = dominant_root(IntPolynomial::parse("x^2-2"));
  CHECK(v4.kind == DominantRootKind::no);  // +-sqrt(2)
  DominantRootVerdict v5 = dominant_root(IntPolynomial::parse("x-7"));
  CHECK(v5.kind == DominantRootKind::yes);
  CHECK_THROWS_AS(dominant_root(IntPolynomial::parse("x^2-2x+1")), std::domain_error);
}

TEST_CASE("realisable_bound") {
  PolyAnalysis a1 = realisable_bound(IntPolynomial::parse("x^3-x^2-x-1"));
  CHECK(a1.bound_available);
  CHECK(a1.bound == 1);
  PolyAnalysis a2 = realisable_bound(IntPolynomial::parse("x^3-3x^2+x+2"));
  CHECK(a2.bound_available);
  CHECK(a2.bound == 2);
  PolyAnalysis a3 = realisable_bound(IntPolynomial::parse("x^2-x+2"));
  CHECK(!a3.bound_available);
  CHECK(a3.dominant.kind == DominantRootKind::no);
  PolyAnalysis a4 = realisable_bound(IntPolynomial::parse("x^2-2x+1"));
  CHECK(!a4.bound_available);
  CHECK(!a4.separable);
}

TEST_CASE("quadratic consistency: bound >= classify dimension") {
  for (long b = -6; b <= 6; ++b) {
    for (long c = -6; c <= 6; ++c) {
      if (c == 0) continue;
      BinaryRecurrence rec{Int(b), Int(c)};
      if (rec.discriminant() != 0 && is_degenerate(rec).degenerate) continue;
      ClassificationReport rep = classify(rec, 10);
      PolyAnalysis pa = realisable_bound(rec.characteristic());
      if (pa.bound_available) CHECK(pa.bound >= rep.dimension);
    }
  }
}
