#include "percount/acceptance.hpp"

#include <random>
#include <sstream>

#include "percount/bern.hpp"
#include "percount/realis.hpp"
#include "percount/recur.hpp"
#include "percount/seqlab.hpp"

namespace percount::acceptance {

namespace {

using realis::check_realisable;
using realis::RealisabilityVerdict;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& msg) {
    if (!cond) {
      if (!ok) why << "; ";
      ok = false;
      why << msg;
    }
  }
};

Sequence lucas(std::size_t n) {
  return seqlab::linear_recurrence({Int(1), Int(1)}, {Int(1), Int(3)}, n);
}

Sequence tribonacci_trace(std::size_t n) {
  return seqlab::trace_sequence(companion_matrix(IntPolynomial::parse("x^3-x^2-x-1")), n);
}

CriterionResult criterion1() {
  Check c;
  Sequence fib = seqlab::linear_recurrence({Int(1), Int(1)}, {Int(1), Int(1)}, 50);
  RealisabilityVerdict v = check_realisable(fib);
  c.expect(!v.realisable_up_to_n, "Fibonacci passed unexpectedly");
  c.expect(!v.failures.empty() && v.failures.front().n == 3,
           "first failure not at n = 3");
  if (!v.failures.empty()) {
    c.expect(v.failures.front().kind == realis::FailureKind::not_divisible,
             "failure kind is not not_divisible");
    c.expect(v.failures.front().star_value == 1, "u*_3 != 1");
  }
  return {1, "Fibonacci non-realisability (first failure n=3, u*_3=1)", c.ok, c.why.str()};
}

CriterionResult criterion2() {
  Check c;
  struct Named {
    const char* name;
    Sequence seq;
  };
  std::vector<Named> seqs;
  seqs.push_back({"mersenne", seqlab::mersenne(100)});
  seqs.push_back({"lucas", lucas(100)});
  seqs.push_back({"jacobsthal_lucas", seqlab::jacobsthal_lucas(100)});
  seqs.push_back({"s_plus", seqlab::s_plus(100)});
  seqs.push_back({"tribonacci_trace", tribonacci_trace(100)});
  for (const Named& s : seqs) {
    c.expect(check_realisable(s.seq).realisable_up_to_n,
             std::string(s.name) + " failed the realisability test");
  }
  const Sequence& trib = seqs.back().seq;
  std::vector<long> expected = {1, 3, 7, 11, 21};
  for (std::size_t i = 0; i < expected.size(); ++i)
    c.expect(trib.at(i + 1) == expected[i], "tribonacci-trace prefix mismatch");
  return {2, "named sequences realisable to N=100; trace prefix 1,3,7,11,21", c.ok, c.why.str()};
}

CriterionResult criterion3() {
  Check c;
  Sequence lp = seqlab::lehmer_pierce(IntPolynomial::parse("x-2"), 100);
  Sequence m = seqlab::mersenne(100);
  c.expect(lp.terms == m.terms, "lehmer_pierce(x-2) != mersenne");
  std::vector<std::string> polys = {"x-2", "x^2-x-1", "x^3-x-1", "x^3-x^2-x-1", "x^4-x-1"};
  for (const std::string& ps : polys) {
    Sequence d = seqlab::lehmer_pierce(IntPolynomial::parse(ps), 100);
    c.expect(check_realisable(d).realisable_up_to_n, ps + ": global realisability failed");
    realis::EverywhereLocalReport rep = realis::check_everywhere_local(d, 50);
    c.expect(rep.all_primes_pass, ps + ": local realisability failed at some p <= 50");
    c.expect(rep.reconstruction_ok, ps + ": p-part reconstruction failed");
  }
  return {3, "Lehmer-Pierce: x-2 = Mersenne; 5 polynomials global+local realisable", c.ok,
          c.why.str()};
}

CriterionResult criterion4() {
  Check c;
  int classified = 0;
  for (long b = -10; b <= 10; ++b) {
    for (long cc = -10; cc <= 10; ++cc) {
      if (cc == 0) continue;
      recur::BinaryRecurrence rec{Int(b), Int(cc)};
      Int delta = rec.discriminant();
      if (delta != 0 && recur::is_degenerate(rec).degenerate) continue;
      recur::ClassificationReport rep = recur::classify(rec, 50);
      ++classified;
      int expected_dim;
      if (delta < 0)
        expected_dim = 0;
      else if (delta > 0 && mpz_perfect_square_p(delta.get_mpz_t()))
        expected_dim = 2;
      else
        expected_dim = 1;
      c.expect(rep.dimension == expected_dim,
               "dimension mismatch at B=" + std::to_string(b) + ", C=" + std::to_string(cc));
      for (const recur::GeneratorSeq& g : rep.generators) {
        c.expect(check_realisable(g.prefix).realisable_up_to_n,
                 "generator fails realisability at B=" + std::to_string(b) +
                     ", C=" + std::to_string(cc));
      }
      if (delta >= 1 && b >= 1) {
        auto [e, m] = recur::nonneg_conjugate(rec);
        for (const Int& entry : m.data)
          c.expect(entry >= 0, "negative entry in conjugated matrix at B=" +
                                   std::to_string(b) + ", C=" + std::to_string(cc));
        IntMatrix af = companion_matrix(rec.characteristic());
        Sequence tm = seqlab::trace_sequence(m, 20);
        Sequence ta = seqlab::trace_sequence(af, 20);
        c.expect(tm.terms == ta.terms,
                 "trace sequence not preserved at B=" + std::to_string(b) +
                     ", C=" + std::to_string(cc));
        c.expect(determinant(e) == 1, "det(E) != 1");
      }
    }
  }
  c.expect(classified > 0, "grid produced no classifiable pairs");
  return {4, "binary recurrence grid |B|,|C| <= 10: dimensions, generators, conjugation", c.ok,
          c.why.str()};
}

CriterionResult criterion5() {
  Check c;
  recur::PolyAnalysis a1 = recur::realisable_bound(IntPolynomial::parse("x^3-x^2-x-1"));
  c.expect(a1.bound_available && a1.bound == 1, "x^3-x^2-x-1: expected bound 1");
  recur::PolyAnalysis a2 = recur::realisable_bound(IntPolynomial::parse("x^3-3x^2+x+2"));
  c.expect(a2.bound_available && a2.bound == 2, "x^3-3x^2+x+2: expected bound 2");
  recur::PolyAnalysis a3 = recur::realisable_bound(IntPolynomial::parse("x^2-x+2"));
  c.expect(!a3.bound_available, "x^2-x+2: bound should be unavailable");
  c.expect(a3.dominant.kind == recur::DominantRootKind::no,
           "x^2-x+2: expected certified 'no dominant root'");
  return {5, "realisable-dimension bounds: 1, 2, unavailable", c.ok, c.why.str()};
}

CriterionResult criterion6() {
  Check c;
  std::mt19937_64 rng(20260823);
  std::uniform_int_distribution<int> dim_dist(1, 4);
  std::uniform_int_distribution<int> entry_dist(-9, 9);
  for (int t = 0; t < 200; ++t) {
    std::size_t d = static_cast<std::size_t>(dim_dist(rng));
    IntMatrix a(d);
    for (Int& e : a.data) e = entry_dist(rng);
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
      for (unsigned long r = 1; r <= 2; ++r) {
        seqlab::EulerFermatWitness w = seqlab::verify_matrix_euler_fermat(a, p, r);
        c.expect(w.holds, "matrix Euler-Fermat violated (would falsify the congruence)");
        if (!c.ok) return {6, "matrix congruences (200 random matrices)", false, c.why.str()};
      }
    }
    seqlab::StarDivisibilityReport rep = seqlab::verify_star_divisibility(a, 30);
    c.expect(rep.all_divisible, "n | u*_n violated for a trace sequence");
    if (!c.ok) return {6, "matrix congruences (200 random matrices)", false, c.why.str()};
  }
  return {6, "matrix congruences: Euler-Fermat p^r <= 169 and n | u*_n, 200 matrices", c.ok,
          c.why.str()};
}

CriterionResult criterion7() {
  Check c;
  long total = 0;
  for (std::size_t dim = 1; dim <= 3; ++dim) {
    std::size_t cells = dim * dim;
    std::vector<int> entries(cells, 0);
    while (true) {
      IntMatrix a(dim);
      for (std::size_t i = 0; i < cells; ++i) a.data[i] = entries[i];
      Sequence traces = seqlab::trace_sequence(a, 8);
      for (std::size_t n = 1; n <= 8; ++n) {
        if (seqlab::edge_shift_count(a, n) != traces.at(n)) {
          c.expect(false, "oracle mismatch at dim=" + std::to_string(dim) +
                              ", n=" + std::to_string(n));
          return {7, "edge-shift oracle equals trace(A^n)", false, c.why.str()};
        }
      }
      ++total;
      std::size_t pos = 0;
      while (pos < cells) {
        if (++entries[pos] <= 2) break;
        entries[pos] = 0;
        ++pos;
      }
      if (pos == cells) break;
    }
  }
  c.expect(total == 3 + 81 + 19683, "unexpected enumeration count");
  return {7, "edge-shift oracle = trace(A^n) for all A (dim<=3, entries<=2, n<=8)", c.ok,
          c.why.str()};
}

CriterionResult criterion8() {
  Check c;
  bern::BernoulliTable table = bern::bernoulli_table(60);
  for (std::size_t n = 1; n <= 60; ++n) {
    c.expect(table.at(2 * n).get_den() == bern::vsc_denominator(n),
             "von Staudt-Clausen mismatch at n=" + std::to_string(n));
  }
  auto check_list = [&c](const Sequence& s, const std::vector<long>& expected,
                         const std::string& name) {
    for (std::size_t i = 0; i < expected.size(); ++i)
      c.expect(s.at(i + 1) == expected[i], name + " mismatch at n=" + std::to_string(i + 1));
  };
  check_list(bern::denom_b2n_over_2n(table, 6), {12, 120, 252, 240, 132, 32760},
             "denom(B_2n/2n)");
  check_list(bern::num_b2n_over_2n(table, 9), {1, 1, 1, 1, 1, 691, 1, 3617, 43867},
             "num(B_2n/2n)");
  check_list(bern::denom_b2n_over_4n(table, 8), {24, 240, 504, 480, 264, 65520, 24, 16320},
             "denom(B_2n/4n)");
  return {8, "Bernoulli: von Staudt-Clausen to n=60; three published lists exact", c.ok,
          c.why.str()};
}

CriterionResult criterion9() {
  Check c;
  bern::Theorem3Report rep = bern::check_theorem3_local(60, 101);
  c.expect(rep.global_pass, "b_n failed global realisability");
  c.expect(rep.all_local_pass, "b_n failed local realisability at some p <= 101");
  c.expect(rep.local_values_match, "[b_n]_p != local_per_count(p, n) somewhere");
  return {9, "Bernoulli denominators b_n globally and locally realisable (p <= 101, N=60)", c.ok,
          c.why.str()};
}

CriterionResult criterion10() {
  Check c;
  std::vector<bern::ConjectureProbe> probes = bern::probe_conjectures(60, 101);
  const bern::ConjectureProbe* num = nullptr;
  const bern::ConjectureProbe* denom4 = nullptr;
  for (const bern::ConjectureProbe& probe : probes) {
    if (probe.sequence_name == "num_b2n_over_2n") num = &probe;
    if (probe.sequence_name == "denom_b2n_over_4n") denom4 = &probe;
  }
  c.expect(num != nullptr && denom4 != nullptr, "probe reports missing");
  if (num) {
    c.expect(num->global_pass, "numerators of B_2n/2n failed globally");
    auto it = num->locals.find(37);
    c.expect(it != num->locals.end() && !it->second.pass,
             "numerators should fail locally at p=37");
    if (it != num->locals.end())
      c.expect(it->second.first_failure_n == 16, "p=37 first local failure not at n=16");
  }
  if (denom4) {
    bool any_small_failure = false;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
      auto it = denom4->locals.find(p);
      if (it != denom4->locals.end() && !it->second.pass) any_small_failure = true;
    }
    // Recorded expectation: local failures at p <= 13. Exact recomputation
    // contradicts it: denom(B_2n/4n) = 2 * denom(B_2n/2n) termwise (the
    // numerator of B_2n/2n is odd), so its odd-prime local sequences equal
    // those of the everywhere-locally-realisable denom(B_2n/2n), and its
    // 2-part is 2^(3+v2(n)), realisable for every n. Reported honestly.
    c.expect(any_small_failure,
             "expected local failures of denom(B_2n/4n) at p in {2,3,5,7,11,13}; "
             "exact recomputation finds none (it is 2*denom(B_2n/2n) termwise, "
             "so all local tests pass to N=60 for every p <= 101)");
    for (const auto& [p, res] : denom4->locals) {
      if (p >= 17)
        c.expect(res.pass, "denom(B_2n/4n) should pass locally at p=" + std::to_string(p));
    }
  }
  return {10, "Bernoulli quotient probes: numerator and B_2n/4n local behaviour", c.ok, c.why.str()};
}

CriterionResult criterion11() {
  Check c;
  bern::BernoulliTable table = bern::bernoulli_table(60);
  long tested = 0;
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL}) {
    for (unsigned long r = 0; r <= 2; ++r) {
      unsigned long modulus = p - 1;
      for (unsigned long i = 0; i < r; ++i) modulus *= p;
      for (std::size_t n = 2; n <= 120; n += 2) {
        if (n % (p - 1) == 0) continue;
        for (std::size_t np = n + modulus; np <= 120; np += modulus) {
          if (np % 2 != 0) continue;
          bern::KummerInstance inst = bern::kummer_check(table, p, r, n, np);
          ++tested;
          if (!inst.pass) {
            c.expect(false, "Kummer congruence failed at p=" + std::to_string(p) +
                                ", r=" + std::to_string(r) + ", n=" + std::to_string(n) +
                                ", n'=" + std::to_string(np));
            return {11, "Kummer congruences", false, c.why.str()};
          }
        }
      }
    }
  }
  c.expect(tested > 0, "no Kummer tuples tested");
  bern::KummerInstance worked = bern::kummer_check(table, 5, 0, 2, 6);
  c.expect(!worked.difference_zero && worked.valuation == 1,
           "worked instance (p=5,r=0,n=2,n'=6) valuation != 1");
  return {11, "Kummer: all tuples p<=13, r<=2, n<n'<=120; worked instance valuation 1", c.ok,
          c.why.str()};
}

CriterionResult criterion12() {
  Check c;
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> len_dist(1, 60);
  std::uniform_int_distribution<long> val_dist(-1000000, 1000000);
  for (int t = 0; t < 1000; ++t) {
    std::size_t len = static_cast<std::size_t>(len_dist(rng));
    std::vector<Int> terms;
    terms.reserve(len);
    for (std::size_t i = 0; i < len; ++i) terms.emplace_back(val_dist(rng));
    Sequence u(std::move(terms));
    Sequence back = realis::inverse_transform(realis::mobius_transform(u));
    if (back.terms != u.terms) {
      c.expect(false, "Mobius round trip failed");
      break;
    }
  }
  std::vector<Sequence> suite = {seqlab::mersenne(100), lucas(100),
                                 seqlab::jacobsthal_lucas(100), seqlab::s_plus(100),
                                 tribonacci_trace(100)};
  for (const Sequence& u : suite) {
    for (const Sequence& v : suite) {
      c.expect(check_realisable(realis::sum_sequences(u, v)).realisable_up_to_n,
               "closure under sum failed");
      c.expect(check_realisable(realis::product_sequences(u, v)).realisable_up_to_n,
               "closure under product failed");
    }
  }
  for (const Sequence& u : suite) {
    realis::OrbitCertificate cert = realis::orbit_certificate(u);
    c.expect(realis::verify_certificate(cert, u), "certificate round trip failed");
  }
  return {12, "properties: Mobius round trip x1000, closure, certificate round trip", c.ok,
          c.why.str()};
}

}  // namespace

std::vector<CriterionResult> run_all() {
  return {criterion1(), criterion2(), criterion3(), criterion4(),
          criterion5(), criterion6(), criterion7(), criterion8(),
          criterion9(), criterion10(), criterion11(), criterion12()};
}

}  // namespace percount::acceptance
