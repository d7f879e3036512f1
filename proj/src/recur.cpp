#include "percount/recur.hpp"

#include "percount/polyops.hpp"
#include "percount/seqlab.hpp"

namespace percount::recur {

DegeneracyResult is_degenerate(const BinaryRecurrence& rec) {
  if (rec.c == 0)
    throw std::domain_error("is_degenerate: C = 0 (degenerate by convention)");
  if (rec.discriminant() == 0)
    throw std::domain_error("is_degenerate: discriminant is 0 (handled by classify)");
  // A ratio of quadratic-field elements can only be a root of unity of order
  // k with phi(k) <= 2, i.e. k in {1,2,3,4,6}; k = 1 is ruled out by Delta != 0.
  Int u_prev = 1;  // U_1
  Int u_cur = rec.b;  // U_2
  if (u_cur == 0) return {true, 2};
  for (unsigned long k = 3; k <= 6; ++k) {
    Int next = rec.b * u_cur - rec.c * u_prev;
    u_prev = std::move(u_cur);
    u_cur = std::move(next);
    if (u_cur == 0 && (k == 3 || k == 4 || k == 6)) return {true, k};
  }
  return {false, 0};
}

ClassificationReport classify(const BinaryRecurrence& rec, std::size_t prefix_len) {
  if (rec.c == 0)
    throw std::domain_error("classify: C = 0 (root alpha_2 = 0; not admissible)");
  Int delta = rec.discriminant();
  if (delta != 0) {
    DegeneracyResult deg = is_degenerate(rec);
    if (deg.degenerate)
      throw DegenerateRecurrenceError(
          "classify: degenerate recurrence (root ratio is a root of unity of order " +
              std::to_string(deg.witness_order) + ")",
          deg.witness_order);
  }

  ClassificationReport rep;
  rep.discriminant = delta;

  if (delta < 0) {
    rep.disc_case = DiscCase::neg_disc;
    rep.dimension = 0;
    rep.notes = "complex conjugate roots; no nonzero solution has realisable absolute values";
    return rep;
  }

  if (delta == 0) {
    rep.disc_case = DiscCase::zero_disc;
    rep.dimension = 1;
    Int half = abs(rec.b) / 2;  // B is even when Delta = 0
    rep.generators.push_back(
        {"|B/2|^n with B/2 = " + half.get_str(),
         seqlab::power_sequence(half, prefix_len)});
    rep.notes =
        "repeated root B/2; root ratio 1 is treated as admissible for this case";
    return rep;
  }

  if (mpz_perfect_square_p(delta.get_mpz_t())) {
    rep.disc_case = DiscCase::pos_square_disc;
    rep.dimension = 2;
    Int s;
    mpz_sqrt(s.get_mpz_t(), delta.get_mpz_t());
    Int r1 = (rec.b + s) / 2;
    Int r2 = (rec.b - s) / 2;
    rep.generators.push_back(
        {"|r1|^n with r1 = " + r1.get_str(), seqlab::power_sequence(abs(r1), prefix_len)});
    rep.generators.push_back(
        {"|r2|^n with r2 = " + r2.get_str(), seqlab::power_sequence(abs(r2), prefix_len)});
    rep.notes = "integer roots " + r1.get_str() + " and " + r2.get_str();
    return rep;
  }

  rep.disc_case = DiscCase::pos_nonsquare_disc;
  rep.dimension = 1;
  BinaryRecurrence normalised = rec;
  if (rec.b < 0) {
    // Make the dominant root positive; |u_n| agrees with the sequence
    // obtained from (-B, C).
    normalised.b = -rec.b;
    rep.notes = "dominant root negative; classified via the substitution (B, C) -> (-B, C)";
  }
  IntMatrix a = companion_matrix(normalised.characteristic());
  rep.generators.push_back(
      {"trace(A_f^n) for f = " + normalised.characteristic().to_string(),
       seqlab::trace_sequence(a, prefix_len)});
  return rep;
}

std::pair<IntMatrix, IntMatrix> nonneg_conjugate(const BinaryRecurrence& rec) {
  Int delta = rec.discriminant();
  if (delta < 1)
    throw std::domain_error("nonneg_conjugate: requires discriminant >= 1");
  if (rec.b < 1) throw std::domain_error("nonneg_conjugate: requires B >= 1");
  Int k = (rec.b % 2 == 0) ? Int(rec.b / 2) : Int((rec.b + 1) / 2);
  IntMatrix e(2);
  e.at(0, 0) = 1;
  e.at(1, 0) = k;
  e.at(1, 1) = 1;
  IntMatrix m(2);
  m.at(0, 0) = k;
  m.at(0, 1) = 1;
  m.at(1, 0) = rec.b * k - k * k - rec.c;
  m.at(1, 1) = rec.b - k;
  for (const Int& entry : m.data) {
    if (entry < 0)
      throw std::logic_error("nonneg_conjugate: conjugated matrix has a negative entry");
  }
  return {e, m};
}

bool verify_factorisation(const IntPolynomial& f, const std::vector<IntPolynomial>& factors) {
  polyops::Poly prod = {Int(1)};
  for (const IntPolynomial& g : factors) prod = polyops::multiply(prod, g.coeffs);
  return prod == f.coeffs;
}

PolyAnalysis realisable_bound(const IntPolynomial& f) {
  PolyAnalysis out;
  FactorCountResult fc = factor_count(f);
  out.separable = fc.separable;
  out.factor_count = fc.factor_count;
  if (!fc.separable) {
    out.reason = "f is not separable (gcd(f, f') is non-constant)";
    return out;
  }
  out.dominant = dominant_root(f);
  switch (out.dominant.kind) {
    case DominantRootKind::yes:
      out.bound_available = true;
      out.bound = fc.factor_count;
      break;
    case DominantRootKind::no:
      out.reason = "no dominant root: " + out.dominant.detail;
      break;
    case DominantRootKind::inconclusive:
      out.reason = "dominant-root certification inconclusive: " + out.dominant.detail;
      break;
  }
  return out;
}

}  // namespace percount::recur
