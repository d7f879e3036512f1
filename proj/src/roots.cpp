#include <algorithm>
#include <cmath>
#include <numeric>

#include "percount/polyops.hpp"
#include "percount/recur.hpp"

// Dominant-root certification. This is the only non-integer arithmetic in the
// project: Aberth-Ehrlich approximation over GMP floats with precision
// doubling, certified via Weierstrass inclusion discs. A wrong answer is never
// silent; failure to certify is reported as inconclusive.

namespace percount::recur {

namespace {

using polyops::Poly;

struct Cx {
  mpf_class re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cx operator/(const Cx& a, const Cx& b) {
  mpf_class n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

mpf_class cx_abs(const Cx& a) { return sqrt(mpf_class(a.re * a.re + a.im * a.im)); }

Cx eval_cx(const std::vector<Cx>& coeffs, const Cx& z) {
  Cx r = {mpf_class(0), mpf_class(0)};
  for (std::size_t i = coeffs.size(); i-- > 0;) r = r * z + coeffs[i];
  return r;
}

struct ApproxRoot {
  Cx z;
  mpf_class radius;  // Weierstrass inclusion radius (inflated)
};

// Aberth-Ehrlich at the current default mpf precision. p must have leading
// coefficient +-1 and simple roots.
std::vector<ApproxRoot> approximate_roots(const Poly& p, unsigned long prec) {
  long d = polyops::degree(p);
  std::vector<Cx> c(static_cast<std::size_t>(d) + 1);
  for (long i = 0; i <= d; ++i)
    c[static_cast<std::size_t>(i)] = {mpf_class(p[static_cast<std::size_t>(i)]), mpf_class(0)};
  if (p.back() == -1)
    for (Cx& ci : c) ci = {mpf_class(-ci.re), mpf_class(0)};
  std::vector<Cx> dc(static_cast<std::size_t>(d));
  for (long i = 1; i <= d; ++i)
    dc[static_cast<std::size_t>(i - 1)] = {mpf_class(c[static_cast<std::size_t>(i)].re * i),
                                           mpf_class(0)};

  // Cauchy bound on root moduli
  mpf_class bound = 0;
  for (long i = 0; i < d; ++i) {
    mpf_class m = abs(c[static_cast<std::size_t>(i)].re);
    if (m > bound) bound = m;
  }
  bound += 1;

  std::vector<Cx> z(static_cast<std::size_t>(d));
  for (long k = 0; k < d; ++k) {
    double theta = 2.0 * 3.14159265358979323846 * (static_cast<double>(k) + 0.25) /
                       static_cast<double>(d) +
                   0.6180339887;
    z[static_cast<std::size_t>(k)] = {mpf_class(bound * 0.7 * std::cos(theta)),
                                      mpf_class(bound * 0.7 * std::sin(theta))};
  }

  mpf_class stop_eps(1);
  mpf_div_2exp(stop_eps.get_mpf_t(), stop_eps.get_mpf_t(), prec > 24 ? prec - 16 : 8);

  for (int iter = 0; iter < 600; ++iter) {
    mpf_class worst = 0;
    for (long i = 0; i < d; ++i) {
      Cx& zi = z[static_cast<std::size_t>(i)];
      Cx fv = eval_cx(c, zi);
      Cx dv = eval_cx(dc, zi);
      if (dv.re == 0 && dv.im == 0) {
        zi.re += mpf_class(0.5);  // nudge off a critical point
        continue;
      }
      Cx w = fv / dv;
      Cx s = {mpf_class(0), mpf_class(0)};
      for (long j = 0; j < d; ++j) {
        if (j == i) continue;
        Cx diff = zi - z[static_cast<std::size_t>(j)];
        if (diff.re == 0 && diff.im == 0) {
          diff.re = mpf_class(1e-20);
        }
        s = s + Cx{mpf_class(1), mpf_class(0)} / diff;
      }
      Cx denom = Cx{mpf_class(1), mpf_class(0)} - w * s;
      Cx corr = (denom.re == 0 && denom.im == 0) ? w : w / denom;
      zi = zi - corr;
      mpf_class rel = cx_abs(corr) / (1 + cx_abs(zi));
      if (rel > worst) worst = rel;
    }
    if (worst < stop_eps) break;
  }

  // Weierstrass inclusion discs: every root lies in the union of
  // D(z_i, d |f(z_i) / prod_{j != i}(z_i - z_j)|); when the discs are
  // pairwise disjoint each contains exactly one root.
  std::vector<ApproxRoot> out;
  mpf_class margin(1);
  mpf_div_2exp(margin.get_mpf_t(), margin.get_mpf_t(), prec / 2);
  for (long i = 0; i < d; ++i) {
    Cx fv = eval_cx(c, z[static_cast<std::size_t>(i)]);
    Cx prod = {mpf_class(1), mpf_class(0)};
    for (long j = 0; j < d; ++j) {
      if (j == i) continue;
      prod = prod * (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
    }
    mpf_class pa = cx_abs(prod);
    mpf_class r;
    if (pa == 0) {
      r = bound;  // useless disc; forces escalation
    } else {
      r = mpf_class(d) * cx_abs(fv) / pa;
    }
    // inflate to absorb mpf rounding (mpf has no directed rounding)
    r = r * 4 + margin * (1 + cx_abs(z[static_cast<std::size_t>(i)]));
    out.push_back({z[static_cast<std::size_t>(i)], r});
  }
  return out;
}

std::string mpf_to_string(const mpf_class& x) {
  mp_exp_t e;
  std::string digits = x.get_str(e, 10, 20);
  if (digits.empty()) return "0";
  bool neg = digits[0] == '-';
  std::string body = neg ? digits.substr(1) : digits;
  std::string s = (neg ? "-0." : "0.") + body + "e" + std::to_string(e);
  return s;
}

}  // namespace

DominantRootVerdict dominant_root(const IntPolynomial& f) {
  DominantRootVerdict verdict;
  {
    Poly fp = f.coeffs;
    Poly g = polyops::gcd(fp, polyops::derivative(fp));
    if (polyops::degree(g) != 0)
      throw std::domain_error("dominant_root: f must be separable");
  }
  std::size_t d = f.degree();
  if (d == 1) {
    verdict.kind = DominantRootKind::yes;
    verdict.modulus_gap = "inf";
    verdict.detail = "degree 1: single root";
    return verdict;
  }

  // Exact +-pair content: roots alpha with -alpha also a root are exactly the
  // roots of gcd(f(x), (-1)^d f(-x)).
  Poly fneg = polyops::negate_argument(f.coeffs);
  Poly h = polyops::gcd(f.coeffs, fneg);
  bool has_pm_pairs = polyops::degree(h) >= 1;

  const unsigned long ladder[] = {128, 256, 512, 860};  // ~256 decimal digits cap
  for (unsigned long prec : ladder) {
    mpf_set_default_prec(prec);
    std::vector<ApproxRoot> roots = approximate_roots(f.coeffs, prec);

    std::vector<std::size_t> order(roots.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<mpf_class> mod(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) mod[i] = cx_abs(roots[i].z);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return mod[a] > mod[b]; });
    std::size_t top = order[0];
    mpf_class top_lo = mod[top] - roots[top].radius;

    // yes: top disc's modulus interval clears everyone else's
    bool clears_all = true;
    mpf_class best_other_hi = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (i == top) continue;
      mpf_class hi = mod[i] + roots[i].radius;
      if (hi > best_other_hi) best_other_hi = hi;
      if (top_lo <= hi) clears_all = false;
    }
    if (clears_all) {
      verdict.kind = DominantRootKind::yes;
      verdict.precision_bits = prec;
      verdict.modulus_gap = mpf_to_string(mpf_class(top_lo - best_other_hi));
      verdict.detail = "unique root of strictly maximal modulus";
      return verdict;
    }

    // no (conjugate pair): top root certified non-real; its conjugate shares
    // the modulus exactly, and the pair clears everyone else
    if (abs(roots[top].z.im) > roots[top].radius) {
      std::size_t conj_idx = roots.size();
      mpf_class best;
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (j == top) continue;
        Cx diff = {roots[j].z.re - roots[top].z.re, roots[j].z.im + roots[top].z.im};
        mpf_class dist = cx_abs(diff);
        if (conj_idx == roots.size() || dist < best) {
          best = dist;
          conj_idx = j;
        }
      }
      bool pair_clears = conj_idx != roots.size();
      for (std::size_t l = 0; pair_clears && l < roots.size(); ++l) {
        if (l == top || l == conj_idx) continue;
        if (top_lo <= mod[l] + roots[l].radius) pair_clears = false;
      }
      if (pair_clears) {
        verdict.kind = DominantRootKind::no;
        verdict.precision_bits = prec;
        verdict.detail = "maximal modulus shared by a complex conjugate pair";
        return verdict;
      }
    }

    // no (+-alpha pair): the top root is a root of h, so -root is also a
    // root of f with the same modulus
    if (has_pm_pairs) {
      bool discs_disjoint = true;
      for (std::size_t i = 0; discs_disjoint && i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
          Cx diff = roots[i].z - roots[j].z;
          if (cx_abs(diff) <= roots[i].radius + roots[j].radius) {
            discs_disjoint = false;
            break;
          }
        }
      if (discs_disjoint) {
        std::vector<ApproxRoot> hroots = approximate_roots(h, prec);
        bool top_is_paired = false;
        for (const ApproxRoot& hr : hroots) {
          // The true h-root lies in hr's disc and in exactly one f-disc;
          // if hr's disc meets only the top f-disc, the top root is paired.
          std::size_t met = 0;
          bool met_top = false;
          for (std::size_t i = 0; i < roots.size(); ++i) {
            Cx diff = hr.z - roots[i].z;
            if (cx_abs(diff) <= hr.radius + roots[i].radius) {
              ++met;
              if (i == top) met_top = true;
            }
          }
          if (met == 1 && met_top) {
            top_is_paired = true;
            break;
          }
        }
        if (top_is_paired) {
          std::size_t partner = roots.size();
          mpf_class best;
          for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == top) continue;
            Cx sum = roots[j].z + roots[top].z;
            mpf_class dist = cx_abs(sum);
            if (partner == roots.size() || dist < best) {
              best = dist;
              partner = j;
            }
          }
          bool pair_clears = partner != roots.size();
          for (std::size_t l = 0; pair_clears && l < roots.size(); ++l) {
            if (l == top || l == partner) continue;
            if (top_lo <= mod[l] + roots[l].radius) pair_clears = false;
          }
          if (pair_clears) {
            verdict.kind = DominantRootKind::no;
            verdict.precision_bits = prec;
            verdict.detail = "maximal modulus shared by a +-alpha pair of roots";
            return verdict;
          }
        }
      }
    }
  }

  verdict.kind = DominantRootKind::inconclusive;
  verdict.precision_bits = 860;
  verdict.detail = "precision ceiling reached without certifying a verdict";
  return verdict;
}

}  // namespace percount::recur
