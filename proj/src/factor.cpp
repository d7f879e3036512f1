#include <algorithm>
#include <map>

#include "percount/polyops.hpp"
#include "percount/recur.hpp"

namespace percount::recur {

namespace {

using polyops::Poly;

// Full factorisation of |v| (v != 0): trial division, then Pollard rho with
// Miller-Rabin on the cofactors. Values come from evaluating small-coefficient
// polynomials at small points, so this stays cheap.
void factor_integer(Int v, std::map<Int, unsigned>& out) {
  v = abs(v);
  for (unsigned long d : {2UL, 3UL, 5UL}) {
    while (divisible(v, d)) {
      out[Int(d)]++;
      v /= d;
    }
  }
  unsigned long d = 7;
  const unsigned long trial_bound = 100000;
  while (d <= trial_bound && Int(d) * Int(d) <= v) {
    while (divisible(v, d)) {
      out[Int(d)]++;
      v /= d;
    }
    d += 2;
  }
  if (v == 1) return;
  std::vector<Int> stack = {v};
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xC0FFEEUL);
  while (!stack.empty()) {
    Int m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (mpz_probab_prime_p(m.get_mpz_t(), 40) != 0) {
      out[m]++;
      continue;
    }
    // Pollard rho (Brent variant would be faster; plain rho suffices here).
    Int factor = 0;
    while (factor == 0 || factor == m) {
      Int x = rng.get_z_range(m - 2) + 2;
      Int y = x;
      Int c = rng.get_z_range(m - 1) + 1;
      Int g = 1;
      while (g == 1) {
        x = (x * x + c) % m;
        y = (y * y + c) % m;
        y = (y * y + c) % m;
        Int diff = abs(x - y);
        if (diff == 0) break;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
      }
      if (g != 1 && g != m) factor = g;
    }
    stack.push_back(factor);
    stack.push_back(m / factor);
  }
}

std::vector<Int> all_divisors(const Int& v) {
  std::map<Int, unsigned> fac;
  factor_integer(v, fac);
  std::vector<Int> divs = {Int(1)};
  for (const auto& [p, e] : fac) {
    std::size_t base = divs.size();
    Int pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Lagrange interpolation through (points[i], values[i]); returns false when
// the result is not an integer polynomial.
bool interpolate_integer(const std::vector<Int>& points, const std::vector<Int>& values,
                         Poly& out) {
  std::size_t m = points.size();
  std::vector<Rat> coeffs(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
    std::vector<Rat> basis = {Rat(1)};
    Rat denom(1);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      basis.push_back(Rat(0));
      for (std::size_t k = basis.size() - 1; k > 0; --k) {
        basis[k] = basis[k - 1] - Rat(points[j]) * basis[k];
      }
      basis[0] = -Rat(points[j]) * basis[0];
      denom *= Rat(points[i] - points[j]);
    }
    Rat scale = Rat(values[i]) / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * scale;
  }
  out.clear();
  for (const Rat& c : coeffs) {
    Rat r = c;
    r.canonicalize();
    if (r.get_den() != 1) return false;
    out.push_back(r.get_num());
  }
  polyops::trim(out);
  return true;
}

// Search for a factor of exact degree m via Kronecker interpolation.
// f must be monic with no integer roots. Returns true and the factor (monic)
// on success.
bool kronecker_find_factor(const Poly& f, std::size_t m, Poly& factor) {
  // evaluation points 0, 1, -1, 2, -2, ...
  std::vector<Int> points;
  for (long t = 0; points.size() < m + 1; ++t) {
    if (t == 0) {
      points.push_back(Int(0));
    } else {
      points.push_back(Int(t));
      if (points.size() < m + 1) points.push_back(Int(-t));
    }
  }
  std::vector<std::vector<Int>> candidates(m + 1);
  unsigned long long combos = 1;
  const unsigned long long budget = 4000000ULL;
  for (std::size_t i = 0; i <= m; ++i) {
    Int v = polyops::eval(f, points[i]);
    if (v == 0)
      throw std::logic_error("kronecker: unexpected integer root at evaluation point");
    std::vector<Int> divs = all_divisors(v);
    for (const Int& d : divs) candidates[i].push_back(-d);
    candidates[i].insert(candidates[i].end(), divs.begin(), divs.end());
    combos *= candidates[i].size();
    if (combos > budget)
      throw std::invalid_argument(
          "factor_count: Kronecker search space too large; supply a factorisation manually");
  }
  // g and -g divide together; fixing the sign of the value at the last point
  // halves the search.
  candidates[m].erase(candidates[m].begin(),
                      candidates[m].begin() + static_cast<long>(candidates[m].size() / 2));

  std::vector<std::size_t> idx(m + 1, 0);
  std::vector<Int> values(m + 1);
  while (true) {
    for (std::size_t i = 0; i <= m; ++i) values[i] = candidates[i][idx[i]];
    Poly g;
    if (interpolate_integer(points, values, g) &&
        polyops::degree(g) == static_cast<long>(m)) {
      Int lead = g.back();
      if (lead == 1 || lead == -1) {
        if (lead == -1)
          for (Int& c : g) c = -c;
        bool exact = false;
        Poly q = polyops::divide_unit_leading(f, g, exact);
        if (exact) {
          factor = g;
          return true;
        }
        (void)q;
      }
    }
    // odometer
    std::size_t pos = 0;
    while (pos <= m) {
      if (++idx[pos] < candidates[pos].size()) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos > m) return false;
  }
}

void factor_monic_rec(Poly f, std::vector<Poly>& out) {
  long d = polyops::degree(f);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(f);
    return;
  }
  for (long m = 2; m <= d / 2; ++m) {
    Poly g;
    if (kronecker_find_factor(f, static_cast<std::size_t>(m), g)) {
      // No factor of smaller degree exists, so g is irreducible.
      out.push_back(g);
      bool exact = false;
      Poly q = polyops::divide_unit_leading(f, g, exact);
      if (!exact) throw std::logic_error("kronecker: inexact division by found factor");
      factor_monic_rec(std::move(q), out);
      return;
    }
  }
  out.push_back(f);  // irreducible
}

}  // namespace

FactorCountResult factor_count(const IntPolynomial& f) {
  if (f.degree() > 8)
    throw std::invalid_argument(
        "factor_count: degree > 8; supply a factorisation manually and use "
        "verify_factorisation");
  FactorCountResult res;
  Poly fp = f.coeffs;
  Poly g = polyops::gcd(fp, polyops::derivative(fp));
  res.separable = polyops::degree(g) == 0;

  std::vector<Poly> factors;
  Poly work = fp;
  // Integer roots first (rational roots of a monic polynomial are integers
  // dividing the constant term).
  while (polyops::degree(work) >= 1) {
    if (work[0] == 0) {
      factors.push_back({Int(0), Int(1)});  // x
      work.erase(work.begin());
      continue;
    }
    bool found = false;
    for (const Int& d : all_divisors(work[0])) {
      for (int s : {1, -1}) {
        Int r = s == 1 ? d : Int(-d);
        if (polyops::eval(work, r) == 0) {
          Poly lin = {-r, Int(1)};
          bool exact = false;
          work = polyops::divide_unit_leading(work, lin, exact);
          factors.push_back(lin);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
  }
  factor_monic_rec(std::move(work), factors);

  res.factor_count = static_cast<int>(factors.size());
  for (Poly& p : factors) res.factors.emplace_back(std::move(p));
  std::sort(res.factors.begin(), res.factors.end(),
            [](const IntPolynomial& a, const IntPolynomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return a.coeffs < b.coeffs;
            });
  return res;
}

}  // namespace percount::recur
