#include "percount/polyops.hpp"

#include <stdexcept>

namespace percount::polyops {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

bool is_zero(const Poly& p) {
  for (const Int& c : p)
    if (c != 0) return false;
  return true;
}

long degree(const Poly& p) {
  for (std::size_t i = p.size(); i-- > 0;)
    if (p[i] != 0) return static_cast<long>(i);
  return -1;
}

Int eval(const Poly& p, const Int& x) {
  Int r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Int(static_cast<unsigned long>(i)));
  trim(d);
  return d;
}

Poly multiply(const Poly& a, const Poly& b) {
  if (is_zero(a) || is_zero(b)) return {};
  Poly c(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

Poly negate_argument(const Poly& p) {
  Poly q = p;
  for (std::size_t i = 1; i < q.size(); i += 2) q[i] = -q[i];
  return q;
}

Poly divide_unit_leading(const Poly& a, const Poly& b, bool& exact) {
  long db = degree(b);
  if (db < 0) throw std::invalid_argument("division by zero polynomial");
  const Int& lead = b[static_cast<std::size_t>(db)];
  if (lead != 1 && lead != -1)
    throw std::invalid_argument("divide_unit_leading: divisor leading coefficient must be +-1");
  Poly r = a;
  trim(r);
  long da = degree(r);
  if (da < db) {
    exact = is_zero(r);
    return {};
  }
  Poly q(static_cast<std::size_t>(da - db) + 1, Int(0));
  while (true) {
    long dr = degree(r);
    if (dr < db) break;
    Int factor = r[static_cast<std::size_t>(dr)];
    if (lead == -1) factor = -factor;
    std::size_t shift = static_cast<std::size_t>(dr - db);
    q[shift] = factor;
    for (long i = 0; i <= db; ++i) {
      r[static_cast<std::size_t>(i) + shift] -= factor * b[static_cast<std::size_t>(i)];
    }
  }
  exact = is_zero(r);
  trim(q);
  return q;
}

Int content(const Poly& p) {
  Int g = 0;
  for (const Int& c : p) {
    Int a = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

Poly primitive_part(const Poly& p) {
  Poly q = p;
  trim(q);
  if (q.empty()) return q;
  Int g = content(q);
  for (Int& c : q) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (q.back() < 0)
    for (Int& c : q) c = -c;
  return q;
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
Poly pseudo_remainder(Poly a, const Poly& b) {
  trim(a);
  long db = degree(b);
  const Int& lead = b[static_cast<std::size_t>(db)];
  while (true) {
    long da = degree(a);
    if (da < db) break;
    Int top = a[static_cast<std::size_t>(da)];
    std::size_t shift = static_cast<std::size_t>(da - db);
    for (Int& c : a) c *= lead;
    for (long i = 0; i <= db; ++i)
      a[static_cast<std::size_t>(i) + shift] -= top * b[static_cast<std::size_t>(i)];
    trim(a);
  }
  return a;
}

}  // namespace

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  if (is_zero(a)) return primitive_part(b);
  if (is_zero(b)) return primitive_part(a);
  Poly g = primitive_part(a);
  Poly h = primitive_part(b);
  if (degree(g) < degree(h)) std::swap(g, h);
  while (true) {
    Poly r = pseudo_remainder(g, h);
    if (is_zero(r)) return primitive_part(h);
    if (degree(r) == 0) return {Int(1)};
    g = std::move(h);
    h = primitive_part(r);
  }
}

}  // namespace percount::polyops
