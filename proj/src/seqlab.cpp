#include "percount/seqlab.hpp"

#include <stdexcept>

namespace percount::seqlab {

Sequence power_sequence(const Int& a, std::size_t n) {
  if (a <= 0) throw std::domain_error("power_sequence: a must be >= 1");
  std::vector<Int> terms;
  terms.reserve(n);
  Int v = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    v *= a;
    terms.push_back(v);
  }
  return Sequence(std::move(terms));
}

Sequence mersenne(std::size_t n) {
  std::vector<Int> terms;
  terms.reserve(n);
  Int v = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    v *= 2;
    terms.push_back(v - 1);
  }
  return Sequence(std::move(terms));
}

Sequence jacobsthal_lucas(std::size_t n) {
  std::vector<Int> terms;
  terms.reserve(n);
  Int v = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    v *= -2;
    terms.push_back(abs(v - 1));
  }
  return Sequence(std::move(terms));
}

Sequence s_plus(std::size_t n) {
  std::vector<Int> terms;
  terms.reserve(n);
  Int two = 1, three = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    two *= 2;
    three *= -3;
    terms.push_back(abs(two + three));
  }
  return Sequence(std::move(terms));
}

Sequence linear_recurrence(const std::vector<Int>& coeffs,
                           const std::vector<Int>& inits, std::size_t n) {
  std::size_t k = coeffs.size();
  if (k == 0) throw std::domain_error("linear_recurrence: order must be >= 1");
  if (inits.size() != k)
    throw std::invalid_argument("linear_recurrence: need exactly k initial terms");
  if (n < k) throw std::invalid_argument("linear_recurrence: N must be >= order k");
  std::vector<Int> terms(inits);
  terms.reserve(n);
  while (terms.size() < n) {
    Int next = 0;
    std::size_t m = terms.size();
    for (std::size_t j = 0; j < k; ++j) next += coeffs[j] * terms[m - 1 - j];
    terms.push_back(std::move(next));
  }
  return Sequence(std::move(terms));
}

Sequence trace_sequence(const IntMatrix& a, std::size_t n) {
  std::vector<Int> terms;
  terms.reserve(n);
  IntMatrix power = a;
  for (std::size_t i = 1; i <= n; ++i) {
    terms.push_back(power.trace());
    if (i < n) power = power * a;
  }
  return Sequence(std::move(terms));
}

Sequence lehmer_pierce(const IntPolynomial& f, std::size_t n) {
  IntMatrix a = companion_matrix(f);
  std::size_t d = f.degree();
  IntMatrix eye = IntMatrix::identity(d);
  // A root of unity among the roots of f has order k with phi(k) <= d,
  // hence k <= 2 d^2; det(A_f^k - I) = prod_i (alpha_i^k - 1) vanishes there.
  unsigned long kmax = static_cast<unsigned long>(2 * d * d);
  IntMatrix power = eye;
  for (unsigned long k = 1; k <= kmax; ++k) {
    power = power * a;
    if (determinant(power - eye) == 0)
      throw ErgodicityError(
          "lehmer_pierce: f has a root of unity of order dividing " + std::to_string(k),
          k);
  }
  std::vector<Int> terms;
  terms.reserve(n);
  power = a;
  for (std::size_t i = 1; i <= n; ++i) {
    Int delta = abs(determinant(power - eye));
    if (delta == 0)
      throw std::logic_error("lehmer_pierce: zero term despite ergodicity screen");
    terms.push_back(std::move(delta));
    if (i < n) power = power * a;
  }
  return Sequence(std::move(terms));
}

namespace {

void count_paths(const IntMatrix& a, std::size_t start, std::size_t current,
                 std::size_t remaining, const Int& product, Int& total) {
  if (remaining == 0) {
    // close the cycle
    const Int& w = a.at(current, start);
    if (w != 0) total += product * w;
    return;
  }
  for (std::size_t next = 0; next < a.dim; ++next) {
    const Int& w = a.at(current, next);
    if (w == 0) continue;
    count_paths(a, start, next, remaining - 1, product * w, total);
  }
}

}  // namespace

Int edge_shift_count(const IntMatrix& a, std::size_t n, const EdgeShiftLimits& limits) {
  for (const Int& e : a.data)
    if (e < 0) throw std::domain_error("edge_shift_count: negative entry");
  if (a.dim > limits.max_dim || n > limits.max_n)
    throw std::invalid_argument("edge_shift_count: size guard exceeded (dim <= " +
                                std::to_string(limits.max_dim) + ", n <= " +
                                std::to_string(limits.max_n) + ")");
  if (n == 0) throw std::domain_error("edge_shift_count: n must be >= 1");
  Int total = 0;
  for (std::size_t v = 0; v < a.dim; ++v) {
    count_paths(a, v, v, n - 1, Int(1), total);
  }
  return total;
}

EulerFermatWitness verify_matrix_euler_fermat(const IntMatrix& a, unsigned long p,
                                              unsigned long r) {
  if (!is_prime(p)) throw std::domain_error("verify_matrix_euler_fermat: p is not prime");
  if (r < 1) throw std::domain_error("verify_matrix_euler_fermat: r must be >= 1");
  EulerFermatWitness w;
  w.p = p;
  w.r = r;
  w.modulus = pow_int(Int(p), r);
  unsigned long high = 1, low = 1;
  for (unsigned long i = 0; i < r; ++i) high *= p;
  for (unsigned long i = 0; i + 1 < r; ++i) low *= p;
  w.trace_high = matrix_pow(a, high).trace();
  w.trace_low = matrix_pow(a, low).trace();
  Int diff = w.trace_high - w.trace_low;
  w.holds = mpz_divisible_p(diff.get_mpz_t(), w.modulus.get_mpz_t()) != 0;
  return w;
}

StarDivisibilityReport verify_star_divisibility(const IntMatrix& a, std::size_t n) {
  Sequence u = trace_sequence(a, n);
  realis::MobiusTransform t = realis::mobius_transform(u);
  StarDivisibilityReport rep;
  rep.checked_n = n;
  for (std::size_t k = 1; k <= n; ++k) {
    if (!divisible(t.at(k), static_cast<unsigned long>(k)))
      rep.failures.emplace_back(k, t.at(k));
  }
  rep.all_divisible = rep.failures.empty();
  return rep;
}

Sequence generate(const GeneratorSpec& spec, std::size_t n) {
  using Kind = GeneratorSpec::Kind;
  switch (spec.kind) {
    case Kind::power:
      return power_sequence(spec.a, n);
    case Kind::mersenne:
      return mersenne(n);
    case Kind::lucas:
      return linear_recurrence({Int(1), Int(1)}, {Int(1), Int(3)}, n);
    case Kind::jacobsthal_lucas:
      return jacobsthal_lucas(n);
    case Kind::s_plus:
      return s_plus(n);
    case Kind::linear_recurrence:
      return linear_recurrence(spec.coeffs, spec.inits, n);
    case Kind::matrix_trace:
      if (!spec.matrix) throw std::invalid_argument("generate: matrix_trace needs a matrix");
      return trace_sequence(*spec.matrix, n);
    case Kind::lehmer_pierce:
      if (!spec.poly) throw std::invalid_argument("generate: lehmer_pierce needs a polynomial");
      return lehmer_pierce(*spec.poly, n);
  }
  throw std::logic_error("generate: unhandled kind");
}

}  // namespace percount::seqlab
