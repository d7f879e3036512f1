#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "percount/matrix.hpp"
#include "percount/poly.hpp"
#include "percount/realis.hpp"
#include "percount/sequence.hpp"

namespace percount::seqlab {

// u_n = a^n, a >= 1.
Sequence power_sequence(const Int& a, std::size_t n);

// M_n = 2^n - 1.
Sequence mersenne(std::size_t n);

// R_n = |(-2)^n - 1|.
Sequence jacobsthal_lucas(std::size_t n);

// S_n = |2^n + (-3)^n|.
Sequence s_plus(std::size_t n);

// u_{n+k} = a_1 u_{n+k-1} + ... + a_k u_n with initial terms u_1..u_k.
Sequence linear_recurrence(const std::vector<Int>& coeffs,
                           const std::vector<Int>& inits, std::size_t n);

// u_n = trace(A^n), exact.
Sequence trace_sequence(const IntMatrix& a, std::size_t n);

class ErgodicityError : public std::domain_error {
 public:
  ErgodicityError(std::string msg, unsigned long order)
      : std::domain_error(std::move(msg)), root_of_unity_order(order) {}
  unsigned long root_of_unity_order;
};

// Delta_n(f) = |det(A_f^n - I)|; rejects f with a root of unity among its
// roots (throws ErgodicityError with the offending order).
Sequence lehmer_pierce(const IntPolynomial& f, std::size_t n);

struct EdgeShiftLimits {
  std::size_t max_dim = 6;
  std::size_t max_n = 12;
};

// Brute-force oracle: counts closed edge paths of length n by explicit
// enumeration. Must equal trace(A^n); exists only as an independent check.
Int edge_shift_count(const IntMatrix& a, std::size_t n,
                     const EdgeShiftLimits& limits = {});

struct EulerFermatWitness {
  bool holds = false;
  unsigned long p = 0;
  unsigned long r = 0;
  Int trace_high;  // trace(A^{p^r})
  Int trace_low;   // trace(A^{p^{r-1}})
  Int modulus;     // p^r
};

EulerFermatWitness verify_matrix_euler_fermat(const IntMatrix& a, unsigned long p,
                                              unsigned long r);

struct StarDivisibilityReport {
  bool all_divisible = false;
  std::size_t checked_n = 0;
  std::vector<std::pair<std::size_t, Int>> failures;  // (n, u*_n)
};

// Checks n | (trace sequence)*_n only; the sign condition is deliberately
// not checked since A may have negative entries.
StarDivisibilityReport verify_star_divisibility(const IntMatrix& a, std::size_t n);

struct GeneratorSpec {
  enum class Kind {
    power,
    mersenne,
    lucas,
    jacobsthal_lucas,
    s_plus,
    linear_recurrence,
    matrix_trace,
    lehmer_pierce,
  };
  Kind kind;
  Int a;                       // power
  std::vector<Int> coeffs;     // linear_recurrence
  std::vector<Int> inits;      // linear_recurrence
  std::optional<IntMatrix> matrix;
  std::optional<IntPolynomial> poly;
};

Sequence generate(const GeneratorSpec& spec, std::size_t n);

}  // namespace percount::seqlab
