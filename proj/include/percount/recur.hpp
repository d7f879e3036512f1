#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "percount/matrix.hpp"
#include "percount/poly.hpp"
#include "percount/sequence.hpp"

namespace percount::recur {

// u_{n+2} = B u_{n+1} - C u_n with characteristic polynomial x^2 - Bx + C.
struct BinaryRecurrence {
  Int b;
  Int c;

  Int discriminant() const { return b * b - Int(4) * c; }
  IntPolynomial characteristic() const {
    return IntPolynomial({c, -b, Int(1)});
  }
};

class DegenerateRecurrenceError : public std::domain_error {
 public:
  DegenerateRecurrenceError(std::string msg, unsigned long order)
      : std::domain_error(std::move(msg)), witness_order(order) {}
  unsigned long witness_order;  // smallest k with alpha1^k = alpha2^k
};

struct DegeneracyResult {
  bool degenerate = false;
  unsigned long witness_order = 0;  // 0 when non-degenerate
};

// Exact test: the root ratio is a root of unity iff the companion sequence
// U_k (U_1 = 1, U_2 = B, U_{k+1} = B U_k - C U_{k-1}) vanishes at some
// k in {2, 3, 4, 6}. Requires C != 0 and discriminant != 0.
DegeneracyResult is_degenerate(const BinaryRecurrence& rec);

enum class DiscCase { neg_disc, zero_disc, pos_square_disc, pos_nonsquare_disc };

struct GeneratorSeq {
  std::string rule;  // human-readable defining rule
  Sequence prefix;
};

struct ClassificationReport {
  DiscCase disc_case;
  Int discriminant;
  int dimension = 0;  // 0, 1 or 2
  std::vector<GeneratorSeq> generators;
  std::string notes;
};

// Realisable-subspace classification by discriminant; degenerate input is
// refused (DegenerateRecurrenceError). prefix_len controls the emitted
// generator prefixes.
ClassificationReport classify(const BinaryRecurrence& rec, std::size_t prefix_len = 50);

// E = ((1,0),(k,1)) with k = B/2 (B even) or (B+1)/2 (B odd); M = E^-1 A_f E
// has non-negative entries and the same trace sequence as A_f.
// Requires discriminant >= 1 and B >= 1.
std::pair<IntMatrix, IntMatrix> nonneg_conjugate(const BinaryRecurrence& rec);

struct FactorCountResult {
  bool separable = false;
  int factor_count = 0;
  std::vector<IntPolynomial> factors;  // monic irreducible, product = f
};

// Separability via gcd(f, f'); irreducible factor count over Q by Kronecker
// interpolation. Degree is capped at 8; beyond that the caller must supply a
// factorisation (see verify_factorisation).
FactorCountResult factor_count(const IntPolynomial& f);

// Checks a user-provided factor list: each monic, product equals f.
bool verify_factorisation(const IntPolynomial& f, const std::vector<IntPolynomial>& factors);

enum class DominantRootKind { yes, no, inconclusive };

struct DominantRootVerdict {
  DominantRootKind kind = DominantRootKind::inconclusive;
  // Certified lower bound on the gap between the top two root moduli
  // (meaningful only for kind == yes).
  std::string modulus_gap;
  unsigned long precision_bits = 0;  // precision at which the verdict was reached
  std::string detail;
};

// Certified by precision-doubling root approximation; "no" requires a proof
// that two distinct roots share the maximal modulus (conjugate pair or a
// +-alpha pair detected exactly). Requires f separable.
DominantRootVerdict dominant_root(const IntPolynomial& f);

struct PolyAnalysis {
  bool separable = false;
  int factor_count = 0;  // 0 means unknown
  DominantRootVerdict dominant;
  bool bound_available = false;
  int bound = 0;  // = factor_count when available
  std::string reason;
};

PolyAnalysis realisable_bound(const IntPolynomial& f);

}  // namespace percount::recur
