#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "percount/matrix.hpp"
#include "percount/numeric.hpp"

namespace percount {

// Monic integer polynomial, degree >= 1. Coefficients ascending:
// coeffs[0] + coeffs[1] x + ... + coeffs[d] x^d with coeffs[d] = 1.
struct IntPolynomial {
  std::vector<Int> coeffs;

  explicit IntPolynomial(std::vector<Int> ascending);

  // "1,-1,-1,-1" is degree-descending, leading coefficient first.
  static IntPolynomial from_descending(const std::vector<Int>& desc);

  // Accepts either the descending coefficient list or an expression such as
  // "x^3-x^2-x-1" (integer coefficients, caret powers, ASCII).
  static IntPolynomial parse(const std::string& text);

  std::size_t degree() const { return coeffs.size() - 1; }
  Int eval(const Int& x) const;
  std::string to_string() const;

  bool operator==(const IntPolynomial& o) const = default;
};

// Companion matrix A_f; last row carries the negated non-leading coefficients.
IntMatrix companion_matrix(const IntPolynomial& f);

}  // namespace percount
