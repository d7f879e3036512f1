#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "percount/numeric.hpp"

namespace percount {

// Square matrix with exact integer entries, row-major.
struct IntMatrix {
  std::size_t dim = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  explicit IntMatrix(std::size_t d) : dim(d), data(d * d, Int(0)) {}

  static IntMatrix identity(std::size_t d);

  const Int& at(std::size_t i, std::size_t j) const { return data[i * dim + j]; }
  Int& at(std::size_t i, std::size_t j) { return data[i * dim + j]; }

  Int trace() const;
  bool operator==(const IntMatrix& o) const = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

// Exact power by repeated squaring; n = 0 gives the identity.
IntMatrix matrix_pow(const IntMatrix& a, unsigned long n);

// Exact determinant (fraction-free Bareiss elimination with pivoting).
Int determinant(const IntMatrix& a);

// "0,1;1,1" -> rows split on ';', entries on ','.
IntMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntMatrix& a);

}  // namespace percount
