#include "percount/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace percount {

IntMatrix IntMatrix::identity(std::size_t d) {
  IntMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (std::size_t i = 0; i < dim; ++i) t += at(i, i);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix c(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t k = 0; k < a.dim; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.dim; ++j) {
        c.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix c(a.dim);
  for (std::size_t i = 0; i < a.data.size(); ++i) c.data[i] = a.data[i] - b.data[i];
  return c;
}

IntMatrix matrix_pow(const IntMatrix& a, unsigned long n) {
  IntMatrix result = IntMatrix::identity(a.dim);
  IntMatrix base = a;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1UL;
    if (n > 0) base = base * base;
  }
  return result;
}

Int determinant(const IntMatrix& a) {
  std::size_t d = a.dim;
  if (d == 0) return Int(1);
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < d && m.at(pivot, k) == 0) ++pivot;
      if (pivot == d) return Int(0);
      for (std::size_t j = 0; j < d; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        // Bareiss: division by the previous pivot is exact.
        mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  Int det = m.at(d - 1, d - 1);
  return sign == 1 ? det : Int(-det);
}

IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Int>> rows;
  std::istringstream rin(text);
  std::string row;
  while (std::getline(rin, row, ';')) {
    std::vector<Int> entries;
    std::istringstream ein(row);
    std::string tok;
    while (std::getline(ein, tok, ',')) {
      std::size_t b = tok.find_first_not_of(" \t");
      if (b == std::string::npos) throw std::invalid_argument("empty matrix entry");
      std::size_t e = tok.find_last_not_of(" \t");
      entries.push_back(parse_int(tok.substr(b, e - b + 1)));
    }
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  std::size_t d = rows.size();
  IntMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (rows[i].size() != d)
      throw std::invalid_argument("matrix is not square: row " + std::to_string(i + 1) +
                                  " has " + std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(d));
    for (std::size_t j = 0; j < d; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::string format_matrix(const IntMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (j) out += ',';
      out += a.at(i, j).get_str();
    }
  }
  return out;
}

}  // namespace percount
