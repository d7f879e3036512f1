#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "percount/numeric.hpp"

namespace percount {

// A finite 1-indexed prefix of an integer sequence. terms[0] holds u_1.
struct Sequence {
  std::vector<Int> terms;

  Sequence() = default;
  explicit Sequence(std::vector<Int> t) : terms(std::move(t)) {}

  std::size_t length() const { return terms.size(); }

  // 1-based access; n in [1, length()].
  const Int& at(std::size_t n) const;
  Int& at(std::size_t n);
};

// Text format: one decimal integer per line, '#' starts a comment line.
Sequence read_sequence_file(const std::string& path);
Sequence parse_sequence_lines(const std::string& text);

// Comma-separated terms, e.g. "1,3,4,7".
Sequence parse_terms_csv(const std::string& csv);

}  // namespace percount
