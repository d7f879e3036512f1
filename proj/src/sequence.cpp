#include "percount/sequence.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace percount {

const Int& Sequence::at(std::size_t n) const {
  if (n < 1 || n > terms.size())
    throw std::out_of_range("Sequence::at: index " + std::to_string(n) +
                            " outside [1, " + std::to_string(terms.size()) + "]");
  return terms[n - 1];
}

Int& Sequence::at(std::size_t n) {
  return const_cast<Int&>(static_cast<const Sequence*>(this)->at(n));
}

Sequence parse_sequence_lines(const std::string& text) {
  std::vector<Int> terms;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    // strip whitespace
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string tok = line.substr(b, e - b + 1);
    if (tok[0] == '#') continue;
    terms.push_back(parse_int(tok));
  }
  if (terms.empty()) throw std::invalid_argument("sequence input has no terms");
  return Sequence(std::move(terms));
}

Sequence read_sequence_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open sequence file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_sequence_lines(buf.str());
}

Sequence parse_terms_csv(const std::string& csv) {
  std::vector<Int> terms;
  std::string tok;
  std::istringstream in(csv);
  while (std::getline(in, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty term in list");
    std::size_t e = tok.find_last_not_of(" \t");
    terms.push_back(parse_int(tok.substr(b, e - b + 1)));
  }
  if (terms.empty()) throw std::invalid_argument("sequence input has no terms");
  return Sequence(std::move(terms));
}

}  // namespace percount
