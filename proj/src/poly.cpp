#include "percount/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace percount {

IntPolynomial::IntPolynomial(std::vector<Int> ascending) : coeffs(std::move(ascending)) {
  if (coeffs.size() < 2) throw std::invalid_argument("polynomial degree must be >= 1");
  if (coeffs.back() != 1) throw std::invalid_argument("polynomial must be monic");
}

IntPolynomial IntPolynomial::from_descending(const std::vector<Int>& desc) {
  return IntPolynomial(std::vector<Int>(desc.rbegin(), desc.rend()));
}

Int IntPolynomial::eval(const Int& x) const {
  Int r = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
  return r;
}

std::string IntPolynomial::to_string() const {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Int& c = coeffs[i];
    if (c == 0 && i != 0) continue;
    if (c == 0 && !out.empty()) continue;
    std::string mag = Int(abs(c)).get_str();
    if (out.empty()) {
      out += (c < 0) ? "-" : "";
    } else {
      out += (c < 0) ? "-" : "+";
    }
    if (i == 0) {
      out += mag;
    } else {
      if (mag != "1") out += mag;
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

namespace {

IntPolynomial parse_expression(const std::string& text) {
  // terms: [+|-] [coef] [* ] [x [^ exp]]
  std::vector<Int> coeffs;  // ascending, grown on demand
  auto bump = [&coeffs](std::size_t deg, const Int& c) {
    if (coeffs.size() <= deg) coeffs.resize(deg + 1, Int(0));
    coeffs[deg] += c;
  };
  std::size_t i = 0;
  auto skip_ws = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      sign = (text[i] == '-') ? -1 : 1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("polynomial parse: expected '+' or '-' at position " +
                                  std::to_string(i));
    }
    first = false;
    skip_ws();
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    Int coef = digits.empty() ? Int(1) : Int(digits);
    if (sign < 0) coef = -coef;
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_ws();
    }
    if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
      ++i;
      unsigned long exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        std::string ed;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
        if (ed.empty()) throw std::invalid_argument("polynomial parse: missing exponent after '^'");
        exp = std::stoul(ed);
      }
      bump(exp, coef);
    } else {
      if (digits.empty())
        throw std::invalid_argument("polynomial parse: bare sign without term");
      bump(0, coef);
    }
    skip_ws();
  }
  if (coeffs.empty()) throw std::invalid_argument("polynomial parse: empty input");
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

IntPolynomial IntPolynomial::parse(const std::string& text) {
  if (text.find('x') != std::string::npos || text.find('X') != std::string::npos)
    return parse_expression(text);
  std::vector<Int> desc;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty coefficient in list");
    std::size_t e = tok.find_last_not_of(" \t");
    desc.push_back(parse_int(tok.substr(b, e - b + 1)));
  }
  return from_descending(desc);
}

IntMatrix companion_matrix(const IntPolynomial& f) {
  std::size_t d = f.degree();
  IntMatrix a(d);
  for (std::size_t i = 0; i + 1 < d; ++i) a.at(i, i + 1) = 1;
  for (std::size_t j = 0; j < d; ++j) a.at(d - 1, j) = -f.coeffs[j];
  return a;
}

}  // namespace percount
