#pragma once

#include <vector>

#include "percount/numeric.hpp"

namespace percount::polyops {

// Raw dense polynomials, ascending coefficients, possibly non-monic.
using Poly = std::vector<Int>;

void trim(Poly& p);
bool is_zero(const Poly& p);
long degree(const Poly& p);  // -1 for the zero polynomial
Int eval(const Poly& p, const Int& x);
Poly derivative(const Poly& p);
Poly multiply(const Poly& a, const Poly& b);
Poly negate_argument(const Poly& p);  // p(-x)

// Quotient of a by b when b has leading coefficient +-1; sets exact to
// whether the remainder was zero.
Poly divide_unit_leading(const Poly& a, const Poly& b, bool& exact);

Int content(const Poly& p);
Poly primitive_part(const Poly& p);

// Primitive-PRS gcd over Z, returned primitive with positive leading coeff.
Poly gcd(Poly a, Poly b);

}  // namespace percount::polyops
