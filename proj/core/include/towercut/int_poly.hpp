#pragma once

#include <vector>

#include "towercut/numeric.hpp"

namespace towercut {

// Dense polynomial over Z, coefficient of x^i at index i. Normalized form has
// no trailing zero (the zero polynomial is the empty vector).
using IntPoly = std::vector<Int>;

namespace poly {

IntPoly normalize(IntPoly p);
bool is_zero(const IntPoly& p);
// Degree of the zero polynomial is -1.
long degree(const IntPoly& p);
const Int& leading(const IntPoly& p);

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly scale(const IntPoly& a, const Int& c);
Int content(const IntPoly& a);

// Quotient of an exact division; throws std::logic_error if the division
// leaves a remainder.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

Int eval(const IntPoly& p, const Int& x);

// Resultant of a and b via the subresultant pseudo-remainder sequence;
// exact over Z with no fraction-field arithmetic.
Int resultant(const IntPoly& a, const IntPoly& b);

}  // namespace poly
}  // namespace towercut
