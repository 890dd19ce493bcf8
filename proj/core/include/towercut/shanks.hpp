#pragma once

#include <optional>
#include <string>
#include <vector>

#include "towercut/numeric.hpp"

namespace towercut {

// One member of the family of totally real cubics attached to p = a^2 + 3a + 9:
// minimal polynomial x^3 - a x^2 - (a+3) x - 1, discriminant p^2 (an identity
// in a, prime or not).
struct ShanksRecord {
    Int a;
    Int p;  // a^2 + 3a + 9
    Int b, c, d;  // coefficients of x^3 + b x^2 + c x + d
    Int discriminant;
    bool prime = false;
    // Externally supplied annotation (e.g. a class-group rank obtained from a
    // computer-algebra system); never computed or verified here.
    std::optional<std::string> class_group_note;

    static ShanksRecord make(const Int& a);
};

// Discriminant 18bcd - 4b^3 d + b^2 c^2 - 4c^3 - 27d^2 of the stored cubic.
Int cubic_discriminant(const ShanksRecord& record);

// Scans a_min..a_max and keeps the records with prime p. Requires
// 1 <= a_min <= a_max.
std::vector<ShanksRecord> shanks_scan(const Int& a_min, const Int& a_max, unsigned threads = 1);

}  // namespace towercut
