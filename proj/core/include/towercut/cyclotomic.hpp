#pragma once

#include <vector>

#include "towercut/int_poly.hpp"
#include "towercut/numeric.hpp"

namespace towercut {

unsigned long euler_phi(unsigned long n);

// n-th cyclotomic polynomial over Z, monic of degree phi(n). Cached; safe to
// call from several threads.
const IntPoly& cyclotomic_poly(unsigned long n);

// Element of Q(zeta_n) as a rational-coefficient polynomial in zeta_n reduced
// mod Phi_n; coeffs has length exactly phi(n).
class CycloElement {
  public:
    CycloElement(unsigned long level, std::vector<Rat> coeffs);

    static CycloElement zero(unsigned long level);
    static CycloElement from_rational(unsigned long level, const Rat& value);
    // zeta_n^e reduced into the power basis; e taken mod n.
    static CycloElement zeta_power(unsigned long level, unsigned long e);
    // sum coeffs[i] * zeta_n^i for a coefficient vector of any length,
    // reduced mod Phi_n.
    static CycloElement from_polynomial(unsigned long level, std::vector<Rat> coeffs);

    unsigned long level() const { return level_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Constant coefficient; only meaningful together with is_rational().
    const Rat& rational_part() const { return coeffs_[0]; }

    CycloElement operator+(const CycloElement& o) const;
    CycloElement operator-(const CycloElement& o) const;
    CycloElement scaled(const Rat& c) const;
    bool operator==(const CycloElement& o) const = default;

  private:
    unsigned long level_;
    std::vector<Rat> coeffs_;
};

// Product in Q(zeta_n), reduced mod Phi_n. Levels must agree.
CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b);

// Field norm N_{Q(zeta_n)/Q}(a) = Res(Phi_n, A) with denominators cleared
// first and the denominator power divided back out.
Rat cyclo_norm(const CycloElement& a);

}  // namespace towercut
