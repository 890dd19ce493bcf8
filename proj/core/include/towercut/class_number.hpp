#pragma once

#include "towercut/characters.hpp"
#include "towercut/cohomology.hpp"
#include "towercut/numeric.hpp"

namespace towercut {

struct HMinusResult {
    unsigned long modulus = 0;
    Int h_minus;  // positive integer; integrality is asserted, not assumed
    unsigned long orbit_count = 0;
    unsigned long q_factor = 1;  // 1 for prime-power modulus
    unsigned long w_factor = 0;  // number of roots of unity in Q(zeta_modulus)
};

// Relative class number h^-(Q(zeta_{p^s})) = Q * w * prod_{chi odd}
// (-B_{1,chi}/2), with the product taken one Galois orbit at a time as a
// cyclotomic norm. Modulus must be a prime power > 2.
HMinusResult relative_class_number(unsigned long modulus, unsigned threads = 1);

// Independent oracle for prime conductors: |det M| / p^((p-3)/2) where M is
// the ((p-1)/2)-square matrix of least positive residues of a*b^{-1} mod p.
Int maillet_hminus(unsigned long p);

// Splitting data over the Hilbert class field of Q(zeta_{p^s}): the unique
// prime above p splits completely there, so e = phi(p^s), f = 1, g = h.
FieldParams cyclotomic_tower_params(const Int& p, unsigned long s, const Int& h);

}  // namespace towercut
