#pragma once

#include <optional>
#include <string>
#include <vector>

#include "towercut/gs.hpp"
#include "towercut/numeric.hpp"

namespace towercut {

// Splitting data of p in a totally imaginary Galois field containing the p-th
// roots of unity: ramification index e, residue degree f, number g of primes
// above p, and the dimension of the Kummer-radical quotient (an input here,
// never computed from field data).
struct FieldParams {
    Int p;
    unsigned long e = 1;
    unsigned long f = 1;
    Int g = 1;
    unsigned long dim_vs = 0;
    bool contains_mu_p = true;
    bool totally_imaginary = true;

    FieldParams(Int p_, unsigned long e_, unsigned long f_, Int g_, unsigned long dim_vs_ = 0,
                bool contains_mu_p_ = true, bool totally_imaginary_ = true);

    Int efg() const { return Int(e) * Int(f) * g; }
    bool operator==(const FieldParams& o) const = default;
};

// dim H^2 = g - 1 + dim V_S
Int h2_dim(const FieldParams& params);
// dim H^1 = efg/2 + 1 + dim H^2; efg must be even
Int h1_dim(const FieldParams& params);

struct PresentationData {
    Int d;
    std::vector<DepthTerm> relation_terms;
};

// Presentation of the locally-abelian cut quotient: d = dim H^1 generators,
// one depth-2 block of dim H^2 + g*(ef+2)(ef+1)/2 relations (the commutator
// cuts at each of the g places).
PresentationData gamma_presentation(const FieldParams& params);

// gamma_presentation plus the power cuts: a factored term (base p, exponent k,
// count g*(ef+2)). k with p^k < 2 is rejected: appended relations must have
// depth >= 2.
PresentationData gamma_k_presentation(const FieldParams& params, unsigned long k);

// 16 + 8(x+2)(x+1) < g(x+2)^2, exact integer arithmetic. Sufficient (not
// necessary) for the d^2 > 4r witness to exist at f=1, e=x.
bool cut_inequality_holds(const Int& g, const Int& x);

enum class CertificateVerdict { InfiniteByCutting, InfiniteTowerAlready, Inconclusive };

// Fixed caveat texts recorded on certificates.
extern const char* const kCaveatTowerTopDisjunction;
extern const char* const kCaveatKummerDimensionInput;
extern const char* const kCaveatGridWitness;
extern const char* const kCaveatRealClassNumberAssumed;

// Complete audit trail of one tower analysis. Everything needed to re-check
// the verdict is recorded: the presentation counts, the witness point, the
// exact polynomial value there, and certified bounds for any oversized tails.
struct Certificate {
    FieldParams params;
    Int d;
    Int r;  // depth-2 relation count of the commutator-cut quotient
    Rat t0;
    Rat gamma_value;  // exact value of the cut-quotient polynomial at t0
    std::optional<unsigned long> cut_level_k;
    CertificateVerdict verdict = CertificateVerdict::Inconclusive;
    std::vector<std::string> caveats;
    Rat witness_value;  // certified upper bound including power-cut tails
    std::vector<TailBound> tail_bounds;
    WitnessSource witness_source = WitnessSource::QuadraticMinimizer;
};

// Full pipeline: build the cut-quotient presentation, search for a negativity
// witness, and if one exists find the least power-cut level that keeps the
// bound negative. The verdict is InfiniteByCutting or Inconclusive; no
// finiteness claim is ever made.
Certificate analyze_tower(const FieldParams& params, const KernelConfig& cfg = {});

// Re-checks every recorded rational and verdict of a certificate without
// re-running any search. True iff the records reproduce the stated verdict.
bool replay_certificate(const Certificate& cert, const KernelConfig& cfg = {});

}  // namespace towercut
