#pragma once

#include <optional>
#include <vector>

#include "towercut/certified.hpp"
#include "towercut/numeric.hpp"

namespace towercut {

// One group of presentation relations sharing a depth: either a plain depth
// >= 2, or a factored depth p^k kept in (base, exponent) form so it can stay
// symbolic when p^k is too large to evaluate.
class DepthTerm {
  public:
    static DepthTerm plain(unsigned long depth, Int count);
    static DepthTerm factored(Int base, unsigned long exponent, Int count);

    bool is_factored() const { return factored_; }
    unsigned long plain_depth() const { return plain_depth_; }
    const Int& base() const { return base_; }
    unsigned long exponent() const { return exponent_; }
    const Int& count() const { return count_; }

    // The depth as an integer (p^k materialized for factored terms).
    Int depth_value() const;

    bool operator==(const DepthTerm& o) const = default;

  private:
    DepthTerm() = default;
    bool factored_ = false;
    unsigned long plain_depth_ = 0;
    Int base_ = 0;
    unsigned long exponent_ = 0;
    Int count_ = 0;
};

// P(t) = 1 - d*t + sum_i count_i * t^depth_i
struct GSPolynomial {
    Int d;
    std::vector<DepthTerm> terms;

    GSPolynomial(Int d_, std::vector<DepthTerm> terms_);
};

// Exact evaluation; every depth must be within the exact threshold, otherwise
// a domain_error points the caller at gs_eval_bounded. Requires 0 <= t <= 1.
Rat gs_eval(const GSPolynomial& poly, const Rat& t, const KernelConfig& cfg = {});

// A certified upper bound on one oversized term's contribution, together with
// the comparison that proves it.
struct TailBound {
    DepthTerm term;
    Rat bound;  // strict upper bound on count * t^depth
    ComparisonVerdict proof;
};

struct BoundedEval {
    Rat upper;       // certified: P(t) <= upper
    Rat exact_part;  // exactly evaluated portion (everything within threshold)
    std::vector<TailBound> tails;
    std::vector<ComparisonVerdict> trail;  // every comparison performed
};

// Certified upper bound on P(t) for 0 < t < 1. Terms within the exact
// threshold are evaluated exactly; each oversized term is replaced by a proven
// upper bound found by certified comparison against a halving slack grid
// seeded at (available negative slack)/2 per term. Always succeeds; the bound
// may be weak when the slack is unfavourable.
BoundedEval gs_eval_bounded(const GSPolynomial& poly, const Rat& t, const KernelConfig& cfg = {});

enum class WitnessSource {
    QuadraticMinimizer,  // t0 = d/2r, the vertex of 1 - dt + rt^2
    DyadicGrid,
};

// Proof object refuting finiteness: a point with a certified negative value.
struct NegativityWitness {
    Rat t0;
    Rat value;  // certified upper bound on P(t0); negative
    std::vector<TailBound> tail_bounds;
    WitnessSource source = WitnessSource::QuadraticMinimizer;
};

// Tries the quadratic-minimizer candidate d/2r first (r = total weight at
// depth exactly 2), then scans the dyadic grid j/2^m. A nullopt result carries
// no finiteness claim whatsoever: the criterion only ever refutes.
std::optional<NegativityWitness> find_witness(const GSPolynomial& poly,
                                              const KernelConfig& cfg = {});

struct CutLevelResult {
    unsigned long k;
    NegativityWitness witness;
};

// Least k >= 1 such that appending a factored term (base p, exponent k, count
// tail_count) still yields a certified negative bound at t0; k = 0 is never
// eligible since p^0 = 1 is below the minimal relation depth. Requires the
// exact part gs_eval(gamma, t0) to already be negative.
CutLevelResult min_cut_level(const GSPolynomial& gamma, const Rat& t0, const Int& p,
                             const Int& tail_count, const KernelConfig& cfg = {});

}  // namespace towercut
