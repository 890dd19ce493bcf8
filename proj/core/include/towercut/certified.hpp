#pragma once

#include <optional>

#include "towercut/numeric.hpp"

namespace towercut {

// Tuning knobs for the exact/certified arithmetic split. The defaults keep
// every comparison that the tower pipeline produces cheap while staying sound
// for arbitrarily large exponents.
struct KernelConfig {
    // Exponents up to 2^exact_threshold_bits are evaluated by exact binary
    // exponentiation; larger ones go through directed rounding.
    unsigned exact_threshold_bits = 16;
    // Working precision ladder for directed rounding: start here, double on an
    // inconclusive comparison, give up (throw) past the max.
    unsigned long start_precision_bits = 128;
    unsigned long max_precision_bits = 1ul << 20;
    // Precision cap for opportunistic bound-tightening probes; an inconclusive
    // probe just keeps the looser bound.
    unsigned long probe_precision_bits = 1024;
    // Certified tail bounds are never refined below 2^-value_floor_bits.
    unsigned long value_floor_bits = 8192;
    // Dyadic witness grid scans denominators up to 2^grid_depth_limit.
    unsigned grid_depth_limit = 12;

    Int exact_threshold() const { return pow2(exact_threshold_bits); }
};

enum class CompareOutcome { ProvenLess, ProvenGreaterOrEqual };
enum class CompareMethod { ExactRational, DirectedRounding };

// Outcome of a certified comparison. A DirectedRounding verdict is backed by
// directed fixed-point bounds that imply the stated inequality with certainty.
struct ComparisonVerdict {
    CompareOutcome outcome;
    CompareMethod method;
    unsigned long precision_bits = 0;

    bool proven_less() const { return outcome == CompareOutcome::ProvenLess; }
};

// Decides q^exponent < bound for 0 < q < 1, exponent >= 1, bound > 0. Exact
// below the configured threshold, otherwise compares exponent*ln(1/q) against
// ln(1/bound) in scaled-integer arithmetic, doubling precision until one side
// is proven. Never returns an unproven answer.
ComparisonVerdict certified_pow_compare(const Rat& q, const Int& exponent, const Rat& bound,
                                        const KernelConfig& cfg = {});

// Same decision procedure with a hard precision cap; nullopt when the cap is
// reached without a proof.
std::optional<ComparisonVerdict> certified_pow_compare_capped(const Rat& q, const Int& exponent,
                                                              const Rat& bound,
                                                              const KernelConfig& cfg,
                                                              unsigned long precision_cap_bits);

namespace detail {

// lo/2^bits <= value <= up/2^bits
struct FixedBounds {
    Int lo;
    Int up;
    unsigned long bits;
};

// Directed bounds on ln(r) for rational r >= 1, via ln r = k ln 2 + 2 atanh(z)
// with r = 2^k x, x in [1,2), z = (x-1)/(x+1), all partial sums floor/ceil
// rounded and the series tail absorbed into the upper bound.
FixedBounds ln_bounds(const Rat& r, unsigned long bits);

}  // namespace detail
}  // namespace towercut
