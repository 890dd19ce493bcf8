#include "towercut/gs.hpp"

#include <stdexcept>

#include "towercut/primes.hpp"

namespace towercut {

DepthTerm DepthTerm::plain(unsigned long depth, Int count) {
    if (depth < 2) throw std::domain_error("plain relation depth must be >= 2");
    if (count < 1) throw std::domain_error("relation count must be positive");
    DepthTerm t;
    t.factored_ = false;
    t.plain_depth_ = depth;
    t.count_ = std::move(count);
    return t;
}

DepthTerm DepthTerm::factored(Int base, unsigned long exponent, Int count) {
    if (!is_prime(base)) throw std::domain_error("factored depth base must be prime");
    if (count < 1) throw std::domain_error("relation count must be positive");
    DepthTerm t;
    t.factored_ = true;
    t.base_ = std::move(base);
    t.exponent_ = exponent;
    t.count_ = std::move(count);
    return t;
}

Int DepthTerm::depth_value() const {
    if (!factored_) return Int(plain_depth_);
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base_.get_mpz_t(), exponent_);
    return r;
}

GSPolynomial::GSPolynomial(Int d_, std::vector<DepthTerm> terms_)
    : d(std::move(d_)), terms(std::move(terms_)) {
    if (d < 1) throw std::domain_error("generator count d must be >= 1");
}

Rat gs_eval(const GSPolynomial& poly, const Rat& t, const KernelConfig& cfg) {
    if (t < 0 || t > 1) throw std::domain_error("gs_eval requires 0 <= t <= 1");
    const Int threshold = cfg.exact_threshold();
    Rat acc = 1 - Rat(poly.d) * t;
    for (const auto& term : poly.terms) {
        const Int depth = term.depth_value();
        if (depth > threshold)
            throw std::domain_error(
                "term depth exceeds the exact evaluation threshold; use gs_eval_bounded");
        acc += Rat(term.count()) * pow_rat(t, depth.get_ui());
    }
    return acc;
}

namespace {

// Certified strict upper bound on count * t^depth for one oversized term.
// Starts from the slack seed, escalates doubling until provable, then binary
// searches the halving grid seed/2^j for the tightest bound still provable at
// probe precision. Every verdict this emits proves term < returned bound.
TailBound certify_tail(const DepthTerm& term, const Rat& t, const Rat& seed,
                       const KernelConfig& cfg, std::vector<ComparisonVerdict>& trail) {
    const Int depth = term.depth_value();
    const Rat count(term.count());

    Rat target = seed;
    ComparisonVerdict proof = certified_pow_compare(t, depth, target / count, cfg);
    trail.push_back(proof);
    while (!proof.proven_less()) {
        target *= 2;
        proof = certified_pow_compare(t, depth, target / count, cfg);
        trail.push_back(proof);
    }

    // halving grid: largest j with target/2^j still provable (floor-capped)
    const Rat floor_value = make_rat(Int(1), pow2(cfg.value_floor_bits));
    unsigned long lo = 0, hi = 0;
    {
        Rat probe_target = target;
        while (probe_target / 2 > floor_value) {
            probe_target /= 2;
            ++hi;
        }
    }
    Rat best = target;
    ComparisonVerdict best_proof = proof;
    while (lo < hi) {
        const unsigned long mid = lo + (hi - lo + 1) / 2;
        const Rat candidate = target / pow_rat(Rat(2), mid);
        auto v = certified_pow_compare_capped(t, depth, candidate / count, cfg,
                                              cfg.probe_precision_bits);
        if (v) trail.push_back(*v);
        if (v && v->proven_less()) {
            lo = mid;
            best = candidate;
            best_proof = *v;
        } else {
            hi = mid - 1;
        }
    }
    return TailBound{term, best, best_proof};
}

}  // namespace

BoundedEval gs_eval_bounded(const GSPolynomial& poly, const Rat& t, const KernelConfig& cfg) {
    if (t <= 0 || t >= 1) throw std::domain_error("gs_eval_bounded requires 0 < t < 1");
    const Int threshold = cfg.exact_threshold();

    BoundedEval out;
    out.exact_part = 1 - Rat(poly.d) * t;
    std::vector<const DepthTerm*> oversized;
    for (const auto& term : poly.terms) {
        const Int depth = term.depth_value();
        if (depth <= threshold)
            out.exact_part += Rat(term.count()) * pow_rat(t, depth.get_ui());
        else
            oversized.push_back(&term);
    }

    out.upper = out.exact_part;
    if (oversized.empty()) return out;

    // available negative slack, split equally; without slack fall back to 1/2
    const Rat slack = -out.exact_part;
    const Rat seed =
        slack > 0 ? Rat(slack / (2 * Int(oversized.size()))) : make_rat(1, 2);
    for (const DepthTerm* term : oversized) {
        TailBound tb = certify_tail(*term, t, seed, cfg, out.trail);
        out.upper += tb.bound;
        out.tails.push_back(std::move(tb));
    }
    return out;
}

namespace {

std::optional<NegativityWitness> try_point(const GSPolynomial& poly, const Rat& t,
                                           WitnessSource source, const KernelConfig& cfg) {
    BoundedEval be = gs_eval_bounded(poly, t, cfg);
    if (be.upper >= 0) return std::nullopt;
    return NegativityWitness{t, std::move(be.upper), std::move(be.tails), source};
}

}  // namespace

std::optional<NegativityWitness> find_witness(const GSPolynomial& poly, const KernelConfig& cfg) {
    // weight at depth exactly 2 drives the closed-form candidate
    Int r2 = 0;
    for (const auto& term : poly.terms)
        if (term.depth_value() == 2) r2 += term.count();
    if (r2 > 0) {
        const Rat t0 = make_rat(poly.d, 2 * r2);
        if (t0 > 0 && t0 < 1)
            if (auto w = try_point(poly, t0, WitnessSource::QuadraticMinimizer, cfg)) return w;
    }
    for (unsigned m = 1; m <= cfg.grid_depth_limit; ++m) {
        const Int den = pow2(m);
        for (Int j = 1; j < den; j += 2)
            if (auto w = try_point(poly, make_rat(j, den), WitnessSource::DyadicGrid, cfg))
                return w;
    }
    return std::nullopt;
}

CutLevelResult min_cut_level(const GSPolynomial& gamma, const Rat& t0, const Int& p,
                             const Int& tail_count, const KernelConfig& cfg) {
    if (tail_count < 1) throw std::domain_error("min_cut_level requires a positive tail count");
    const Rat exact = gs_eval(gamma, t0, cfg);
    if (exact >= 0)
        throw std::domain_error("min_cut_level requires gs_eval(gamma, t0) < 0");

    // p^0 = 1 is below any admissible relation depth, so the scan starts at 1
    constexpr unsigned long kMaxLevel = 256;
    for (unsigned long k = 1; k <= kMaxLevel; ++k) {
        GSPolynomial cut = gamma;
        cut.terms.push_back(DepthTerm::factored(p, k, tail_count));
        BoundedEval be = gs_eval_bounded(cut, t0, cfg);
        if (be.upper < 0)
            return CutLevelResult{
                k, NegativityWitness{t0, std::move(be.upper), std::move(be.tails),
                                     WitnessSource::QuadraticMinimizer}};
    }
    throw std::logic_error("min_cut_level: no certified level up to the scan cap");
}

}  // namespace towercut
