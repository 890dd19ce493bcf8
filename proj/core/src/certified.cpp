#include "towercut/certified.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace towercut {

namespace detail {
namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Directed bounds on 2*atanh(zn/zd) at the given scale, for 0 <= zn/zd <= 1/3.
// Term recursion runs in scaled integers, lower sums floored, upper sums
// ceiled; the geometric tail (ratio z^2 <= 1/9, so factor 9/8) rounds up to
// the constant 9 once the scaled term drops to 4 or below.
void atanh_series(const Int& zn, const Int& zd, unsigned long bits, Int& lo, Int& up) {
    lo = 0;
    up = 0;
    if (zn == 0) return;
    const Int scale = pow2(bits);
    const Int zn2 = zn * zn, zd2 = zd * zd;
    Int tlo = floor_div(zn * scale, zd);
    Int tup = ceil_div(zn * scale, zd);
    for (unsigned long j = 0;; ++j) {
        const Int odd = 2 * j + 1;
        lo += floor_div(2 * tlo, odd);
        up += ceil_div(2 * tup, odd);
        if (tup <= 4) {
            up += 9;
            return;
        }
        tlo = floor_div(tlo * zn2, zd2);
        tup = ceil_div(tup * zn2, zd2);
    }
}

FixedBounds ln2_bounds(unsigned long bits) {
    static std::mutex mu;
    static std::map<unsigned long, FixedBounds> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bits);
    if (it == cache.end()) {
        FixedBounds b{0, 0, bits};
        atanh_series(Int(1), Int(3), bits, b.lo, b.up);  // ln 2 = 2 atanh(1/3)
        it = cache.emplace(bits, std::move(b)).first;
    }
    return it->second;
}

}  // namespace

FixedBounds ln_bounds(const Rat& r, unsigned long bits) {
    if (r < 1) throw std::domain_error("ln_bounds requires r >= 1");
    const Int& u = r.get_num();
    const Int& v = r.get_den();
    // largest k with 2^k <= r, so x = r / 2^k lies in [1, 2)
    long k = static_cast<long>(mpz_sizeinbase(u.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 2));
    if (k < 0) k = 0;
    const auto shifted = [&v](long e) {
        Int r;
        mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(e));
        return r;
    };
    while (k > 0 && u < shifted(k)) --k;
    while (u >= shifted(k + 1)) ++k;

    const unsigned long guard = 32;
    const unsigned long wide = bits + guard;
    const Int vk = shifted(k);
    // z = (x-1)/(x+1) = (u - v 2^k)/(u + v 2^k), canonical via Rat
    const Rat z = make_rat(u - vk, u + vk);

    Int slo, sup;
    atanh_series(z.get_num(), z.get_den(), wide, slo, sup);
    if (k > 0) {
        const FixedBounds l2 = ln2_bounds(wide);
        slo += k * l2.lo;
        sup += k * l2.up;
    }
    return FixedBounds{floor_div(slo, pow2(guard)), ceil_div(sup, pow2(guard)), bits};
}

}  // namespace detail

namespace {

// One directed-rounding attempt at a fixed precision.
std::optional<CompareOutcome> try_compare_at(const Rat& q, const Int& exponent, const Rat& bound,
                                             unsigned long bits) {
    const detail::FixedBounds lq = detail::ln_bounds(1 / q, bits);
    const detail::FixedBounds lb = detail::ln_bounds(1 / bound, bits);
    if (exponent * lq.lo > lb.up) return CompareOutcome::ProvenLess;
    if (exponent * lq.up < lb.lo) return CompareOutcome::ProvenGreaterOrEqual;
    return std::nullopt;
}

std::optional<ComparisonVerdict> pow_compare_impl(const Rat& q, const Int& exponent,
                                                  const Rat& bound, const KernelConfig& cfg,
                                                  unsigned long precision_cap_bits) {
    if (q <= 0 || q >= 1) throw std::domain_error("certified_pow_compare requires 0 < q < 1");
    if (bound <= 0) throw std::domain_error("certified_pow_compare requires bound > 0");
    if (exponent < 1) throw std::domain_error("certified_pow_compare requires exponent >= 1");

    // q^E < 1, so any bound >= 1 is beaten outright.
    if (bound >= 1)
        return ComparisonVerdict{CompareOutcome::ProvenLess, CompareMethod::ExactRational, 0};

    if (exponent <= cfg.exact_threshold()) {
        const Rat value = pow_rat(q, exponent.get_ui());
        return ComparisonVerdict{value < bound ? CompareOutcome::ProvenLess
                                               : CompareOutcome::ProvenGreaterOrEqual,
                                 CompareMethod::ExactRational, 0};
    }

    // Exact equality q^E = bound would stall the precision ladder. It needs
    // den(bound) = den(q)^E, so den(bound) must have at least E+1 bits; test
    // outright when that is even possible.
    const Int& qn = q.get_num();
    const Int& qd = q.get_den();
    const Int& bn = bound.get_num();
    const Int& bd = bound.get_den();
    if (Int(mpz_sizeinbase(bd.get_mpz_t(), 2)) > exponent) {
        const unsigned long e = exponent.get_ui();
        if (pow_int(qd, e) == bd && pow_int(qn, e) == bn)
            return ComparisonVerdict{CompareOutcome::ProvenGreaterOrEqual,
                                     CompareMethod::ExactRational, 0};
    }

    for (unsigned long bits = cfg.start_precision_bits; bits <= precision_cap_bits; bits *= 2) {
        if (auto outcome = try_compare_at(q, exponent, bound, bits))
            return ComparisonVerdict{*outcome, CompareMethod::DirectedRounding, bits};
    }
    return std::nullopt;
}

}  // namespace

ComparisonVerdict certified_pow_compare(const Rat& q, const Int& exponent, const Rat& bound,
                                        const KernelConfig& cfg) {
    auto v = pow_compare_impl(q, exponent, bound, cfg, cfg.max_precision_bits);
    if (!v)
        throw std::logic_error("certified_pow_compare: inconclusive at max precision; "
                               "raise KernelConfig::max_precision_bits");
    return *v;
}

std::optional<ComparisonVerdict> certified_pow_compare_capped(const Rat& q, const Int& exponent,
                                                              const Rat& bound,
                                                              const KernelConfig& cfg,
                                                              unsigned long precision_cap_bits) {
    return pow_compare_impl(q, exponent, bound, cfg, precision_cap_bits);
}

}  // namespace towercut
