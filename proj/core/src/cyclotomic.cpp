#include "towercut/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace towercut {

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// x^k - 1
IntPoly xk_minus_1(unsigned long k) {
    IntPoly p(k + 1);
    p[0] = -1;
    p[k] = 1;
    return p;
}

int moebius(unsigned long n) {
    int mu = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

IntPoly compute_cyclotomic(unsigned long n) {
    if (n == 0) throw std::domain_error("cyclotomic level must be positive");
    // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
    IntPoly num = {Int(1)}, den = {Int(1)};
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d) continue;
        switch (moebius(n / d)) {
            case 1: num = poly::mul(num, xk_minus_1(d)); break;
            case -1: den = poly::mul(den, xk_minus_1(d)); break;
            default: break;
        }
    }
    return poly::divide_exact(num, den);
}

const IntPoly& cached_cyclotomic(unsigned long n) {
    static std::mutex mu;
    static std::map<unsigned long, IntPoly> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic(n)).first;
    return it->second;
}

// Reduce a rational-coefficient polynomial mod the monic integer polynomial m.
std::vector<Rat> reduce_mod(std::vector<Rat> v, const IntPoly& m) {
    const size_t deg = m.size() - 1;
    while (v.size() > deg) {
        Rat lead = std::move(v.back());
        v.pop_back();
        if (lead == 0) continue;
        const size_t off = v.size() - deg;
        for (size_t j = 0; j < deg; ++j) v[off + j] -= lead * Rat(m[j]);
    }
    v.resize(deg, Rat(0));
    return v;
}

}  // namespace

const IntPoly& cyclotomic_poly(unsigned long n) { return cached_cyclotomic(n); }

CycloElement::CycloElement(unsigned long level, std::vector<Rat> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
    if (level_ == 0) throw std::domain_error("cyclotomic level must be positive");
    if (coeffs_.size() != euler_phi(level_))
        throw std::invalid_argument("coefficient vector length must equal phi(level)");
}

CycloElement CycloElement::zero(unsigned long level) {
    return CycloElement(level, std::vector<Rat>(euler_phi(level), Rat(0)));
}

CycloElement CycloElement::from_rational(unsigned long level, const Rat& value) {
    auto e = zero(level);
    e.coeffs_[0] = value;
    return e;
}

CycloElement CycloElement::zeta_power(unsigned long level, unsigned long e) {
    e %= level;
    std::vector<Rat> v(e + 1, Rat(0));
    v[e] = 1;
    return CycloElement(level, reduce_mod(std::move(v), cyclotomic_poly(level)));
}

CycloElement CycloElement::from_polynomial(unsigned long level, std::vector<Rat> coeffs) {
    return CycloElement(level, reduce_mod(std::move(coeffs), cyclotomic_poly(level)));
}

bool CycloElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycloElement::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

CycloElement CycloElement::operator+(const CycloElement& o) const {
    if (level_ != o.level_) throw std::invalid_argument("cyclotomic level mismatch");
    auto r = coeffs_;
    for (size_t i = 0; i < r.size(); ++i) r[i] += o.coeffs_[i];
    return CycloElement(level_, std::move(r));
}

CycloElement CycloElement::operator-(const CycloElement& o) const {
    if (level_ != o.level_) throw std::invalid_argument("cyclotomic level mismatch");
    auto r = coeffs_;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= o.coeffs_[i];
    return CycloElement(level_, std::move(r));
}

CycloElement CycloElement::scaled(const Rat& c) const {
    auto r = coeffs_;
    for (auto& x : r) x *= c;
    return CycloElement(level_, std::move(r));
}

CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b) {
    if (a.level() != b.level()) throw std::invalid_argument("cyclotomic level mismatch");
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<Rat> prod(ca.size() + cb.size() - 1, Rat(0));
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (size_t j = 0; j < cb.size(); ++j) {
            if (cb[j] == 0) continue;
            prod[i + j] += ca[i] * cb[j];
        }
    }
    return CycloElement(a.level(), reduce_mod(std::move(prod), cyclotomic_poly(a.level())));
}

Rat cyclo_norm(const CycloElement& a) {
    if (a.is_zero()) return Rat(0);
    const unsigned long phi = euler_phi(a.level());
    // clear denominators: a = B / D with B integral
    Int d = 1;
    for (const auto& c : a.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    IntPoly b;
    b.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) {
        Rat scaled = c * Rat(d);
        b.push_back(scaled.get_num());
    }
    b = poly::normalize(std::move(b));
    Int res = poly::resultant(cyclotomic_poly(a.level()), b);
    return make_rat(res, pow_int(d, phi));
}

}  // namespace towercut
