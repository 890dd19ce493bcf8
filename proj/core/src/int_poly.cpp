#include "towercut/int_poly.hpp"

#include <stdexcept>
#include <utility>

namespace towercut::poly {

IntPoly normalize(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool is_zero(const IntPoly& p) { return p.empty(); }

long degree(const IntPoly& p) { return static_cast<long>(p.size()) - 1; }

const Int& leading(const IntPoly& p) {
    if (p.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return p.back();
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    return normalize(std::move(r));
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    return normalize(std::move(r));
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return normalize(std::move(r));
}

IntPoly scale(const IntPoly& a, const Int& c) {
    if (c == 0) return {};
    IntPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

Int content(const IntPoly& a) {
    Int g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
    if (is_zero(b)) throw std::logic_error("polynomial division by zero");
    IntPoly rem = a;
    if (degree(rem) < degree(b)) {
        if (!is_zero(rem)) throw std::logic_error("inexact polynomial division");
        return {};
    }
    IntPoly q(rem.size() - b.size() + 1);
    const Int& lb = leading(b);
    for (long i = degree(rem); i >= degree(b); --i) {
        const size_t ui = static_cast<size_t>(i);
        if (ui >= rem.size() || rem[ui] == 0) continue;
        Int c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rem[ui].get_mpz_t(), lb.get_mpz_t());
        if (r != 0) throw std::logic_error("inexact polynomial division");
        q[ui - b.size() + 1] = c;
        for (size_t j = 0; j < b.size(); ++j) rem[ui - b.size() + 1 + j] -= c * b[j];
    }
    if (!is_zero(normalize(std::move(rem)))) throw std::logic_error("inexact polynomial division");
    return normalize(std::move(q));
}

// Classical exponent: returns lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (is_zero(b)) throw std::logic_error("pseudo-remainder by zero");
    long da = degree(a), db = degree(b);
    if (da < db) return a;
    const Int& lb = leading(b);
    IntPoly r = a;
    long steps = da - db + 1;
    while (!is_zero(r) && degree(r) >= db) {
        Int lead = leading(r);
        IntPoly shifted(static_cast<size_t>(degree(r) - db), 0);
        shifted.insert(shifted.end(), b.begin(), b.end());
        r = sub(scale(r, lb), scale(shifted, lead));
        --steps;
    }
    for (; steps > 0; --steps) r = scale(r, lb);
    return r;
}

Int eval(const IntPoly& p, const Int& x) {
    Int acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int resultant(const IntPoly& a_in, const IntPoly& b_in) {
    IntPoly A = normalize(a_in), B = normalize(b_in);
    if (is_zero(A) || is_zero(B)) return 0;
    int sign = 1;
    if (degree(A) < degree(B)) {
        std::swap(A, B);
        if ((degree(A) % 2) && (degree(B) % 2)) sign = -sign;
    }
    if (degree(B) == 0) {
        Int r = pow_int(B[0], static_cast<unsigned long>(degree(A)));
        return sign > 0 ? r : Int(-r);
    }

    Int ca = content(A), cb = content(B);
    for (auto& c : A) c /= ca;
    for (auto& c : B) c /= cb;
    Int t = pow_int(ca, static_cast<unsigned long>(degree(B))) *
            pow_int(cb, static_cast<unsigned long>(degree(A)));

    Int g = 1, h = 1;
    while (true) {
        long da = degree(A), db = degree(B);
        long delta = da - db;
        if ((da % 2) && (db % 2)) sign = -sign;
        IntPoly R = pseudo_rem(A, B);
        if (is_zero(R)) {
            if (db > 0) return 0;  // common factor of positive degree
            break;
        }
        A = std::move(B);
        Int divisor = g * pow_int(h, static_cast<unsigned long>(delta));
        B.clear();
        B.reserve(R.size());
        for (auto& c : R) {
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
            if (r != 0) throw std::logic_error("subresultant: inexact coefficient division");
            B.push_back(std::move(q));
        }
        B = normalize(std::move(B));
        g = leading(A);
        if (delta == 0) {
            // h unchanged
        } else {
            // h <- g^delta / h^(delta-1), exact
            Int num = pow_int(g, static_cast<unsigned long>(delta));
            Int den = pow_int(h, static_cast<unsigned long>(delta - 1));
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (r != 0) throw std::logic_error("subresultant: inexact h update");
            h = std::move(q);
        }
        if (degree(B) <= 0) {
            if (is_zero(B)) return 0;
            break;
        }
    }

    // here deg B == 0, deg A >= 1
    long da = degree(A);
    Int num = pow_int(B[0], static_cast<unsigned long>(da));
    Int den = pow_int(h, static_cast<unsigned long>(da - 1));
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("subresultant: inexact final division");
    Int res = t * q;
    return sign > 0 ? res : Int(-res);
}

}  // namespace towercut::poly
