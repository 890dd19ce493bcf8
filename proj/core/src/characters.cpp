#include "towercut/characters.hpp"

#include <numeric>
#include <stdexcept>

#include "towercut/primes.hpp"

namespace towercut {

namespace detail {
namespace {

unsigned long mul_mod(unsigned long a, unsigned long b, unsigned long m) {
    return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % m);
}

unsigned long pow_mod(unsigned long base, unsigned long exp, unsigned long m) {
    unsigned long r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::vector<unsigned long> prime_factors(unsigned long n) {
    std::vector<unsigned long> fs;
    for (unsigned long q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        fs.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

unsigned long smallest_primitive_root_mod_p2(unsigned long p) {
    const unsigned long p2 = p * p;
    const unsigned long phi = p * (p - 1);
    const auto qs = prime_factors(phi);
    for (unsigned long g = 2; g < p2; ++g) {
        bool ok = true;
        for (unsigned long q : qs)
            if (pow_mod(g, phi / q, p2) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");  // unreachable for odd primes
}

}  // namespace

std::shared_ptr<const UnitGroup> UnitGroup::make(unsigned long modulus) {
    auto g = std::make_shared<UnitGroup>();
    // factor as p^s
    unsigned long p = 0;
    for (unsigned long q = 2; q * q <= modulus; ++q)
        if (modulus % q == 0) {
            p = q;
            break;
        }
    if (p == 0) p = modulus;
    unsigned long m = modulus, s = 0;
    while (m % p == 0) {
        m /= p;
        ++s;
    }
    if (m != 1 || s == 0)
        throw std::domain_error("modulus must be a prime power");
    g->p = p;
    g->s = s;
    g->modulus = modulus;
    g->phi = euler_phi(modulus);

    if (p == 2) {
        if (s < 2) return g;  // (Z/2)^* is trivial; nothing to tabulate
        g->five_order = modulus / 4;  // 2^(s-2)
        g->dlog.assign(modulus, 0);
        g->sign_exponent.assign(modulus, 0);
        unsigned long t = 1;
        for (unsigned long i = 0; i < g->five_order; ++i) {
            g->dlog[t] = i;
            g->sign_exponent[t] = 0;
            g->dlog[modulus - t] = i;
            g->sign_exponent[modulus - t] = 1;
            t = mul_mod(t, 5, modulus);
        }
        return g;
    }

    g->primitive_root = smallest_primitive_root_mod_p2(p);
    g->dlog.assign(modulus, 0);
    unsigned long t = 1;
    for (unsigned long i = 0; i < g->phi; ++i) {
        g->dlog[t] = i;
        t = mul_mod(t, g->primitive_root % modulus, modulus);
    }
    if (t != 1) throw std::logic_error("primitive root does not generate the unit group");
    return g;
}

}  // namespace detail

namespace {

// conductor of a character of exact order n mod p^s (odd p): p^(alpha+1) with
// p^alpha the p-part of n
unsigned long conductor_odd_p(unsigned long p, unsigned long n) {
    unsigned long f = p;
    while (n % p == 0) {
        n /= p;
        f *= p;
    }
    return f;
}

}  // namespace

DirichletCharacter DirichletCharacter::on_primitive_root(
    std::shared_ptr<const detail::UnitGroup> group, unsigned long a) {
    DirichletCharacter chi;
    const unsigned long N = group->phi;
    chi.order_ = N / std::gcd(a % N, N);  // gcd(0, N) = N, so the trivial character gets order 1
    chi.conductor_ = chi.order_ == 1 ? 1 : conductor_odd_p(group->p, chi.order_);
    chi.images_ = {a % N};
    chi.group_ = std::move(group);
    return chi;
}

DirichletCharacter DirichletCharacter::on_two_power(
    std::shared_ptr<const detail::UnitGroup> group, unsigned long eps, unsigned long j) {
    DirichletCharacter chi;
    const unsigned long M = group->five_order;
    j = M ? j % M : 0;
    eps %= 2;
    const unsigned long mj = j ? M / std::gcd(j, M) : 1;  // order of the image of 5
    unsigned long order = mj;
    if (eps) order = std::max<unsigned long>(2, mj);
    if (order == 0) order = 1;
    chi.order_ = std::max<unsigned long>(order, 1);
    if (eps == 0 && j == 0)
        chi.conductor_ = 1;
    else if (j == 0)
        chi.conductor_ = 4;
    else
        chi.conductor_ = 4 * mj;
    chi.images_ = {eps, j};
    chi.group_ = std::move(group);
    return chi;
}

bool DirichletCharacter::is_odd() const {
    if (group_->p == 2) return !images_.empty() && images_[0] == 1;
    return images_[0] % 2 == 1;
}

std::optional<unsigned long> DirichletCharacter::value_exponent(unsigned long x) const {
    const auto& g = *group_;
    x %= g.modulus;
    if (x == 0 || std::gcd(x, static_cast<unsigned long>(g.p)) != 1) return std::nullopt;
    const unsigned long n = order_;
    if (g.p == 2) {
        const unsigned long eps = images_[0], j = images_[1];
        const unsigned long ex = g.sign_exponent[x];
        const unsigned long ix = g.dlog[x];
        unsigned long e = 0;
        if (eps && ex) e = n / 2;
        if (j) {
            const unsigned long M = g.five_order;
            const unsigned long gj = std::gcd(j, M);
            const unsigned long mj = M / gj;        // order of chi(5)
            const unsigned long jp = j / gj;        // coprime to mj
            e = (e + (n / mj) * ((jp * ix) % mj)) % n;
        }
        return e % n;
    }
    const unsigned long N = g.phi;
    const unsigned long a = images_[0];
    if (a == 0) return 0ul;
    const unsigned long G = std::gcd(a, N);
    const unsigned long ap = a / G;  // coprime to n = N/G
    return detail::mul_mod(ap % n, g.dlog[x] % n, n);
}

std::vector<CharacterOrbit> enumerate_odd_characters(unsigned long modulus) {
    if (modulus <= 2) return {};
    auto group = detail::UnitGroup::make(modulus);
    std::vector<CharacterOrbit> orbits;

    if (group->p == 2) {
        const unsigned long M = group->five_order;
        // one orbit per 2-adic valuation of j, plus j = 0
        orbits.push_back({DirichletCharacter::on_two_power(group, 1, 0), 1});
        for (unsigned long rep = 1; rep < M; rep *= 2) {
            auto chi = DirichletCharacter::on_two_power(group, 1, rep);
            orbits.push_back({chi, euler_phi(chi.order())});
        }
        return orbits;
    }

    const unsigned long N = group->phi;
    std::vector<bool> seen(N, false);
    for (unsigned long a = 1; a < N; a += 2) {
        if (seen[a]) continue;
        auto chi = DirichletCharacter::on_primitive_root(group, a);
        const unsigned long n = chi.order();
        unsigned long size = 0;
        for (unsigned long u = 1; u <= n; ++u) {
            if (std::gcd(u, n) != 1) continue;
            seen[detail::mul_mod(a, u, N)] = true;
            ++size;
        }
        if (size != euler_phi(n))
            throw std::logic_error("character orbit size mismatch");
        orbits.push_back({std::move(chi), size});
    }
    return orbits;
}

unsigned long conductor(const DirichletCharacter& chi) { return chi.conductor(); }

CycloElement b1_chi(const DirichletCharacter& chi) {
    if (!chi.is_odd()) throw std::domain_error("b1_chi requires an odd character");
    const unsigned long f = chi.conductor();
    const unsigned long n = chi.order();
    // accumulate sum chi(a)*a in the exponent basis of mu_n, reduce once
    std::vector<Rat> acc(n, Rat(0));
    for (unsigned long a = 1; a < f; ++a) {
        if (a % chi.p() == 0) continue;
        const auto e = chi.value_exponent(a);
        if (!e) continue;
        acc[*e] += static_cast<long>(a);
    }
    CycloElement sum = CycloElement::from_polynomial(n, std::move(acc));
    CycloElement b1 = sum.scaled(make_rat(1, static_cast<long>(f)));
    if (b1.is_zero())
        throw std::logic_error("B_{1,chi} vanished for an odd character");  // classical nonvanishing
    return b1;
}

}  // namespace towercut
