#include "towercut/class_number.hpp"

#include <stdexcept>

#include "towercut/determinant.hpp"
#include "towercut/parallel.hpp"
#include "towercut/primes.hpp"

namespace towercut {

Int bareiss_determinant(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw std::logic_error("Bareiss: inexact division");
                m[i][j] = std::move(q);
            }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

namespace {

struct PrimePower {
    unsigned long p;
    unsigned long s;
};

PrimePower factor_prime_power(unsigned long modulus) {
    if (modulus < 2) throw std::domain_error("modulus must be a prime power > 2");
    unsigned long p = modulus;
    for (unsigned long q = 2; q * q <= modulus; ++q)
        if (modulus % q == 0) {
            p = q;
            break;
        }
    unsigned long m = modulus, s = 0;
    while (m % p == 0) {
        m /= p;
        ++s;
    }
    if (m != 1) throw std::domain_error("modulus must be a prime power");
    return {p, s};
}

}  // namespace

HMinusResult relative_class_number(unsigned long modulus, unsigned threads) {
    const PrimePower pp = factor_prime_power(modulus);
    if (modulus <= 2)
        throw std::domain_error("relative class number needs modulus > 2");

    const auto orbits = enumerate_odd_characters(modulus);
    unsigned long covered = 0;
    for (const auto& o : orbits) covered += o.orbit_size;
    if (covered != euler_phi(modulus) / 2)
        throw std::logic_error("odd-character orbits do not cover phi(m)/2 characters");

    std::vector<Rat> norms(orbits.size());
    parallel_for(orbits.size(), threads, [&](std::size_t i) {
        const CycloElement b1 = b1_chi(orbits[i].representative);
        norms[i] = cyclo_norm(b1.scaled(make_rat(-1, 2)));
    });

    Rat product = 1;
    for (const auto& n : norms) product *= n;

    const unsigned long w = pp.p == 2 ? modulus : 2 * modulus;
    Rat h = Rat(static_cast<long>(w)) * product;  // Q = 1 for prime powers
    if (!is_integer(h) || h < 1)
        throw std::logic_error("relative class number did not clear to a positive integer");

    HMinusResult out;
    out.modulus = modulus;
    out.h_minus = h.get_num();
    out.orbit_count = static_cast<unsigned long>(orbits.size());
    out.q_factor = 1;
    out.w_factor = w;
    return out;
}

Int maillet_hminus(unsigned long p) {
    if (p < 3 || !is_prime(Int(p))) throw std::domain_error("maillet_hminus needs an odd prime");
    const unsigned long n = (p - 1) / 2;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    for (unsigned long b = 1; b <= n; ++b) {
        // b^{-1} mod p
        Int inv;
        Int bb(static_cast<long>(b)), pz(static_cast<long>(p));
        if (mpz_invert(inv.get_mpz_t(), bb.get_mpz_t(), pz.get_mpz_t()) == 0)
            throw std::logic_error("unit has no inverse mod p");
        const unsigned long binv = inv.get_ui();
        for (unsigned long a = 1; a <= n; ++a)
            m[a - 1][b - 1] = static_cast<long>((a * binv) % p);
    }
    Int det = bareiss_determinant(std::move(m));
    Int adet = abs(det);
    Int denom = pow_int(Int(static_cast<long>(p)), (p - 3) / 2);
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), adet.get_mpz_t(), denom.get_mpz_t());
    if (rem != 0)
        throw std::logic_error("Maillet determinant not divisible by the expected prime power");
    return q;
}

FieldParams cyclotomic_tower_params(const Int& p, unsigned long s, const Int& h) {
    if (p < 2 || !is_prime(p)) throw std::domain_error("p must be prime");
    if (s < 1 || (p == 2 && s < 2))
        throw std::domain_error("modulus p^s must exceed 2");
    if (h < 1) throw std::domain_error("class number must be positive");
    const unsigned long pu = p.get_ui();
    unsigned long ps = 1;
    for (unsigned long i = 0; i < s; ++i) ps *= pu;
    return FieldParams(p, euler_phi(ps), 1, h, 0, true, true);
}

}  // namespace towercut
