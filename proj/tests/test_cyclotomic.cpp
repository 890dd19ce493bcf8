#include <doctest.h>

#include <complex>
#include <numeric>
#include <random>

#include "towercut/cyclotomic.hpp"

using namespace towercut;

namespace {

CycloElement random_element(std::mt19937& rng, unsigned long n, int height) {
    std::uniform_int_distribution<int> coeff(-height, height);
    std::vector<Rat> v(euler_phi(n));
    for (auto& c : v) c = coeff(rng);
    return CycloElement(n, std::move(v));
}

std::complex<double> eval_at_root(const CycloElement& a, unsigned long k) {
    const double two_pi = 6.283185307179586476925;
    const unsigned long n = a.level();
    const std::complex<double> zeta = std::polar(1.0, two_pi * double(k) / double(n));
    std::complex<double> acc = 0, power = 1;
    for (const auto& c : a.coeffs()) {
        acc += c.get_d() * power;
        power *= zeta;
    }
    return acc;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == IntPoly{Int(-1), Int(1)});
    CHECK(cyclotomic_poly(2) == IntPoly{Int(1), Int(1)});
    CHECK(cyclotomic_poly(3) == IntPoly{Int(1), Int(1), Int(1)});
    CHECK(cyclotomic_poly(4) == IntPoly{Int(1), Int(0), Int(1)});
    CHECK(cyclotomic_poly(6) == IntPoly{Int(1), Int(-1), Int(1)});
    CHECK(cyclotomic_poly(12) == IntPoly{Int(1), Int(0), Int(-1), Int(0), Int(1)});
    // first level with a coefficient outside {-1, 0, 1}
    CHECK(cyclotomic_poly(105)[7] == -2);
    for (unsigned long n : {8ul, 9ul, 27ul, 64ul, 100ul, 198ul})
        CHECK(cyclotomic_poly(n).size() == euler_phi(n) + 1);
}

TEST_CASE("products reduce mod the cyclotomic polynomial") {
    // zeta_4^2 = -1
    const auto i4 = CycloElement::zeta_power(4, 1);
    CHECK(cyclo_mul(i4, i4) == CycloElement::from_rational(4, -1));
    // zeta_3^2 = -1 - zeta_3
    const auto z3 = CycloElement::zeta_power(3, 1);
    CHECK(cyclo_mul(z3, z3) == CycloElement(3, {Rat(-1), Rat(-1)}));
    // level 1 is the rational subfield
    const auto a = CycloElement::from_rational(1, make_rat(3, 2));
    const auto b = CycloElement::from_rational(1, make_rat(4, 3));
    CHECK(cyclo_mul(a, b) == CycloElement::from_rational(1, Rat(2)));
    CHECK_THROWS_AS(cyclo_mul(i4, z3), std::invalid_argument);
}

TEST_CASE("zeta powers wrap") {
    for (unsigned long n : {3ul, 4ul, 5ul, 12ul}) {
        CHECK(CycloElement::zeta_power(n, n) == CycloElement::from_rational(n, 1));
        CHECK(CycloElement::zeta_power(n, n + 2) == CycloElement::zeta_power(n, 2));
    }
}

TEST_CASE("norms: fixed values") {
    // N(1 + i) = 2
    CHECK(cyclo_norm(CycloElement(4, {Rat(1), Rat(1)})) == 2);
    // norm of 1 is 1 at any level
    for (unsigned long n : {1ul, 3ul, 8ul, 20ul})
        CHECK(cyclo_norm(CycloElement::from_rational(n, 1)) == 1);
    // constant c has norm c^phi(n)
    CHECK(cyclo_norm(CycloElement::from_rational(3, make_rat(-1, 3))) == make_rat(1, 9));
    CHECK(cyclo_norm(CycloElement::from_rational(1, make_rat(7, 5))) == make_rat(7, 5));
    CHECK(cyclo_norm(CycloElement::zero(12)) == 0);
}

TEST_CASE("norm of a constant is c^phi(n)") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 9);
    for (unsigned long n : {2ul, 5ul, 9ul, 16ul, 21ul}) {
        for (int i = 0; i < 20; ++i) {
            const Rat c = make_rat(num(rng), den(rng));
            if (c == 0) continue;
            CHECK(cyclo_norm(CycloElement::from_rational(n, c)) ==
                  pow_rat(c, euler_phi(n)));
        }
    }
}

TEST_CASE("norm is multiplicative") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<unsigned long> level(2, 20);
    for (int i = 0; i < 250; ++i) {
        const unsigned long n = level(rng);
        const auto a = random_element(rng, n, 10);
        const auto b = random_element(rng, n, 10);
        CHECK(cyclo_norm(cyclo_mul(a, b)) == cyclo_norm(a) * cyclo_norm(b));
    }
}

TEST_CASE("norm agrees with the complex product over primitive roots") {
    std::mt19937 rng(31337);
    for (unsigned long n = 1; n <= 12; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto a = random_element(rng, n, 6);
            std::complex<double> prod = 1;
            for (unsigned long k = 1; k <= n; ++k)
                if (std::gcd(k, n) == 1) prod *= eval_at_root(a, k);
            const double exact = cyclo_norm(a).get_d();
            const double scale = std::max(1.0, std::abs(exact));
            CHECK(std::abs(prod.real() - exact) / scale < 1e-6);
            CHECK(std::abs(prod.imag()) / scale < 1e-6);
        }
    }
}

TEST_CASE("coefficient vector length is validated") {
    CHECK_THROWS_AS(CycloElement(4, {Rat(1)}), std::invalid_argument);
    CHECK_THROWS_AS(CycloElement(0, {}), std::domain_error);
}
