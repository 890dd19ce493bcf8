#include <doctest.h>

#include <random>

#include "towercut/determinant.hpp"
#include "towercut/int_poly.hpp"

using namespace towercut;

namespace {

// Independent oracle: resultant as the determinant of the Sylvester matrix,
// evaluated by fraction-free elimination. Shares nothing with the
// pseudo-remainder path under test.
Int sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    const long m = poly::degree(f), n = poly::degree(g);
    if (m < 0 || n < 0) return 0;
    if (m == 0 && n == 0) return 1;
    const std::size_t dim = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Int>> mat(dim, std::vector<Int>(dim, Int(0)));
    for (long row = 0; row < n; ++row)
        for (long j = 0; j <= m; ++j) mat[row][row + j] = f[static_cast<std::size_t>(m - j)];
    for (long row = 0; row < m; ++row)
        for (long j = 0; j <= n; ++j) mat[n + row][row + j] = g[static_cast<std::size_t>(n - j)];
    return bareiss_determinant(std::move(mat));
}

IntPoly random_poly(std::mt19937& rng, int max_degree, int height) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-height, height);
    IntPoly p(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : p) c = coeff(rng);
    while (!p.empty() && p.back() == 0) p.pop_back();
    if (p.empty()) p = {Int(1)};
    return p;
}

}  // namespace

TEST_CASE("resultant matches the Sylvester determinant on random pairs") {
    std::mt19937 rng(20240611);
    for (int i = 0; i < 400; ++i) {
        const IntPoly f = random_poly(rng, 6, 9);
        const IntPoly g = random_poly(rng, 6, 9);
        CAPTURE(i);
        CHECK(poly::resultant(f, g) == sylvester_resultant(f, g));
    }
}

TEST_CASE("resultant of polynomials with a common root vanishes") {
    std::mt19937 rng(7);
    const IntPoly common = {Int(-3), Int(1)};  // x - 3
    for (int i = 0; i < 50; ++i) {
        const IntPoly f = poly::mul(common, random_poly(rng, 4, 5));
        const IntPoly g = poly::mul(common, random_poly(rng, 4, 5));
        CHECK(poly::resultant(f, g) == 0);
    }
}

TEST_CASE("resultant basics") {
    const IntPoly x2p1 = {Int(1), Int(0), Int(1)};      // x^2 + 1
    const IntPoly xm1 = {Int(-1), Int(1)};              // x - 1
    CHECK(poly::resultant(x2p1, xm1) == 2);             // value of x^2+1 at 1
    CHECK(poly::resultant(xm1, x2p1) == 2);
    CHECK(poly::resultant(x2p1, {Int(5)}) == 25);       // constant: c^deg
    CHECK(poly::resultant({}, x2p1) == 0);
    CHECK(poly::resultant(x2p1, {}) == 0);
}

TEST_CASE("resultant algebra: multiplicativity and swap symmetry") {
    std::mt19937 rng(60601);
    for (int i = 0; i < 100; ++i) {
        const IntPoly f = random_poly(rng, 4, 6);
        const IntPoly g = random_poly(rng, 4, 6);
        const IntPoly h = random_poly(rng, 4, 6);
        // Res(fg, h) = Res(f, h) Res(g, h)
        CHECK(poly::resultant(poly::mul(f, g), h) ==
              poly::resultant(f, h) * poly::resultant(g, h));
        // Res(f, g) = (-1)^(deg f * deg g) Res(g, f)
        const Int swapped = poly::resultant(g, f);
        const bool flip = (poly::degree(f) % 2) && (poly::degree(g) % 2);
        CHECK(poly::resultant(f, g) == (flip ? Int(-swapped) : swapped));
    }
}

TEST_CASE("resultant survives coefficient blowup") {
    // dense high-degree pair with 40-bit coefficients; cross-check the oracle
    std::mt19937 rng(171717);
    std::uniform_int_distribution<long long> big(-(1ll << 40), 1ll << 40);
    IntPoly f(31), g(29);
    for (auto& c : f) c = Int(static_cast<long>(big(rng)));
    for (auto& c : g) c = Int(static_cast<long>(big(rng)));
    f.back() = 1;
    g.back() = 1;
    CHECK(poly::resultant(f, g) == sylvester_resultant(f, g));
}

TEST_CASE("exact division and multiplication roundtrip") {
    std::mt19937 rng(99);
    for (int i = 0; i < 100; ++i) {
        const IntPoly a = random_poly(rng, 5, 8);
        const IntPoly b = random_poly(rng, 4, 8);
        CHECK(poly::divide_exact(poly::mul(a, b), b) == a);
    }
    CHECK_THROWS_AS(poly::divide_exact({Int(1), Int(1)}, {Int(0), Int(2)}),
                    std::logic_error);
}

TEST_CASE("pseudo remainder identity") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 100; ++i) {
        const IntPoly a = random_poly(rng, 6, 9);
        const IntPoly b = random_poly(rng, 3, 9);
        if (poly::degree(a) < poly::degree(b)) continue;
        const IntPoly r = poly::pseudo_rem(a, b);
        CHECK(poly::degree(r) < poly::degree(b));
        // lc(b)^(da-db+1) * a - r must be divisible by b
        const Int lead = pow_int(poly::leading(b),
                                 static_cast<unsigned long>(poly::degree(a) - poly::degree(b) + 1));
        const IntPoly lhs = poly::sub(poly::scale(a, lead), r);
        CHECK_NOTHROW(poly::divide_exact(lhs, b));
    }
}

TEST_CASE("evaluation") {
    const IntPoly p = {Int(1), Int(-2), Int(3)};  // 3x^2 - 2x + 1
    CHECK(poly::eval(p, Int(0)) == 1);
    CHECK(poly::eval(p, Int(2)) == 9);
    CHECK(poly::eval(p, Int(-1)) == 6);
}
