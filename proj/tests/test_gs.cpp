#include <doctest.h>

#include <random>

#include "towercut/gs.hpp"

using namespace towercut;

namespace {

GSPolynomial quad(long d, long r) {
    return GSPolynomial(Int(d), {DepthTerm::plain(2, Int(r))});
}

}  // namespace

TEST_CASE("gs_eval fixed values") {
    // 1 - 12t + 31t^2 at t = 6/31 is -5/31
    CHECK(gs_eval(quad(12, 31), make_rat(6, 31)) == make_rat(-5, 31));
    CHECK(gs_eval(quad(12, 31), Rat(0)) == 1);
    CHECK(gs_eval(quad(2, 1), Rat(1)) == 0);
    CHECK(gs_eval(quad(289, 9553), make_rat(289, 19106)) == make_rat(-45309, 38212));
    CHECK_THROWS_AS(gs_eval(quad(2, 1), make_rat(3, 2)), std::domain_error);
}

TEST_CASE("gs_eval(., 0) = 1 for arbitrary polynomials") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<long> d(1, 1000), r(1, 50), depth(2, 9);
    for (int i = 0; i < 200; ++i) {
        std::vector<DepthTerm> terms;
        for (int t = 0; t < 3; ++t)
            terms.push_back(DepthTerm::plain(static_cast<unsigned long>(depth(rng)), Int(r(rng))));
        terms.push_back(DepthTerm::factored(Int(2), 3, Int(r(rng))));
        GSPolynomial poly(Int(d(rng)), std::move(terms));
        CHECK(gs_eval(poly, Rat(0)) == 1);
    }
}

TEST_CASE("gs_eval refuses oversized depths") {
    GSPolynomial poly(Int(1), {DepthTerm::factored(Int(2), 20, Int(1))});
    try {
        gs_eval(poly, make_rat(1, 2));
        FAIL("expected a domain_error");
    } catch (const std::domain_error& err) {
        CHECK(std::string(err.what()).find("gs_eval_bounded") != std::string::npos);
    }
}

TEST_CASE("binary and iterated exponentiation agree") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(1, 9), den(10, 20), depth(2, 12);
    for (int i = 0; i < 100; ++i) {
        const Rat t = make_rat(num(rng), den(rng));
        const unsigned long k = static_cast<unsigned long>(depth(rng));
        Rat iterated = 1;
        for (unsigned long j = 0; j < k; ++j) iterated *= t;
        CHECK(pow_rat(t, k) == iterated);
    }
}

TEST_CASE("gs_eval_bounded equals gs_eval when no oversized terms exist") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<long> d(1, 40), r(1, 40), num(1, 7);
    for (int i = 0; i < 100; ++i) {
        GSPolynomial poly(Int(d(rng)), {DepthTerm::plain(2, Int(r(rng))),
                                        DepthTerm::plain(3, Int(r(rng)))});
        const Rat t = make_rat(num(rng), 8);
        const auto be = gs_eval_bounded(poly, t);
        CHECK(be.upper == gs_eval(poly, t));
        CHECK(be.tails.empty());
    }
}

TEST_CASE("gs_eval_bounded dominates the exact value") {
    // small threshold so the factored terms take the certified path
    KernelConfig tiny;
    tiny.exact_threshold_bits = 3;  // threshold 8
    KernelConfig wide;  // default: same terms evaluated exactly
    std::mt19937 rng(8086);
    std::uniform_int_distribution<long> d(1, 30), r(1, 30), num(1, 7);
    std::uniform_int_distribution<unsigned long> k(4, 8);
    for (int i = 0; i < 60; ++i) {
        GSPolynomial poly(Int(d(rng)), {DepthTerm::plain(2, Int(r(rng))),
                                        DepthTerm::factored(Int(2), k(rng), Int(r(rng)))});
        const Rat t = make_rat(num(rng), 8);
        const auto certified = gs_eval_bounded(poly, t, tiny);
        const Rat exact = gs_eval(poly, t, wide);
        CHECK(certified.upper >= exact);
        CHECK(certified.tails.size() == 1);
        for (const auto& tb : certified.tails) CHECK(tb.proof.proven_less());
    }
}

TEST_CASE("bounded example: tiny tail barely moves a positive value") {
    GSPolynomial poly(Int(1), {DepthTerm::factored(Int(2), 20, Int(1))});
    const auto be = gs_eval_bounded(poly, make_rat(1, 2));
    CHECK(be.exact_part == make_rat(1, 2));
    CHECK(be.upper > make_rat(1, 2));
    CHECK(be.upper <= make_rat(1, 2) + make_rat(Int(1), pow2(20)));
}

TEST_CASE("bounded example: certified negative with an oversized tail") {
    GSPolynomial poly(Int(12), {DepthTerm::plain(2, Int(31)),
                                DepthTerm::factored(Int(2), 2, Int(24))});
    const auto be = gs_eval_bounded(poly, make_rat(6, 31));
    // depth 4 is inside the exact threshold: the whole value is exact
    CHECK(be.tails.empty());
    CHECK(be.upper == make_rat(-5, 31) + Rat(24) * pow_rat(make_rat(6, 31), 4));
    CHECK(be.upper < 0);
}

TEST_CASE("certified bound is non-increasing in the cut level") {
    KernelConfig cfg;
    cfg.exact_threshold_bits = 4;  // threshold 16: k <= 4 exact, k >= 5 certified
    const GSPolynomial gamma = quad(12, 31);
    const Rat t0 = make_rat(6, 31);
    Rat last = 100;
    for (unsigned long k = 1; k <= 9; ++k) {
        GSPolynomial cut = gamma;
        cut.terms.push_back(DepthTerm::factored(Int(2), k, Int(24)));
        const auto be = gs_eval_bounded(cut, t0, cfg);
        CHECK(be.upper <= last);
        last = be.upper;
    }
}

TEST_CASE("find_witness on the worked presentations") {
    auto w = find_witness(quad(12, 31));
    REQUIRE(w.has_value());
    CHECK(w->t0 == make_rat(6, 31));
    CHECK(w->value == make_rat(-5, 31));
    CHECK(w->source == WitnessSource::QuadraticMinimizer);

    w = find_witness(quad(289, 9553));
    REQUIRE(w.has_value());
    CHECK(w->t0 == make_rat(289, 19106));
    CHECK(w->value == make_rat(-45309, 38212));

    // d^2 - 4r = 0: nonnegative on (0,1), nothing to find
    CHECK_FALSE(find_witness(quad(2, 1)).has_value());
    CHECK_FALSE(find_witness(quad(3, 7)).has_value());
}

TEST_CASE("find_witness falls back to the dyadic grid") {
    // 1 - 3t + t^3: no depth-2 weight, so no closed-form candidate; negative
    // at t = 1/2
    GSPolynomial poly(Int(3), {DepthTerm::plain(3, Int(1))});
    const auto w = find_witness(poly);
    REQUIRE(w.has_value());
    CHECK(w->source == WitnessSource::DyadicGrid);
    CHECK(w->t0 == make_rat(1, 2));
    CHECK(w->value == make_rat(-3, 8));
}

TEST_CASE("witnesses are sound") {
    std::mt19937 rng(5551212);
    std::uniform_int_distribution<long> d(1, 60), r(1, 80);
    for (int i = 0; i < 200; ++i) {
        GSPolynomial poly = quad(d(rng), r(rng));
        const auto w = find_witness(poly);
        if (!w) continue;
        CHECK(w->value < 0);
        CHECK(gs_eval(poly, w->t0) <= w->value);
        for (const auto& tb : w->tail_bounds) CHECK(tb.proof.proven_less());
    }
}

TEST_CASE("min_cut_level fixed cases") {
    const GSPolynomial hand = quad(12, 31);
    const Rat t0 = make_rat(6, 31);
    auto res = min_cut_level(hand, t0, Int(2), Int(24));
    CHECK(res.k == 2);
    CHECK(res.witness.value < 0);

    res = min_cut_level(hand, t0, Int(2), Int(1));
    CHECK(res.k == 1);

    const GSPolynomial big = quad(289, 9553);
    res = min_cut_level(big, make_rat(289, 19106), Int(2), Int(578));
    CHECK(res.k == 1);

    CHECK_THROWS_AS(min_cut_level(quad(2, 1), make_rat(1, 2), Int(2), Int(1)),
                    std::domain_error);
}

TEST_CASE("min_cut_level minimality: the previous level fails the same check") {
    const GSPolynomial hand = quad(12, 31);
    const Rat t0 = make_rat(6, 31);
    const auto res = min_cut_level(hand, t0, Int(2), Int(24));
    REQUIRE(res.k >= 2);
    GSPolynomial previous = hand;
    previous.terms.push_back(DepthTerm::factored(Int(2), res.k - 1, Int(24)));
    CHECK(gs_eval_bounded(previous, t0).upper >= 0);
}

TEST_CASE("depth term validation") {
    CHECK_THROWS_AS(DepthTerm::plain(1, Int(3)), std::domain_error);
    CHECK_THROWS_AS(DepthTerm::plain(2, Int(0)), std::domain_error);
    CHECK_THROWS_AS(DepthTerm::factored(Int(4), 2, Int(1)), std::domain_error);
    CHECK(DepthTerm::factored(Int(3), 2, Int(5)).depth_value() == 9);
    CHECK(DepthTerm::factored(Int(2), 0, Int(5)).depth_value() == 1);
    CHECK_THROWS_AS(GSPolynomial(Int(0), {}), std::domain_error);
}
