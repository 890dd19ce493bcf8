#include <doctest.h>

#include "towercut/json_io.hpp"

using namespace towercut;
using nlohmann::json;

TEST_CASE("rationals serialize as decimal string pairs") {
    const json j = rat_to_json(make_rat(-45309, 38212));
    CHECK(j.at("num") == "-45309");
    CHECK(j.at("den") == "38212");
    CHECK(rat_from_json(j) == make_rat(-45309, 38212));
    CHECK(rat_from_json(rat_to_json(Rat(0))) == 0);
    // huge values survive
    const Rat big = make_rat(pow_int(Int(7), 100), pow_int(Int(3), 120));
    CHECK(rat_from_json(rat_to_json(big)) == big);
}

TEST_CASE("depth terms and verdicts round-trip") {
    const auto plain = DepthTerm::plain(2, Int(9553));
    CHECK(depth_term_from_json(depth_term_to_json(plain)) == plain);
    const auto factored = DepthTerm::factored(Int(2), 17, Int(578));
    CHECK(depth_term_from_json(depth_term_to_json(factored)) == factored);

    const ComparisonVerdict v{CompareOutcome::ProvenLess, CompareMethod::DirectedRounding, 256};
    const auto v2 = verdict_from_json(verdict_to_json(v));
    CHECK(v2.outcome == v.outcome);
    CHECK(v2.method == v.method);
    CHECK(v2.precision_bits == v.precision_bits);
}

TEST_CASE("certificates round-trip and replay from their wire form") {
    const Certificate cert = analyze_tower(FieldParams(Int(2), 32, 1, Int(17)));
    const json wire = certificate_to_json(cert);
    const Certificate back = certificate_from_json(wire);
    CHECK(back.verdict == cert.verdict);
    CHECK(back.d == cert.d);
    CHECK(back.r == cert.r);
    CHECK(back.t0 == cert.t0);
    CHECK(back.gamma_value == cert.gamma_value);
    CHECK(back.cut_level_k == cert.cut_level_k);
    CHECK(back.caveats == cert.caveats);
    CHECK(replay_certificate(back));
    // byte determinism of the serialized form
    CHECK(certificate_to_json(back).dump() == wire.dump());
}

TEST_CASE("inconclusive certificates round-trip too") {
    const Certificate cert = analyze_tower(FieldParams(Int(3), 1, 1, Int(2)));
    const Certificate back = certificate_from_json(certificate_to_json(cert));
    CHECK(back.verdict == CertificateVerdict::Inconclusive);
    CHECK_FALSE(back.cut_level_k.has_value());
    CHECK(replay_certificate(back));
}

TEST_CASE("class number results round-trip") {
    const HMinusResult r = relative_class_number(64);
    const HMinusResult back = hminus_from_json(hminus_to_json(r));
    CHECK(back.h_minus == r.h_minus);
    CHECK(back.modulus == r.modulus);
    CHECK(back.w_factor == r.w_factor);
}

TEST_CASE("Shanks records round-trip, annotations included") {
    ShanksRecord r = ShanksRecord::make(Int(17279));
    r.class_group_note = "2-rank 6 (external)";
    const ShanksRecord back = shanks_record_from_json(shanks_record_to_json(r));
    CHECK(back.a == r.a);
    CHECK(back.p == r.p);
    CHECK(back.class_group_note == r.class_group_note);
    // tampered records are rejected
    json bad = shanks_record_to_json(r);
    bad["p"] = "298615688";
    CHECK_THROWS_AS(shanks_record_from_json(bad), std::invalid_argument);
}
