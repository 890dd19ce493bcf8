#include "towercut/json_io.hpp"

#include <stdexcept>

namespace towercut {

using nlohmann::json;

nlohmann::json rat_to_json(const Rat& q) {
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rat rat_from_json(const json& j) {
    return make_rat(parse_int(j.at("num").get<std::string>()),
                    parse_int(j.at("den").get<std::string>()));
}

namespace {

std::string int_str(const Int& n) { return n.get_str(); }

const char* outcome_name(CompareOutcome o) {
    return o == CompareOutcome::ProvenLess ? "ProvenLess" : "ProvenGreaterOrEqual";
}

const char* method_name(CompareMethod m) {
    return m == CompareMethod::ExactRational ? "ExactRational" : "DirectedRounding";
}

}  // namespace

const char* certificate_verdict_name(CertificateVerdict v) {
    switch (v) {
        case CertificateVerdict::InfiniteByCutting: return "InfiniteByCutting";
        case CertificateVerdict::InfiniteTowerAlready: return "InfiniteTowerAlready";
        case CertificateVerdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

const char* witness_source_name(WitnessSource s) {
    return s == WitnessSource::QuadraticMinimizer ? "QuadraticMinimizer" : "DyadicGrid";
}

json verdict_to_json(const ComparisonVerdict& v) {
    return json{{"outcome", outcome_name(v.outcome)},
                {"method", method_name(v.method)},
                {"precisionBitsUsed", v.precision_bits}};
}

ComparisonVerdict verdict_from_json(const json& j) {
    ComparisonVerdict v{};
    const std::string outcome = j.at("outcome").get<std::string>();
    if (outcome == "ProvenLess")
        v.outcome = CompareOutcome::ProvenLess;
    else if (outcome == "ProvenGreaterOrEqual")
        v.outcome = CompareOutcome::ProvenGreaterOrEqual;
    else
        throw std::invalid_argument("unknown comparison outcome: " + outcome);
    const std::string method = j.at("method").get<std::string>();
    if (method == "ExactRational")
        v.method = CompareMethod::ExactRational;
    else if (method == "DirectedRounding")
        v.method = CompareMethod::DirectedRounding;
    else
        throw std::invalid_argument("unknown comparison method: " + method);
    v.precision_bits = j.at("precisionBitsUsed").get<unsigned long>();
    return v;
}

json depth_term_to_json(const DepthTerm& t) {
    if (t.is_factored())
        return json{{"kind", "factored"},
                    {"base", int_str(t.base())},
                    {"exponent", t.exponent()},
                    {"count", int_str(t.count())}};
    return json{{"kind", "plain"}, {"depth", t.plain_depth()}, {"count", int_str(t.count())}};
}

DepthTerm depth_term_from_json(const json& j) {
    const Int count = parse_int(j.at("count").get<std::string>());
    if (j.at("kind").get<std::string>() == "factored")
        return DepthTerm::factored(parse_int(j.at("base").get<std::string>()),
                                   j.at("exponent").get<unsigned long>(), count);
    return DepthTerm::plain(j.at("depth").get<unsigned long>(), count);
}

json tail_bound_to_json(const TailBound& t) {
    return json{{"term", depth_term_to_json(t.term)},
                {"bound", rat_to_json(t.bound)},
                {"verdict", verdict_to_json(t.proof)}};
}

TailBound tail_bound_from_json(const json& j) {
    return TailBound{depth_term_from_json(j.at("term")), rat_from_json(j.at("bound")),
                     verdict_from_json(j.at("verdict"))};
}

json field_params_to_json(const FieldParams& p) {
    return json{{"p", int_str(p.p)},
                {"e", p.e},
                {"f", p.f},
                {"g", int_str(p.g)},
                {"dimVS", p.dim_vs},
                {"containsMuP", p.contains_mu_p},
                {"totallyImaginary", p.totally_imaginary}};
}

FieldParams field_params_from_json(const json& j) {
    return FieldParams(parse_int(j.at("p").get<std::string>()), j.at("e").get<unsigned long>(),
                       j.at("f").get<unsigned long>(), parse_int(j.at("g").get<std::string>()),
                       j.at("dimVS").get<unsigned long>(), j.at("containsMuP").get<bool>(),
                       j.at("totallyImaginary").get<bool>());
}

json certificate_to_json(const Certificate& c) {
    json out{{"params", field_params_to_json(c.params)},
             {"d", int_str(c.d)},
             {"r", int_str(c.r)},
             {"t0", rat_to_json(c.t0)},
             {"gammaValue", rat_to_json(c.gamma_value)},
             {"verdict", certificate_verdict_name(c.verdict)},
             {"caveats", c.caveats},
             {"witnessValue", rat_to_json(c.witness_value)},
             {"witnessSource", witness_source_name(c.witness_source)}};
    if (c.cut_level_k) out["cutLevelK"] = *c.cut_level_k;
    json tails = json::array();
    for (const auto& t : c.tail_bounds) tails.push_back(tail_bound_to_json(t));
    out["tailBounds"] = tails;
    return out;
}

Certificate certificate_from_json(const json& j) {
    Certificate c{field_params_from_json(j.at("params")),
                  parse_int(j.at("d").get<std::string>()),
                  parse_int(j.at("r").get<std::string>()),
                  rat_from_json(j.at("t0")),
                  rat_from_json(j.at("gammaValue")),
                  std::nullopt,
                  CertificateVerdict::Inconclusive,
                  j.at("caveats").get<std::vector<std::string>>(),
                  rat_from_json(j.at("witnessValue")),
                  {},
                  WitnessSource::QuadraticMinimizer};
    if (j.contains("cutLevelK")) c.cut_level_k = j.at("cutLevelK").get<unsigned long>();
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "InfiniteByCutting")
        c.verdict = CertificateVerdict::InfiniteByCutting;
    else if (verdict == "InfiniteTowerAlready")
        c.verdict = CertificateVerdict::InfiniteTowerAlready;
    else if (verdict == "Inconclusive")
        c.verdict = CertificateVerdict::Inconclusive;
    else
        throw std::invalid_argument("unknown certificate verdict: " + verdict);
    if (j.at("witnessSource").get<std::string>() == "DyadicGrid")
        c.witness_source = WitnessSource::DyadicGrid;
    for (const auto& t : j.at("tailBounds")) c.tail_bounds.push_back(tail_bound_from_json(t));
    return c;
}

json hminus_to_json(const HMinusResult& r) {
    return json{{"modulus", r.modulus},
                {"hMinus", int_str(r.h_minus)},
                {"orbitCount", r.orbit_count},
                {"QFactor", r.q_factor},
                {"wFactor", r.w_factor}};
}

HMinusResult hminus_from_json(const json& j) {
    HMinusResult r;
    r.modulus = j.at("modulus").get<unsigned long>();
    r.h_minus = parse_int(j.at("hMinus").get<std::string>());
    r.orbit_count = j.at("orbitCount").get<unsigned long>();
    r.q_factor = j.at("QFactor").get<unsigned long>();
    r.w_factor = j.at("wFactor").get<unsigned long>();
    return r;
}

json shanks_record_to_json(const ShanksRecord& r) {
    json out{{"a", int_str(r.a)},
             {"p", int_str(r.p)},
             {"cubic", json{{"b", int_str(r.b)}, {"c", int_str(r.c)}, {"d", int_str(r.d)}}},
             {"discriminant", int_str(r.discriminant)},
             {"isPrime", r.prime}};
    if (r.class_group_note) out["classGroupNote"] = *r.class_group_note;
    return out;
}

ShanksRecord shanks_record_from_json(const json& j) {
    ShanksRecord r = ShanksRecord::make(parse_int(j.at("a").get<std::string>()));
    if (j.contains("classGroupNote"))
        r.class_group_note = j.at("classGroupNote").get<std::string>();
    if (int_str(r.p) != j.at("p").get<std::string>() ||
        int_str(r.discriminant) != j.at("discriminant").get<std::string>() ||
        r.prime != j.at("isPrime").get<bool>())
        throw std::invalid_argument("inconsistent Shanks record");
    return r;
}

}  // namespace towercut
