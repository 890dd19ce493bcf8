#pragma once

#include <json.hpp>

#include "towercut/class_number.hpp"
#include "towercut/cohomology.hpp"
#include "towercut/shanks.hpp"

namespace towercut {

// Wire format rules: big integers as decimal strings, rationals as
// {"num": "...", "den": "..."}, keys emitted in sorted order. Certificates
// round-trip losslessly so they can be replayed from the serialized form.

nlohmann::json rat_to_json(const Rat& q);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const ComparisonVerdict& v);
ComparisonVerdict verdict_from_json(const nlohmann::json& j);

nlohmann::json depth_term_to_json(const DepthTerm& t);
DepthTerm depth_term_from_json(const nlohmann::json& j);

nlohmann::json tail_bound_to_json(const TailBound& t);
TailBound tail_bound_from_json(const nlohmann::json& j);

nlohmann::json field_params_to_json(const FieldParams& p);
FieldParams field_params_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json hminus_to_json(const HMinusResult& r);
HMinusResult hminus_from_json(const nlohmann::json& j);

nlohmann::json shanks_record_to_json(const ShanksRecord& r);
ShanksRecord shanks_record_from_json(const nlohmann::json& j);

const char* certificate_verdict_name(CertificateVerdict v);
const char* witness_source_name(WitnessSource s);

}  // namespace towercut
