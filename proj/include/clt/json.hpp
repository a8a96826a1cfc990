#ifndef CLT_JSON_HPP
#define CLT_JSON_HPP

#include <json.hpp>

#include <utility>

#include "clt/constructions.hpp"
#include "clt/density.hpp"
#include "clt/spectrum.hpp"

namespace clt {

// Rationals serialize as "p/q" strings, huge integers as decimal strings;
// nothing in a report goes through floating point.

nlohmann::json to_json(const SpectrumReport& report);
SpectrumReport spectrum_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Factorization& f);
Factorization factorization_from_json(const nlohmann::json& j);

// The witness group itself is not serialized; everything else round-trips.
nlohmann::json to_json(const ConstructionCert& cert);
ConstructionCert construction_cert_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ApproxResult& result, const WitnessReport& witness);
std::pair<ApproxResult, WitnessReport> approx_result_from_json(const nlohmann::json& j);

}  // namespace clt

#endif
