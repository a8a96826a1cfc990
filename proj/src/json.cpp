#include "clt/json.hpp"

#include "clt/numtheory.hpp"

namespace clt {

namespace {

using nlohmann::json;

json rational_json(const Rational& r) { return rational_to_string(r); }

Rational rational_field(const json& j, const char* key) {
  return parse_rational(j.at(key).get<std::string>());
}

std::vector<std::uint64_t> u64_list(const json& j) {
  return j.get<std::vector<std::uint64_t>>();
}

}  // namespace

nlohmann::json to_json(const SpectrumReport& report) {
  return json{{"group_order", report.group_order},
              {"realized_orders", report.realized_orders},
              {"missing_orders", report.missing_orders},
              {"D", report.D},
              {"tau", report.tau},
              {"degree", rational_json(report.degree)},
              {"subgroup_count", report.subgroup_count},
              {"conjugacy_class_count", report.conjugacy_class_count}};
}

SpectrumReport spectrum_report_from_json(const nlohmann::json& j) {
  SpectrumReport report;
  report.group_order = j.at("group_order").get<std::uint64_t>();
  report.realized_orders = u64_list(j.at("realized_orders"));
  report.missing_orders = u64_list(j.at("missing_orders"));
  report.D = j.at("D").get<std::uint64_t>();
  report.tau = j.at("tau").get<std::uint64_t>();
  report.degree = rational_field(j, "degree");
  report.subgroup_count = j.at("subgroup_count").get<std::uint64_t>();
  report.conjugacy_class_count = j.at("conjugacy_class_count").get<std::uint64_t>();
  return report;
}

nlohmann::json to_json(const Factorization& f) {
  json parts = json::array();
  for (const auto& pp : f.parts) parts.push_back(json::array({pp.prime, pp.exponent}));
  return parts;
}

Factorization factorization_from_json(const nlohmann::json& j) {
  std::vector<PrimePower> parts;
  for (const auto& entry : j)
    parts.push_back({entry.at(0).get<std::uint64_t>(), entry.at(1).get<unsigned>()});
  return factorization_from_parts(std::move(parts));
}

nlohmann::json to_json(const ConstructionCert& cert) {
  json trace = json::array();
  for (const auto& step : cert.trace) {
    if (step.kind == TraceStep::Kind::case2) {
      trace.push_back(json{{"kind", "case2"},
                           {"stripped_prime", step.stripped_prime},
                           {"stripped_exponent", step.stripped_exponent}});
    } else {
      trace.push_back(json{{"kind", "case1"},
                           {"p1", step.p1},
                           {"n1", step.n1},
                           {"p2", step.p2},
                           {"n2", step.n2},
                           {"a", step.a},
                           {"r", step.r}});
    }
  }
  json out{{"d", cert.d.value},
           {"d_factorization", to_json(cert.d)},
           {"style", to_string(cert.style)},
           {"description", cert.description},
           {"order", cert.group_order.as_bigint().str()},
           {"order_factorization", to_json(cert.group_order)},
           {"trace", std::move(trace)},
           {"verified", to_string(cert.verified)},
           {"missing_order_confirmed", cert.missing_order_confirmed}};
  if (cert.spectrum) out["spectrum"] = to_json(*cert.spectrum);
  return out;
}

ConstructionCert construction_cert_from_json(const nlohmann::json& j) {
  ConstructionCert cert;
  cert.d = factorization_from_json(j.at("d_factorization"));
  if (cert.d.value != j.at("d").get<std::uint64_t>())
    throw domain_error("certificate d does not match its factorization");
  const std::string style = j.at("style").get<std::string>();
  if (style == "minimal")
    cert.style = WitnessStyle::minimal;
  else if (style == "full_agl")
    cert.style = WitnessStyle::full_agl;
  else
    throw domain_error("unknown witness style: " + style);
  cert.description = j.at("description").get<std::string>();
  cert.group_order = factorization_from_json(j.at("order_factorization"));
  if (cert.group_order.as_bigint().str() != j.at("order").get<std::string>())
    throw domain_error("certificate order does not match its factorization");
  for (const auto& entry : j.at("trace")) {
    TraceStep step;
    const std::string kind = entry.at("kind").get<std::string>();
    if (kind == "case2") {
      step.kind = TraceStep::Kind::case2;
      step.stripped_prime = entry.at("stripped_prime").get<std::uint64_t>();
      step.stripped_exponent = entry.at("stripped_exponent").get<unsigned>();
    } else if (kind == "case1") {
      step.kind = TraceStep::Kind::case1;
      step.p1 = entry.at("p1").get<std::uint64_t>();
      step.n1 = entry.at("n1").get<unsigned>();
      step.p2 = entry.at("p2").get<std::uint64_t>();
      step.n2 = entry.at("n2").get<unsigned>();
      step.a = entry.at("a").get<std::uint64_t>();
      step.r = entry.at("r").get<unsigned>();
    } else {
      throw domain_error("unknown trace step kind: " + kind);
    }
    cert.trace.push_back(step);
  }
  const std::string verified = j.at("verified").get<std::string>();
  if (verified == "oracle_verified")
    cert.verified = CertStatus::oracle_verified;
  else if (verified == "certificate_only")
    cert.verified = CertStatus::certificate_only;
  else
    throw domain_error("unknown verification status: " + verified);
  cert.missing_order_confirmed = j.at("missing_order_confirmed").get<bool>();
  if (j.contains("spectrum")) cert.spectrum = spectrum_report_from_json(j.at("spectrum"));
  return cert;
}

nlohmann::json to_json(const ApproxResult& result, const WitnessReport& witness) {
  json pairs = json::array();
  for (const auto& pair : result.pairs)
    pairs.push_back(json{{"p", pair.p}, {"q", pair.q}, {"n", pair.n}});
  json out{{"target", rational_json(result.target)},
           {"epsilon", rational_json(result.epsilon)},
           {"index_set", result.index_set},
           {"product", rational_json(result.product)},
           {"pairs", std::move(pairs)},
           // decimal when it fits 64 bits, factored-expression string beyond
           {"witness_order", result.witness_order.value != 0
                                 ? std::to_string(result.witness_order.value)
                                 : result.witness_order.to_string()},
           {"witness_order_factorization", to_json(result.witness_order)},
           {"witness_description", witness.description},
           {"verification", witness.oracle_verified ? "oracle_verified" : "certificate_only"}};
  if (witness.oracle_degree) out["oracle_degree"] = rational_json(*witness.oracle_degree);
  return out;
}

std::pair<ApproxResult, WitnessReport> approx_result_from_json(const nlohmann::json& j) {
  ApproxResult result;
  result.target = rational_field(j, "target");
  result.epsilon = rational_field(j, "epsilon");
  result.index_set = u64_list(j.at("index_set"));
  result.product = rational_field(j, "product");
  for (const auto& entry : j.at("pairs"))
    result.pairs.push_back({entry.at("p").get<std::uint64_t>(), entry.at("q").get<std::uint64_t>(),
                            entry.at("n").get<std::uint64_t>()});
  result.witness_order = factorization_from_json(j.at("witness_order_factorization"));
  WitnessReport witness;
  witness.description = j.at("witness_description").get<std::string>();
  witness.oracle_verified = j.at("verification").get<std::string>() == "oracle_verified";
  if (j.contains("oracle_degree")) witness.oracle_degree = rational_field(j, "oracle_degree");
  return {std::move(result), std::move(witness)};
}

}  // namespace clt
