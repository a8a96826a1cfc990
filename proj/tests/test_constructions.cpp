#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "clt/constructions.hpp"
#include "clt/numtheory.hpp"
#include "clt/spectrum.hpp"

using namespace clt;

TEST_CASE("AGL(1,q) construction") {
  CHECK(agl1(2, 1).order() == 2);

  const PermGroup agl4 = agl1(2, 2);
  CHECK(agl4.order() == 12);
  const SpectrumReport r4 = spectrum(agl4);
  CHECK(r4.missing_orders == std::vector<std::uint64_t>{6});  // the A4 signature

  CHECK(agl1(3, 2).order() == 72);
  CHECK(agl1(5, 1).order() == 20);
}

TEST_CASE("Frobenius subgroups of AGL(1,q)") {
  const PermGroup ea = frobenius_subgroup(3, 2, 1);
  CHECK(ea.order() == 9);
  for (std::uint32_t e = 1; e < ea.order(); ++e) CHECK(ea.element_order(e) == 3);

  CHECK(frobenius_subgroup(3, 2, 4).order() == 36);
  CHECK(frobenius_subgroup(2, 2, 3).order() == 12);  // all of AGL(1,4)
  CHECK_THROWS_AS(frobenius_subgroup(3, 2, 5), domain_error);
  CHECK_THROWS_AS(frobenius_subgroup(3, 2, 0), domain_error);
}

TEST_CASE("g_pqn family") {
  CHECK(g_pqn(2, 3, 0).order() == 12);
  CHECK(g_pqn(2, 3, 1).order() == 36);
  CHECK(g_pqn(5, 3, 0).order() == 75);
  CHECK(g_pqn(2, 3, 2).order() == 108);
  CHECK_THROWS_AS(g_pqn(3, 5, 0), domain_error);   // 5 does not divide 4
  CHECK_THROWS_AS(g_pqn(3, 2, 0), domain_error);   // q even
  CHECK_THROWS_AS(g_pqn(3, 3, 0), domain_error);   // q = p
  CHECK_THROWS_AS(g_pqn(4, 5, 0), domain_error);   // p not prime
  CHECK_THROWS_AS(g_pqn(2, 9, 0), domain_error);   // q not prime
}

TEST_CASE("g_pqn(p,q,0) is Frobenius over its translation kernel") {
  for (const auto [p, q] : {std::pair{2ull, 3ull}, {5ull, 3ull}, {13ull, 7ull}}) {
    const PermGroup g = g_pqn(p, q, 0);
    const auto kernel = translation_subgroup(g);
    CHECK(kernel.size() == p * p);
    CHECK(verify_frobenius(g, kernel));
  }
}

TEST_CASE("construct_witness: d = 6 reproduces the A4 base case") {
  const ConstructionCert cert = construct_witness(6);
  CHECK(cert.group_order.value == 12);
  CHECK(cert.description == "C_2^2 ⋊ C_3");
  REQUIRE(cert.trace.size() == 1);
  const TraceStep& core = cert.trace.back();
  CHECK(core.p1 == 2);
  CHECK(core.n1 == 1);
  CHECK(core.p2 == 3);
  CHECK(core.n2 == 1);
  CHECK(core.a == 2);
  CHECK(core.r == 1);
  CHECK(cert.verified == CertStatus::oracle_verified);
  CHECK(cert.missing_order_confirmed);
  REQUIRE(cert.group.has_value());
  CHECK(cert.group->order() == 12);
}

TEST_CASE("construct_witness: d = 12 picks the C3^2 x| C4 orientation") {
  const ConstructionCert cert = construct_witness(12);
  CHECK(cert.group_order.value == 36);
  CHECK(cert.description == "C_3^2 ⋊ C_4");
  const TraceStep& core = cert.trace.back();
  CHECK(core.p1 == 3);
  CHECK(core.n1 == 1);
  CHECK(core.p2 == 2);
  CHECK(core.n2 == 2);
  CHECK(core.a == 2);
  CHECK(core.r == 1);
  CHECK(cert.verified == CertStatus::oracle_verified);
  REQUIRE(cert.spectrum.has_value());
  CHECK(std::binary_search(cert.spectrum->missing_orders.begin(),
                           cert.spectrum->missing_orders.end(), 12ull));
}

TEST_CASE("construct_witness: d = 60 strips 5 and reuses the d = 12 core") {
  const ConstructionCert cert = construct_witness(60);
  CHECK(cert.group_order.value == 180);
  CHECK(cert.description == "(C_3^2 ⋊ C_4) × C_5");
  REQUIRE(cert.trace.size() == 2);
  CHECK(cert.trace[0].kind == TraceStep::Kind::case2);
  CHECK(cert.trace[0].stripped_prime == 5);
  CHECK(cert.trace[1].kind == TraceStep::Kind::case1);
  CHECK(cert.verified == CertStatus::oracle_verified);
  CHECK(cert.missing_order_confirmed);
}

TEST_CASE("construct_witness: the full-AGL witness for 60 matches the AGL(1,9) x C_5 witness") {
  const ConstructionCert cert = construct_witness(60, {}, WitnessStyle::full_agl);
  CHECK(cert.group_order.value == 360);
  CHECK(cert.description == "AGL(1,9) × C_5");
  CHECK(cert.verified == CertStatus::oracle_verified);
  CHECK(cert.missing_order_confirmed);
  REQUIRE(cert.spectrum.has_value());
  CHECK(std::binary_search(cert.spectrum->missing_orders.begin(),
                           cert.spectrum->missing_orders.end(), 60ull));
}

TEST_CASE("construct_witness guards") {
  CHECK_THROWS_AS(construct_witness(8), domain_error);
  CHECK_THROWS_AS(construct_witness(4), domain_error);
  CHECK_THROWS_AS(construct_witness(7), domain_error);
  CHECK_THROWS_AS(construct_witness(1), domain_error);
  CHECK_THROWS_AS(construct_witness(0), domain_error);
  try {
    construct_witness(8);
    REQUIRE(false);
  } catch (const domain_error& e) {
    CHECK(std::string(e.what()).find("prime power") != std::string::npos);
  }
}

TEST_CASE("certificate-only path still certifies arithmetically") {
  // d = 100: the only valid orientation needs 2^20 * 25, far over the cap.
  const ConstructionCert cert = construct_witness(100);
  CHECK(cert.verified == CertStatus::certificate_only);
  CHECK_FALSE(cert.group.has_value());
  CHECK(cert.group_order.value == checked_pow(2, 20) * 25);
  check_trace_invariants(cert);

  // d = 166 = 2 * 83 produces an order beyond 64 bits; parts stay exact.
  const ConstructionCert big = construct_witness(166);
  CHECK(big.verified == CertStatus::certificate_only);
  CHECK(big.group_order.value == 0);
  CHECK(big.group_order.as_bigint() == pow(BigInt(2), 82) * 83);
  check_trace_invariants(big);
}

TEST_CASE("no-verify skips the oracle") {
  const ConstructionCert cert = construct_witness(6, {}, WitnessStyle::minimal, false);
  CHECK(cert.verified == CertStatus::certificate_only);
  CHECK_FALSE(cert.group.has_value());
}

TEST_CASE("sweep d <= 60: certificates hold and oracle-verified where possible") {
  for (std::uint64_t d = 6; d <= 60; ++d) {
    if (factorize(d).parts.size() < 2) continue;
    const ConstructionCert cert = construct_witness(d);
    check_trace_invariants(cert);
    CHECK(cert.d.divides(cert.group_order));
    CHECK(cert.d.same_primes(cert.group_order));
    if (cert.group_order.value != 0 && cert.group_order.value <= default_oracle_cap()) {
      CHECK(cert.verified == CertStatus::oracle_verified);
      CHECK(cert.missing_order_confirmed);
    } else {
      CHECK(cert.verified == CertStatus::certificate_only);
    }
  }
}

TEST_CASE("recheck_certificate accepts sound and rejects tampered certificates") {
  ConstructionCert cert = construct_witness(60);
  recheck_certificate(cert);
  cert.description = "C_60";
  CHECK_THROWS_AS(recheck_certificate(cert), domain_error);

  ConstructionCert wrong_a = construct_witness(60);
  wrong_a.trace.back().a = 4;
  CHECK_THROWS_AS(recheck_certificate(wrong_a), internal_error);
}
