#ifndef CLT_CONSTRUCTIONS_HPP
#define CLT_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clt/numtheory.hpp"
#include "clt/permgroup.hpp"
#include "clt/spectrum.hpp"
#include "clt/util.hpp"

namespace clt {

// AGL(1, p^m) acting on the p^m field elements: all translations together
// with multiplication by a primitive element. Order p^m * (p^m - 1).
PermGroup agl1(unsigned p, unsigned m, std::size_t element_cap = kDefaultElementCap);

// The subgroup C_p^m x| C_h of AGL(1, p^m): translations plus
// multiplication by g^((p^m-1)/h). Requires h | p^m - 1.
PermGroup frobenius_subgroup(unsigned p, unsigned m, std::uint64_t h,
                             std::size_t element_cap = kDefaultElementCap);

// Indices of the translation subgroup inside a group built by agl1 or
// frobenius_subgroup (the kernel C_p^m), for use as a subgroup element-set.
std::vector<std::uint32_t> translation_subgroup(const PermGroup& g);

// G_{p,q}^n = (C_p^2 x| C_q) x C_q^n with q an odd prime, q | p+1.
PermGroup g_pqn(std::uint64_t p, std::uint64_t q, unsigned n,
                std::size_t element_cap = kDefaultElementCap);

struct TraceStep {
  enum class Kind { case1, case2 } kind = Kind::case1;
  // case1: witness core C_{p1}^{ra} x| C_{p2^n2} for the two-prime-power d.
  std::uint64_t p1 = 0, p2 = 0;
  unsigned n1 = 0, n2 = 0;
  std::uint64_t a = 0;  // multiplicative order of p1 modulo p2^n2
  unsigned r = 0;       // least r with r*a > n1
  // case2: the stripped largest prime power; the recursion continues on
  // d / stripped.
  std::uint64_t stripped_prime = 0;
  unsigned stripped_exponent = 0;
};

enum class WitnessStyle { minimal, full_agl };
enum class CertStatus { oracle_verified, certificate_only };

std::string to_string(WitnessStyle s);
std::string to_string(CertStatus s);

struct ConstructionCert {
  Factorization d;
  WitnessStyle style = WitnessStyle::minimal;
  Factorization group_order;     // exact even when far beyond any cap
  std::string description;       // e.g. "(C_3^2 x| C_4) x C_5"
  std::vector<TraceStep> trace;  // case2 strips first, the case1 core last
  CertStatus verified = CertStatus::certificate_only;
  bool missing_order_confirmed = false;
  std::optional<PermGroup> group;          // built when order fits the oracle cap
  std::optional<SpectrumReport> spectrum;  // present iff oracle_verified
};

// The induction behind "no subgroup of order d": two prime powers go to a
// Frobenius witness inside AGL(1, p1^{ra}); more primes strip the largest
// prime power and recurse, taking a direct product with a cyclic factor.
// Requires d >= 6 and d not a prime power. When the witness order fits
// opts.order_cap (and run_oracle is set) the certificate is oracle checked.
ConstructionCert construct_witness(std::uint64_t d, const OracleOptions& opts = {},
                                    WitnessStyle style = WitnessStyle::minimal,
                                    bool run_oracle = true);

// Re-derives the certificate for cert.d and checks that description, order,
// trace and verification outcome all reproduce. Throws on mismatch.
void recheck_certificate(const ConstructionCert& cert, const OracleOptions& opts = {});

// Arithmetic invariants of a case1 step: a does not divide n1,
// (r-1)a < n1 < ra, and p2^n2 | p1^{ra} - 1. Throws internal_error if violated.
void check_trace_invariants(const ConstructionCert& cert);

}  // namespace clt

#endif
