#ifndef CLT_DENSITY_HPP
#define CLT_DENSITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clt/numtheory.hpp"
#include "clt/permgroup.hpp"
#include "clt/spectrum.hpp"
#include "clt/util.hpp"

namespace clt {

// d_CLT(G_{p,q}^n) = (3n+5)/(3n+6), in lowest terms.
Rational gpqn_degree(std::int64_t n);

// Oracle check that g_pqn(p, q, n) misses exactly the order p*q^{n+1} and
// has degree (3n+5)/(3n+6).
bool verify_gpqn_degree(std::uint64_t p, std::uint64_t q, unsigned n,
                    const OracleOptions& opts = {});

struct WitnessPair {
  std::uint64_t p = 0;  // prime with q | p+1
  std::uint64_t q = 0;  // odd prime
  std::uint64_t n = 0;  // the index from the greedy's index set
  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

struct ApproxResult {
  Rational target;
  Rational epsilon;
  std::vector<std::uint64_t> index_set;  // sorted increasing
  Rational product;                      // prod over the index set, exact
  std::vector<WitnessPair> pairs;        // all 2k primes pairwise distinct
  // prod p_i^2 q_i^{n_i+1}, kept factored: small targets produce witness
  // orders with millions of digits.
  Factorization witness_order;
};

// For each index, the next unused odd prime becomes q_i and the smallest
// prime p_i = -1 (mod q_i) avoiding all earlier primes joins it. The 2k
// chosen primes are pairwise distinct by construction.
std::vector<WitnessPair> assign_prime_pairs(const std::vector<std::uint64_t>& index_set);

// Greedy scan n = 0, 1, 2, ...: include n whenever the running product
// stays >= t; stop once product - t < eps. Requires 0 < t <= 1, eps > 0.
// Converges since the factors increase to 1; a scan cap of 10^6 indices
// keeps pathologically small targets from running away.
ApproxResult approximate_target(const Rational& t, const Rational& eps);

struct WitnessReport {
  std::string description;
  std::optional<PermGroup> group;          // built when the order fits the cap
  std::optional<Rational> oracle_degree;   // measured degree when built
  bool oracle_verified = false;
};

// Builds "prod (C_p^2 x| C_q) x C_q^n" for the result's pairs; when the
// witness order fits the oracle cap the group is constructed and its
// measured degree must equal the exact product.
WitnessReport witness_description(const ApproxResult& result, const OracleOptions& opts = {});

}  // namespace clt

#endif
