#ifndef CLT_SPECTRUM_HPP
#define CLT_SPECTRUM_HPP

#include <cstdint>
#include <vector>

#include "clt/permgroup.hpp"
#include "clt/util.hpp"

namespace clt {

// Element indices are 16-bit in the oracle's multiplication table.
inline constexpr std::size_t kOracleIndexCap = 65535;

// Default 2000; the CLT_ORACLE_CAP environment variable overrides it.
// Values above kOracleIndexCap are rejected.
std::size_t default_oracle_cap();

struct OracleOptions {
  std::size_t order_cap = default_oracle_cap();
  unsigned workers = 1;  // >1 processes the join worklist in parallel rounds
};

using ElementSet = std::vector<std::uint32_t>;

// Every subgroup of G, each as a sorted list of element indices, the whole
// list sorted by size then lexicographically. Works by join-closure: seed
// with the cyclic subgroups <x>, then repeatedly join known subgroups with
// cyclic subgroups of prime-power order until nothing new appears. This is
// complete because every subgroup is generated by a chain of such joins.
std::vector<ElementSet> enumerate_subgroups(const PermGroup& g, const OracleOptions& opts = {});

struct SpectrumReport {
  std::uint64_t group_order = 1;
  std::vector<std::uint64_t> realized_orders;  // subgroup orders, sorted
  std::vector<std::uint64_t> missing_orders;   // divisors with no subgroup
  std::uint64_t D = 1;                         // |realized_orders|
  std::uint64_t tau = 1;                       // number of divisors of |G|
  Rational degree = 1;                         // D/tau in lowest terms
  std::uint64_t subgroup_count = 1;
  std::uint64_t conjugacy_class_count = 1;
  friend bool operator==(const SpectrumReport&, const SpectrumReport&) = default;
};

SpectrumReport spectrum(const PermGroup& g, const OracleOptions& opts = {});

bool is_clt(const PermGroup& g, const OracleOptions& opts = {});

struct LowerBoundReport {
  Rational bound;    // (sum n_i + 2) / prod (n_i + 1)
  Rational degree;   // measured d_CLT
  bool holds = false;
  bool equality = false;
  bool all_proper_prime_power = false;  // exactly when equality holds
};

// Requires |G| to have at least two distinct prime factors.
LowerBoundReport check_lower_bound(const PermGroup& g, const OracleOptions& opts = {});

// d_CLT(G/N) <= tau(|G|)/tau(|G|/|N|) * d_CLT(G), evaluated exactly.
bool check_quotient_inequality(const PermGroup& g, const std::vector<std::uint32_t>& n,
                               const OracleOptions& opts = {});

// d_CLT(G1 x G2) = d_CLT(G1) * d_CLT(G2); orders must be coprime.
bool check_multiplicativity(const PermGroup& g1, const PermGroup& g2,
                            const OracleOptions& opts = {});

// Spectrum of S_n. n <= 6 by default; n = 7 only with allow_slow (the run
// is long). The order cap is lifted to n! when allow_slow is set.
SpectrumReport sn_report(unsigned n, bool allow_slow = false, OracleOptions opts = {});

// Throws internal_error if any oracle invariant fails: Lagrange, Sylow
// (every prime-power divisor realized), D + missing = tau, closure of the
// subgroup list under conjugation and under pairwise join.
void check_spectrum_invariants(const PermGroup& g, const std::vector<ElementSet>& subgroups,
                               const SpectrumReport& report, bool check_pairwise_joins = false);

}  // namespace clt

#endif
