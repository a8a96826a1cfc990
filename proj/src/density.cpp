#include "clt/density.hpp"

#include <algorithm>
#include <unordered_set>

#include "clt/constructions.hpp"
#include "clt/numtheory.hpp"

namespace clt {

Rational gpqn_degree(std::int64_t n) {
  if (n < 0) throw domain_error("gpqn_degree requires n >= 0");
  return Rational(3 * n + 5, 3 * n + 6);
}

bool verify_gpqn_degree(std::uint64_t p, std::uint64_t q, unsigned n, const OracleOptions& opts) {
  const PermGroup g = g_pqn(p, q, n);
  const SpectrumReport report = spectrum(g, opts);
  const std::uint64_t missing = p * checked_pow(q, n + 1);
  return report.missing_orders == std::vector<std::uint64_t>{missing} &&
         report.degree == gpqn_degree(n);
}

std::vector<WitnessPair> assign_prime_pairs(const std::vector<std::uint64_t>& index_set) {
  std::vector<WitnessPair> pairs;
  std::unordered_set<std::uint64_t> used;
  std::uint64_t q = 1;
  for (std::uint64_t n : index_set) {
    do {
      q += 2;
    } while (!is_prime(q) || used.contains(q));
    used.insert(q);
    const std::uint64_t p = find_dirichlet_prime(q, used);
    used.insert(p);
    pairs.push_back({p, q, n});
  }
  return pairs;
}

ApproxResult approximate_target(const Rational& t, const Rational& eps) {
  if (!(t > 0 && t <= 1)) throw domain_error("target must lie in (0, 1]");
  if (!(eps > 0)) throw domain_error("epsilon must be positive");

  ApproxResult result;
  result.target = t;
  result.epsilon = eps;

  // Unnormalized running product; one gcd at the end instead of one per step.
  BigInt num = 1, den = 1;
  const BigInt t_num = numerator(t), t_den = denominator(t);
  const BigInt e_num = numerator(eps), e_den = denominator(eps);
  constexpr std::uint64_t kScanCap = 1000000;
  std::uint64_t n = 0;
  // stop once product - t < eps, kept in cross-multiplied integer form
  while ((num * t_den - t_num * den) * e_den >= e_num * den * t_den) {
    if (n >= kScanCap)
      throw resource_error("target needs more than 10^6 greedy indices; out of desk scale");
    const BigInt fn = 3 * BigInt(n) + 5, fd = 3 * BigInt(n) + 6;
    // include n iff P * (3n+5)/(3n+6) >= t
    if (num * fn * t_den >= den * fd * t_num) {
      num *= fn;
      den *= fd;
      result.index_set.push_back(n);
    }
    ++n;
  }
  result.product = Rational(num, den);
  result.pairs = assign_prime_pairs(result.index_set);
  std::vector<PrimePower> order_parts;
  for (const auto& pair : result.pairs) {
    order_parts.push_back({pair.p, 2});
    order_parts.push_back({pair.q, static_cast<unsigned>(pair.n + 1)});
  }
  result.witness_order = factorization_from_parts(std::move(order_parts));
  return result;
}

WitnessReport witness_description(const ApproxResult& result, const OracleOptions& opts) {
  WitnessReport report;
  if (result.pairs.empty()) {
    report.description = "C_1";
    report.group = cyclic_group(1);
    report.oracle_degree = spectrum(*report.group, opts).degree;
    report.oracle_verified = *report.oracle_degree == result.product;
    if (!report.oracle_verified) throw internal_error("trivial witness degree is not 1");
    return report;
  }

  for (const auto& pair : result.pairs) {
    if (!report.description.empty()) report.description += " × ";
    report.description += "(C_" + std::to_string(pair.p) + "^2 ⋊ C_" +
                          std::to_string(pair.q) + ")";
    if (pair.n == 1)
      report.description += " × C_" + std::to_string(pair.q);
    else if (pair.n > 1)
      report.description += " × C_" + std::to_string(pair.q) + "^" + std::to_string(pair.n);
  }

  const std::size_t cap = std::min(opts.order_cap, kOracleIndexCap);
  if (result.witness_order.value != 0 && result.witness_order.value <= cap) {
    PermGroup witness = g_pqn(result.pairs[0].p, result.pairs[0].q,
                              static_cast<unsigned>(result.pairs[0].n));
    for (std::size_t i = 1; i < result.pairs.size(); ++i)
      witness = direct_product(witness, g_pqn(result.pairs[i].p, result.pairs[i].q,
                                              static_cast<unsigned>(result.pairs[i].n)));
    report.oracle_degree = spectrum(witness, opts).degree;
    report.oracle_verified = *report.oracle_degree == result.product;
    if (!report.oracle_verified)
      throw internal_error("witness degree disagrees with the exact product");
    report.group = std::move(witness);
  }
  return report;
}

}  // namespace clt
