#ifndef CLT_NUMTHEORY_HPP
#define CLT_NUMTHEORY_HPP

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "clt/util.hpp"

namespace clt {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// A positive integer together with its prime decomposition, primes strictly
// increasing. Also used to carry group orders too large for u64 (the order
// is then only available through parts).
struct Factorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> parts;

  std::uint64_t tau() const;                  // number of divisors
  std::vector<std::uint64_t> primes() const;  // the prime set, increasing
  BigInt as_bigint() const;                   // product of parts
  bool divides(const Factorization& other) const;
  bool same_primes(const Factorization& other) const;
  std::string to_string() const;  // "2^2*3*5"
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

bool is_prime(std::uint64_t n);

// Trial division; n >= 2.
Factorization factorize(std::uint64_t n);

// Sorts and merges parts into a valid Factorization. value is the product
// when it fits u64 and 0 otherwise (parts stay exact either way).
Factorization factorization_from_parts(std::vector<PrimePower> parts);

// Number of divisors of n; n >= 1.
std::uint64_t tau(std::uint64_t n);

// All divisors of n, sorted increasing; n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// Smallest e >= 1 with a^e = 1 (mod m). Requires m >= 2, gcd(a, m) = 1.
std::uint64_t mult_order(std::uint64_t a, std::uint64_t m);

// True iff n = p^k for a single prime p; n >= 2.
bool is_prime_power(std::uint64_t n);

// Smallest prime p with q | p+1 and p not in excluded; q must be an odd
// prime. The scan walks p = q-1, 2q-1, 3q-1, ... and is guaranteed to
// terminate by Dirichlet; a 10^6-candidate cap guards against bugs.
std::uint64_t find_dirichlet_prime(std::uint64_t q,
                                   const std::unordered_set<std::uint64_t>& excluded = {});

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// p^e with overflow check; throws resource_error if the result exceeds u64.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

}  // namespace clt

#endif
