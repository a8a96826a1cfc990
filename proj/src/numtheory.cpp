#include "clt/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace clt {

std::uint64_t Factorization::tau() const {
  std::uint64_t t = 1;
  for (const auto& pp : parts) t *= pp.exponent + 1;
  return t;
}

std::vector<std::uint64_t> Factorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(parts.size());
  for (const auto& pp : parts) out.push_back(pp.prime);
  return out;
}

BigInt Factorization::as_bigint() const {
  BigInt n = 1;
  for (const auto& pp : parts) n *= pow(BigInt(pp.prime), pp.exponent);
  return n;
}

bool Factorization::divides(const Factorization& other) const {
  for (const auto& pp : parts) {
    auto it = std::find_if(other.parts.begin(), other.parts.end(),
                           [&](const PrimePower& o) { return o.prime == pp.prime; });
    if (it == other.parts.end() || it->exponent < pp.exponent) return false;
  }
  return true;
}

bool Factorization::same_primes(const Factorization& other) const {
  return primes() == other.primes();
}

std::string Factorization::to_string() const {
  std::string s;
  for (const auto& pp : parts) {
    if (!s.empty()) s += "*";
    s += std::to_string(pp.prime);
    if (pp.exponent > 1) s += "^" + std::to_string(pp.exponent);
  }
  return s.empty() ? "1" : s;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n < 2) throw domain_error("factorize requires n >= 2");
  Factorization f;
  f.value = n;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) f.parts.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) f.parts.push_back({n, 1});
  return f;
}

Factorization factorization_from_parts(std::vector<PrimePower> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
  Factorization out;
  for (const auto& pp : parts) {
    if (pp.exponent == 0) continue;
    if (!is_prime(pp.prime)) throw domain_error("factorization part is not prime");
    if (!out.parts.empty() && out.parts.back().prime == pp.prime)
      out.parts.back().exponent += pp.exponent;
    else
      out.parts.push_back(pp);
  }
  std::uint64_t value = 1;
  bool fits = true;
  for (const auto& pp : out.parts)
    for (unsigned e = 0; e < pp.exponent && fits; ++e) {
      if (value > UINT64_MAX / pp.prime)
        fits = false;
      else
        value *= pp.prime;
    }
  out.value = fits ? value : 0;
  return out;
}

std::uint64_t tau(std::uint64_t n) {
  if (n < 1) throw domain_error("tau requires n >= 1");
  if (n == 1) return 1;
  return factorize(n).tau();
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n < 1) throw domain_error("divisors requires n >= 1");
  std::vector<std::uint64_t> out{1};
  if (n > 1) {
    for (const auto& pp : factorize(n).parts) {
      const std::size_t base = out.size();
      std::uint64_t q = 1;
      for (unsigned e = 1; e <= pp.exponent; ++e) {
        q *= pp.prime;
        for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2) throw domain_error("mult_order requires modulus >= 2");
  if (std::gcd(a, m) != 1) throw domain_error("mult_order requires gcd(a, m) = 1");
  const std::uint64_t a0 = a % m;
  std::uint64_t x = a0, e = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * a0) % m);
    ++e;
    if (e > m) throw internal_error("mult_order exceeded the group exponent");
  }
  return e;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) throw domain_error("is_prime_power requires n >= 2");
  return factorize(n).parts.size() == 1;
}

std::uint64_t find_dirichlet_prime(std::uint64_t q,
                                   const std::unordered_set<std::uint64_t>& excluded) {
  if (q < 3 || q % 2 == 0 || !is_prime(q))
    throw domain_error("find_dirichlet_prime requires an odd prime q");
  constexpr std::uint64_t kCandidateCap = 1000000;
  for (std::uint64_t k = 1; k <= kCandidateCap; ++k) {
    const std::uint64_t p = k * q - 1;
    if (is_prime(p) && !excluded.contains(p)) return p;
  }
  throw internal_error("find_dirichlet_prime exhausted its candidate cap");
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 0) throw domain_error("mod_pow requires a nonzero modulus");
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1)
      result = static_cast<std::uint64_t>((static_cast<unsigned __int128>(result) * base) % mod);
    base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % mod);
    exp >>= 1;
  }
  return result;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base)
      throw resource_error("integer power overflows 64 bits");
    result *= base;
  }
  return result;
}

}  // namespace clt
