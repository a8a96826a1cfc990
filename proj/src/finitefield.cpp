#include "clt/finitefield.hpp"

#include <algorithm>

#include "clt/numtheory.hpp"

namespace clt {

namespace {

// Remainder of a by b over GF(p); b monic. Coefficients constant-first.
std::vector<unsigned> poly_mod(std::vector<unsigned> a, const std::vector<unsigned>& b,
                               unsigned p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const unsigned lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) {
        unsigned sub = (static_cast<std::uint64_t>(lead) * b[i]) % p;
        a[shift + i] = (a[shift + i] + p - sub) % p;
      }
    }
    a.pop_back();
  }
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

std::vector<unsigned> poly_mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                               unsigned p) {
  std::vector<unsigned> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  }
  return out;
}

bool is_zero_poly(const std::vector<unsigned>& a) {
  return a.size() == 1 && a[0] == 0;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2. Desk
// scale: the candidate count is p^(deg/2+1) at most.
bool poly_irreducible(const std::vector<unsigned>& f, unsigned p) {
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<unsigned> g(d + 1, 0);
      std::uint64_t v = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (is_zero_poly(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(unsigned p, unsigned m, std::uint64_t size_cap) : p_(p), m_(m) {
  if (!is_prime(p)) throw domain_error("field characteristic must be prime");
  if (m < 1) throw domain_error("field extension degree must be >= 1");
  size_ = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (size_ > size_cap / p) throw resource_error("field size exceeds cap " + std::to_string(size_cap));
    size_ *= p;
  }
  if (size_ > size_cap) throw resource_error("field size exceeds cap " + std::to_string(size_cap));

  // Scan monic degree-m polynomials in lex order of (c_0, ..., c_{m-1}).
  std::uint64_t combos = size_;
  for (std::uint64_t c = 0; c < combos; ++c) {
    std::vector<unsigned> f(m + 1, 0);
    std::uint64_t v = c;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = static_cast<unsigned>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (poly_irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }
  if (modulus_.empty()) throw internal_error("no irreducible modulus found");

  // Smallest element of full multiplicative order. Checking order via the
  // prime factors of size-1 keeps this O(log) per candidate.
  primitive_ = 0;
  const std::uint64_t group = size_ - 1;
  if (group == 1) {
    primitive_ = 1;
  } else {
    const auto fac = factorize(group);
    for (std::uint64_t a = 2; a < size_; ++a) {
      bool full = true;
      for (const auto& pp : fac.parts) {
        if (pow(a, group / pp.prime) == 1) {
          full = false;
          break;
        }
      }
      if (full) {
        primitive_ = a;
        break;
      }
    }
    if (primitive_ == 0) throw internal_error("no primitive element found");
  }
}

void FiniteField::check_index(std::uint64_t a) const {
  if (a >= size_) throw domain_error("field element index out of range");
}

std::vector<unsigned> FiniteField::decode(std::uint64_t a) const {
  std::vector<unsigned> c(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = static_cast<unsigned>(a % p_);
    a /= p_;
  }
  return c;
}

std::uint64_t FiniteField::encode(const std::vector<unsigned>& coeffs) const {
  std::uint64_t a = 0;
  for (unsigned i = m_; i-- > 0;) a = a * p_ + (i < coeffs.size() ? coeffs[i] % p_ : 0);
  return a;
}

std::uint64_t FiniteField::add(std::uint64_t a, std::uint64_t b) const {
  check_index(a);
  check_index(b);
  auto ca = decode(a), cb = decode(b);
  for (unsigned i = 0; i < m_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return encode(ca);
}

std::uint64_t FiniteField::neg(std::uint64_t a) const {
  check_index(a);
  auto c = decode(a);
  for (unsigned i = 0; i < m_; ++i) c[i] = (p_ - c[i]) % p_;
  return encode(c);
}

std::uint64_t FiniteField::mul(std::uint64_t a, std::uint64_t b) const {
  check_index(a);
  check_index(b);
  if (a == 0 || b == 0) return 0;
  auto prod = poly_mod(poly_mul(decode(a), decode(b), p_), modulus_, p_);
  return encode(prod);
}

std::uint64_t FiniteField::pow(std::uint64_t a, std::uint64_t e) const {
  check_index(a);
  std::uint64_t result = 1, base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t FiniteField::inverse(std::uint64_t a) const {
  check_index(a);
  if (a == 0) throw domain_error("zero has no multiplicative inverse");
  return pow(a, size_ - 2);
}

std::uint64_t FiniteField::element_order(std::uint64_t a) const {
  check_index(a);
  if (a == 0) throw domain_error("additive identity has no multiplicative order");
  std::uint64_t x = a, e = 1;
  while (x != 1) {
    x = mul(x, a);
    ++e;
  }
  return e;
}

std::string FiniteField::to_string() const {
  std::string poly;
  for (unsigned i = m_ + 1; i-- > 0;) {
    const unsigned c = modulus_[i];
    if (c == 0) continue;
    if (!poly.empty()) poly += "+";
    if (i == 0) {
      poly += std::to_string(c);
    } else {
      if (c > 1) poly += std::to_string(c) + "*";
      poly += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return "GF(" + std::to_string(size_) + ") = GF(" + std::to_string(p_) + ")[x]/(" + poly + ")";
}

FiniteField field_construct(unsigned p, unsigned m, std::uint64_t size_cap) {
  return FiniteField(p, m, size_cap);
}

}  // namespace clt
