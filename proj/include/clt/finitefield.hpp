#ifndef CLT_FINITEFIELD_HPP
#define CLT_FINITEFIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "clt/util.hpp"

namespace clt {

inline constexpr std::uint64_t kDefaultFieldCap = 10000;

// GF(p^m) with elements indexed 0 .. p^m-1: index = sum c_i * p^i where
// (c_0, ..., c_{m-1}) are the coefficients of the element as a polynomial
// in the generator, constant term first. Index 0 is the additive identity
// and index 1 the multiplicative identity.
class FiniteField {
 public:
  FiniteField(unsigned p, unsigned m, std::uint64_t size_cap = kDefaultFieldCap);

  unsigned p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint64_t size() const { return size_; }
  // Monic irreducible modulus, constant term first, length m+1.
  const std::vector<unsigned>& modulus() const { return modulus_; }
  // Smallest element index of multiplicative order size()-1.
  std::uint64_t primitive() const { return primitive_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inverse(std::uint64_t a) const;  // a != 0
  // Multiplicative order of a nonzero element.
  std::uint64_t element_order(std::uint64_t a) const;

  std::string to_string() const;  // "GF(9) = GF(3)[x]/(x^2+1)"

 private:
  unsigned p_, m_;
  std::uint64_t size_;
  std::vector<unsigned> modulus_;
  std::uint64_t primitive_;

  void check_index(std::uint64_t a) const;
  std::vector<unsigned> decode(std::uint64_t a) const;
  std::uint64_t encode(const std::vector<unsigned>& coeffs) const;
};

// Builds GF(p^m) with the lexicographically smallest monic irreducible
// modulus (coefficients compared constant-term first).
FiniteField field_construct(unsigned p, unsigned m,
                            std::uint64_t size_cap = kDefaultFieldCap);

}  // namespace clt

#endif
