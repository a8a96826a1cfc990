#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "clt/finitefield.hpp"

using namespace clt;

TEST_CASE("prime fields") {
  const FiniteField f3 = field_construct(3, 1);
  CHECK(f3.size() == 3);
  CHECK(f3.modulus() == std::vector<unsigned>{0, 1});  // x
  CHECK(f3.primitive() == 2);

  const FiniteField f2 = field_construct(2, 1);
  CHECK(f2.primitive() == 1);
  CHECK(f2.add(1, 1) == 0);
}

TEST_CASE("GF(4) and GF(9) canonical moduli") {
  const FiniteField f4 = field_construct(2, 2);
  CHECK(f4.modulus() == std::vector<unsigned>{1, 1, 1});  // x^2+x+1
  CHECK(f4.primitive() == 2);
  CHECK(f4.element_order(f4.primitive()) == 3);

  const FiniteField f9 = field_construct(3, 2);
  CHECK(f9.modulus() == std::vector<unsigned>{1, 0, 1});  // x^2+1
  CHECK(f9.element_order(f9.primitive()) == 8);
  CHECK(f9.pow(f9.primitive(), 8) == 1);
  CHECK(f9.pow(f9.primitive(), 4) != 1);
  // smallest index of full order: 2 is the scalar -1 (order 2), 3 is x
  // (order 4 since x^2 = -1), so 4 = 1+x is the first candidate.
  CHECK(f9.primitive() == 4);
}

TEST_CASE("identities and absorbing elements") {
  const FiniteField f = field_construct(5, 2);
  for (std::uint64_t a = 0; a < f.size(); ++a) {
    CHECK(f.add(a, 0) == a);
    CHECK(f.mul(a, 0) == 0);
    CHECK(f.mul(a, 1) == a);
    CHECK(f.add(a, f.neg(a)) == 0);
  }
  CHECK_THROWS_AS(f.mul(0, f.size()), domain_error);
  CHECK_THROWS_AS(f.inverse(0), domain_error);
}

TEST_CASE("field axioms hold exhaustively up to size 81") {
  for (const auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {5u, 2u}, {3u, 3u},
                            {7u, 2u}, {2u, 6u}, {3u, 4u}}) {
    const FiniteField f = field_construct(p, m);
    const std::uint64_t q = f.size();
    for (std::uint64_t a = 0; a < q; ++a) {
      for (std::uint64_t b = 0; b < q; ++b) {
        if (f.add(a, b) != f.add(b, a)) REQUIRE(false);
        if (f.mul(a, b) != f.mul(b, a)) REQUIRE(false);
        for (std::uint64_t c = 0; c < q; ++c) {
          if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) REQUIRE(false);
          if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) REQUIRE(false);
          if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) REQUIRE(false);
        }
      }
    }
    for (std::uint64_t a = 1; a < q; ++a)
      if (f.mul(a, f.inverse(a)) != 1) REQUIRE(false);
  }
}

TEST_CASE("the multiplicative group is cyclic: primitive powers cover it") {
  for (const auto [p, m] : {std::pair{2u, 4u}, {3u, 2u}, {5u, 2u}, {3u, 4u}, {2u, 6u}}) {
    const FiniteField f = field_construct(p, m);
    std::vector<bool> seen(f.size(), false);
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i + 1 < f.size(); ++i) {
      if (seen[x]) REQUIRE(false);
      seen[x] = true;
      x = f.mul(x, f.primitive());
    }
    CHECK(x == 1);  // full cycle closes
    for (std::uint64_t e = 1; e < f.size(); ++e)
      if (!seen[e]) REQUIRE(false);
  }
}

TEST_CASE("primitive element is the smallest-index generator") {
  for (const auto [p, m] : {std::pair{3u, 2u}, {2u, 4u}, {5u, 1u}, {7u, 1u}, {13u, 1u}}) {
    const FiniteField f = field_construct(p, m);
    for (std::uint64_t a = 1; a < f.primitive(); ++a)
      CHECK(f.element_order(a) < f.size() - 1);
    CHECK(f.element_order(f.primitive()) == f.size() - 1);
  }
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(field_construct(4, 1), domain_error);
  CHECK_THROWS_AS(field_construct(2, 0), domain_error);
  CHECK_THROWS_AS(field_construct(2, 20), resource_error);
  CHECK_THROWS_AS(field_construct(101, 2), resource_error);
}
