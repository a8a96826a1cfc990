#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "clt/builtins.hpp"
#include "clt/constructions.hpp"
#include "clt/permgroup.hpp"
#include "oracle_naive.hpp"

using namespace clt;

namespace {

Permutation perm(std::initializer_list<std::uint64_t> one_based) {
  return Permutation::from_one_based(std::vector<std::uint64_t>(one_based));
}

// Elements of order dividing 2 in A4 form the Klein four-group.
ElementSet klein_in_a4(const PermGroup& a4) {
  ElementSet v4;
  for (std::uint32_t e = 0; e < a4.order(); ++e)
    if (a4.element_order(e) <= 2) v4.push_back(e);
  REQUIRE(v4.size() == 4);
  return v4;
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation p = perm({2, 3, 1});
  CHECK(p.order() == 3);
  CHECK(p.then(p).then(p).is_identity());
  CHECK(p.then(p.inverse()).is_identity());
  CHECK(p.one_based_images() == std::vector<std::uint64_t>{2, 3, 1});
  CHECK_THROWS_AS(Permutation({0, 0, 1}), domain_error);
  CHECK_THROWS_AS(perm({1, 2, 4}), domain_error);
  CHECK_THROWS_AS(perm({1, 2}).then(perm({1, 2, 3})), domain_error);
}

TEST_CASE("generate worked examples") {
  CHECK(PermGroup(3, {}).order() == 1);
  CHECK(PermGroup(3, {perm({2, 3, 1})}).order() == 3);
  const PermGroup a4(4, {perm({2, 1, 4, 3}), perm({2, 3, 1, 4})});
  CHECK(a4.order() == 12);
  CHECK(a4.element(0).is_identity());
}

TEST_CASE("generation is deterministic") {
  const PermGroup g1(4, {perm({2, 1, 4, 3}), perm({2, 3, 1, 4})});
  const PermGroup g2(4, {perm({2, 1, 4, 3}), perm({2, 3, 1, 4})});
  CHECK(g1.elements() == g2.elements());
}

TEST_CASE("element cap is enforced and named") {
  try {
    PermGroup(6, symmetric_group(6).generators(), 50);
    REQUIRE(false);
  } catch (const resource_error& e) {
    CHECK(std::string(e.what()).find("50") != std::string::npos);
  }
}

TEST_CASE("products, cyclic and symmetric groups") {
  const PermGroup a4 = builtin_group("A4");
  CHECK(direct_product(a4, cyclic_group(1)).order() == 12);
  CHECK(direct_product(a4, cyclic_group(5)).order() == 60);
  CHECK(direct_product(agl1(3, 2), cyclic_group(5)).order() == 360);

  const PermGroup c9 = cyclic_group(9);
  CHECK(c9.order() == 9);
  std::set<std::uint64_t> orders;
  for (std::uint32_t e = 0; e < c9.order(); ++e) orders.insert(c9.element_order(e));
  CHECK(orders == std::set<std::uint64_t>{1, 3, 9});

  CHECK(symmetric_group(1).order() == 1);
  CHECK(symmetric_group(2).order() == 2);
  CHECK(symmetric_group(3).order() == 6);
  CHECK(symmetric_group(5).order() == 120);
}

TEST_CASE("closure and subgroup-set validation") {
  const PermGroup a4 = builtin_group("A4");
  const ElementSet v4 = klein_in_a4(a4);
  CHECK(a4.is_subgroup_set(v4));
  CHECK(a4.closure_of({}) == ElementSet{0});
  CHECK(a4.closure_of(v4) == v4);
  CHECK_FALSE(a4.is_subgroup_set({1}));  // missing identity
}

TEST_CASE("normality") {
  const PermGroup a4 = builtin_group("A4");
  CHECK(is_normal(a4, ElementSet{0}));
  CHECK(is_normal(a4, klein_in_a4(a4)));

  // one double transposition generates a non-normal C2
  std::uint32_t invol = 0;
  for (std::uint32_t e = 1; e < a4.order(); ++e)
    if (a4.element_order(e) == 2) {
      invol = e;
      break;
    }
  CHECK_FALSE(is_normal(a4, a4.closure_of({invol})));
  CHECK_THROWS_AS(is_normal(a4, ElementSet{0, invol, 5, 7}), domain_error);
}

TEST_CASE("quotient groups") {
  const PermGroup a4 = builtin_group("A4");
  const PermGroup q = quotient_group(a4, klein_in_a4(a4));
  CHECK(q.order() == 3);

  const PermGroup c6 = cyclic_group(6);
  ElementSet c2;
  for (std::uint32_t e = 0; e < 6; ++e)
    if (c6.element_order(e) <= 2) c2.push_back(e);
  std::sort(c2.begin(), c2.end());
  const PermGroup c3 = quotient_group(c6, c2);
  CHECK(c3.order() == 3);

  ElementSet all(a4.order());
  std::iota(all.begin(), all.end(), 0u);
  CHECK(quotient_group(a4, all).order() == 1);

  std::uint32_t invol = 0;
  for (std::uint32_t e = 1; e < a4.order(); ++e)
    if (a4.element_order(e) == 2) {
      invol = e;
      break;
    }
  CHECK_THROWS_AS(quotient_group(a4, a4.closure_of({invol})), domain_error);
}

TEST_CASE("Frobenius recognition") {
  const PermGroup a4 = builtin_group("A4");
  CHECK(verify_frobenius(a4, klein_in_a4(a4)));

  const PermGroup c6 = cyclic_group(6);
  ElementSet c3;
  for (std::uint32_t e = 0; e < 6; ++e)
    if (c6.element_order(e) == 1 || c6.element_order(e) == 3) c3.push_back(e);
  std::sort(c3.begin(), c3.end());
  CHECK_FALSE(verify_frobenius(c6, c3));

  const PermGroup agl9 = agl1(3, 2);
  const ElementSet kernel = translation_subgroup(agl9);
  CHECK(kernel.size() == 9);
  CHECK(verify_frobenius(agl9, kernel));

  // trivial and full subgroups are never Frobenius kernels
  CHECK_FALSE(verify_frobenius(a4, ElementSet{0}));
}

TEST_CASE("complement order divides kernel order minus one") {
  for (const auto [p, m, h] :
       {std::tuple{2u, 2u, 3ull}, {3u, 2u, 4ull}, {3u, 2u, 8ull}, {5u, 2u, 3ull},
        {2u, 4u, 5ull}, {7u, 1u, 6ull}}) {
    const PermGroup g = frobenius_subgroup(p, m, h);
    const ElementSet kernel = translation_subgroup(g);
    CHECK(verify_frobenius(g, kernel));
    CHECK((kernel.size() - 1) % (g.order() / kernel.size()) == 0);
  }
}

TEST_CASE("classification trichotomy in Frobenius groups") {
  const PermGroup a4 = builtin_group("A4");
  const ElementSet v4 = klein_in_a4(a4);
  CHECK(classify_in_frobenius(a4, v4, v4) == FrobeniusCase::in_kernel);
  CHECK(classify_in_frobenius(a4, v4, ElementSet{0}) == FrobeniusCase::in_kernel);

  // a point stabilizer C3 meets the kernel trivially
  std::uint32_t three = 0;
  for (std::uint32_t e = 1; e < a4.order(); ++e)
    if (a4.element_order(e) == 3) {
      three = e;
      break;
    }
  CHECK(classify_in_frobenius(a4, v4, a4.closure_of({three})) == FrobeniusCase::trivial_meet);
}

TEST_CASE("the order-6 subgroup of C3^2 x| C4 is a Frobenius subgroup over C3") {
  const PermGroup g = frobenius_subgroup(3, 2, 4);
  const ElementSet kernel = translation_subgroup(g);
  REQUIRE(verify_frobenius(g, kernel));
  bool found = false;
  for (const ElementSet& k : enumerate_subgroups(g)) {
    if (k.size() != 6) continue;
    found = true;
    CHECK(classify_in_frobenius(g, kernel, k) == FrobeniusCase::frobenius_sub);
    // third case: K is itself Frobenius with kernel K meet N
    const PermGroup k_grp = clt_tests::subgroup_as_group(g, k);
    ElementSet meet;
    std::set_intersection(k.begin(), k.end(), kernel.begin(), kernel.end(),
                          std::back_inserter(meet));
    CHECK(meet.size() == 3);
    CHECK(verify_frobenius(k_grp, clt_tests::map_into(k_grp, g, meet)));
  }
  CHECK(found);
}

TEST_CASE("exhaustive trichotomy over all subgroups of Frobenius groups") {
  // groups built over a field, so the translation kernel is identifiable
  for (const auto& [name, build] :
       std::vector<std::pair<std::string, PermGroup>>{{"A4", g_pqn(2, 3, 0)},
                                                      {"36", frobenius_subgroup(3, 2, 4)},
                                                      {"AGL(1,9)", agl1(3, 2)},
                                                      {"75", g_pqn(5, 3, 0)}}) {
    const ElementSet kernel = translation_subgroup(build);
    REQUIRE(verify_frobenius(build, kernel));
    for (const ElementSet& k : enumerate_subgroups(build)) {
      const FrobeniusCase c = classify_in_frobenius(build, kernel, k);
      ElementSet meet;
      std::set_intersection(k.begin(), k.end(), kernel.begin(), kernel.end(),
                            std::back_inserter(meet));
      switch (c) {
        case FrobeniusCase::in_kernel:
          CHECK(meet.size() == k.size());
          break;
        case FrobeniusCase::trivial_meet:
          CHECK(meet.size() == 1);
          CHECK(k.size() > 1);
          break;
        case FrobeniusCase::frobenius_sub: {
          const PermGroup k_grp = clt_tests::subgroup_as_group(build, k);
          CHECK(verify_frobenius(k_grp, clt_tests::map_into(k_grp, build, meet)));
          break;
        }
      }
    }
  }
}

TEST_CASE("group file parsing") {
  std::istringstream good("# the Klein four-group\n"
                          "degree 4\n"
                          "\n"
                          "gen 2 1 4 3\n"
                          "gen 3 4 1 2\n");
  const GroupFile gf = read_group_file(good);
  CHECK(gf.degree == 4);
  CHECK(gf.generators.size() == 2);
  CHECK(PermGroup(gf.degree, gf.generators).order() == 4);

  auto expect_error_on_line = [](const std::string& text, const std::string& line) {
    std::istringstream in(text);
    try {
      read_group_file(in);
      REQUIRE(false);
    } catch (const domain_error& e) {
      CHECK(std::string(e.what()).find("line " + line) != std::string::npos);
    }
  };
  expect_error_on_line("degree 3\ngen 1 2\n", "2");
  expect_error_on_line("gen 1 2 3\n", "1");
  expect_error_on_line("degree 3\ndegree 4\n", "2");
  expect_error_on_line("degree 3\ngen 1 2 4\n", "2");
  expect_error_on_line("degree 3\nfoo 1\n", "2");
  CHECK_THROWS_AS(
      [] {
        std::istringstream in("# nothing\n");
        return read_group_file(in);
      }(),
      domain_error);
}

TEST_CASE("group order divides degree factorial") {
  for (const auto& g : {builtin_group("A4"), builtin_group("Q8"), builtin_group("SL23"),
                        symmetric_group(5), cyclic_group(9), agl1(3, 2)}) {
    std::uint64_t fact = 1;
    for (unsigned i = 2; i <= g.degree(); ++i) fact *= i;
    CHECK(fact % g.order() == 0);
  }
}

TEST_CASE("composition is associative and inverses are two-sided") {
  const PermGroup s5 = symmetric_group(5);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(s5.order() - 1));
  for (int i = 0; i < 200; ++i) {
    const Permutation &a = s5.element(pick(rng)), &b = s5.element(pick(rng)),
                      &c = s5.element(pick(rng));
    CHECK(a.then(b).then(c) == a.then(b.then(c)));
    CHECK(a.then(a.inverse()).is_identity());
    CHECK(a.inverse().then(a).is_identity());
  }
}

TEST_CASE("builtins resolve to their documented orders") {
  const std::vector<std::pair<std::string, std::uint64_t>> expected = {
      {"A4", 12},      {"S3", 6},        {"S4", 24},     {"S5", 120},
      {"S6", 720},     {"SL23", 24},     {"V4", 4},      {"Q8", 8},
      {"agl:2:2", 12}, {"cyclic:15", 15}, {"gpqn:2:3:1", 36}, {"sym:4", 24}};
  for (const auto& [name, order] : expected) CHECK(builtin_group(name).order() == order);
  CHECK_THROWS_AS(builtin_group("nope"), domain_error);
  CHECK_THROWS_AS(builtin_group("agl:2"), domain_error);
  CHECK_THROWS_AS(builtin_group("cyclic:x"), domain_error);
}

TEST_CASE("1-based points at the boundary, 0-based inside") {
  std::istringstream in("degree 3\ngen 2 3 1\n");
  const GroupFile gf = read_group_file(in);
  CHECK(gf.generators[0][0] == 1);  // point 1 -> 2 is index 0 -> 1 inside
  CHECK(gf.generators[0].one_based_images() == std::vector<std::uint64_t>{2, 3, 1});
}
