#ifndef CLT_TESTS_ORACLE_NAIVE_HPP
#define CLT_TESTS_ORACLE_NAIVE_HPP

// Second, deliberately simple subgroup enumerator used only to cross-check
// the join-closure oracle: grow each known subgroup by one element at a
// time and close. Shares no code with the production path beyond
// PermGroup::closure_of.

#include <algorithm>
#include <set>
#include <vector>

#include "clt/permgroup.hpp"
#include "clt/spectrum.hpp"

namespace clt_tests {

inline std::vector<clt::ElementSet> naive_enumerate(const clt::PermGroup& g) {
  std::set<clt::ElementSet> all;
  std::vector<clt::ElementSet> work;
  const clt::ElementSet trivial{0};
  all.insert(trivial);
  work.push_back(trivial);
  while (!work.empty()) {
    const clt::ElementSet h = std::move(work.back());
    work.pop_back();
    for (std::uint32_t x = 0; x < g.order(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      clt::ElementSet seed = h;
      seed.push_back(x);
      clt::ElementSet grown = g.closure_of(seed);
      if (all.insert(grown).second) work.push_back(std::move(grown));
    }
  }
  std::vector<clt::ElementSet> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](const clt::ElementSet& a, const clt::ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Rebuilds a subgroup as a standalone group on the same points.
inline clt::PermGroup subgroup_as_group(const clt::PermGroup& g, const clt::ElementSet& set) {
  std::vector<clt::Permutation> gens;
  gens.reserve(set.size());
  for (std::uint32_t e : set) gens.push_back(g.element(e));
  return clt::PermGroup(g.degree(), std::move(gens));
}

// Translates parent element indices into the standalone subgroup's indexing.
inline clt::ElementSet map_into(const clt::PermGroup& sub, const clt::PermGroup& parent,
                                const clt::ElementSet& set) {
  clt::ElementSet out;
  out.reserve(set.size());
  for (std::uint32_t e : set) out.push_back(sub.index_of(parent.element(e)));
  std::sort(out.begin(), out.end());
  return out;
}

// The subgroup of elements commuting with everything.
inline clt::ElementSet center_of(const clt::PermGroup& g) {
  clt::ElementSet out;
  for (std::uint32_t e = 0; e < g.order(); ++e) {
    bool central = true;
    for (std::uint32_t x = 0; x < g.order() && central; ++x)
      central = g.product(e, x) == g.product(x, e);
    if (central) out.push_back(e);
  }
  return out;
}

}  // namespace clt_tests

#endif
