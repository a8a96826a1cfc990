#include <algorithm>

#include "clt/permgroup.hpp"
#include "clt/spectrum.hpp"

namespace clt {

namespace {

void require_subgroup(const PermGroup& g, const std::vector<std::uint32_t>& set,
                      const char* what) {
  if (!g.is_subgroup_set(set))
    throw domain_error(std::string(what) + " is not a closed subgroup element-set");
}

}  // namespace

bool verify_frobenius(const PermGroup& g, const std::vector<std::uint32_t>& n) {
  require_subgroup(g, n, "N");
  if (n.size() <= 1 || n.size() >= g.order()) return false;
  if (g.order() % n.size() != 0) return false;
  if (!is_normal(g, n)) return false;

  std::vector<bool> in_n(g.order(), false);
  for (std::uint32_t x : n) in_n[x] = true;

  const std::uint64_t complement_order = g.order() / n.size();
  for (const ElementSet& h : enumerate_subgroups(g)) {
    if (h.size() != complement_order) continue;
    std::size_t meet = 0;
    for (std::uint32_t x : h)
      if (in_n[x]) ++meet;
    if (meet != 1) continue;  // complements meet N in the identity only
    bool fixed_point_free = true;
    for (std::uint32_t hx : h) {
      if (hx == 0) continue;
      for (std::uint32_t nx : n) {
        if (nx == 0) continue;
        if (g.product(hx, nx) == g.product(nx, hx)) {
          fixed_point_free = false;
          break;
        }
      }
      if (!fixed_point_free) break;
    }
    if (fixed_point_free) return true;
  }
  return false;
}

std::string to_string(FrobeniusCase c) {
  switch (c) {
    case FrobeniusCase::in_kernel: return "in_kernel";
    case FrobeniusCase::trivial_meet: return "trivial_meet";
    case FrobeniusCase::frobenius_sub: return "frobenius_sub";
  }
  throw internal_error("unknown FrobeniusCase");
}

FrobeniusCase classify_in_frobenius(const PermGroup& g, const std::vector<std::uint32_t>& n,
                                    const std::vector<std::uint32_t>& k) {
  require_subgroup(g, n, "N");
  require_subgroup(g, k, "K");
  std::vector<std::uint32_t> meet;
  std::set_intersection(k.begin(), k.end(), n.begin(), n.end(), std::back_inserter(meet));
  if (meet.size() == k.size()) return FrobeniusCase::in_kernel;
  if (meet.size() == 1) return FrobeniusCase::trivial_meet;
  return FrobeniusCase::frobenius_sub;
}

}  // namespace clt
