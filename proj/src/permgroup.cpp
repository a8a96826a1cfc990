#include "clt/permgroup.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace clt {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  if (images_.empty()) throw domain_error("permutation degree must be >= 1");
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t img : images_) {
    if (img >= images_.size() || seen[img])
      throw domain_error("permutation image list is not a bijection");
    seen[img] = true;
  }
}

Permutation Permutation::identity(unsigned degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(const std::vector<std::uint64_t>& images) {
  std::vector<std::uint32_t> zero_based;
  zero_based.reserve(images.size());
  for (std::uint64_t img : images) {
    if (img < 1 || img > images.size())
      throw domain_error("1-based image out of range 1.." + std::to_string(images.size()));
    zero_based.push_back(static_cast<std::uint32_t>(img - 1));
  }
  return Permutation(std::move(zero_based));
}

std::vector<std::uint64_t> Permutation::one_based_images() const {
  std::vector<std::uint64_t> out;
  out.reserve(images_.size());
  for (std::uint32_t img : images_) out.push_back(img + 1ull);
  return out;
}

Permutation Permutation::then(const Permutation& b) const {
  if (degree() != b.degree()) throw domain_error("cannot compose permutations of different degree");
  std::vector<std::uint32_t> images(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) images[x] = b.images_[images_[x]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> images(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) images[images_[x]] = static_cast<std::uint32_t>(x);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::uint64_t len = 0;
    std::size_t x = start;
    while (!seen[x]) {
      seen[x] = true;
      x = images_[x];
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t img : p.images()) {
    h ^= img;
    h *= 1099511628211ull;
  }
  return h;
}

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> generators,
                     std::size_t element_cap)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree_ < 1) throw domain_error("group degree must be >= 1");
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw domain_error("generator degree does not match group degree");

  elements_.push_back(Permutation::identity(degree_));
  index_.emplace(elements_.front(), 0);
  for (std::size_t at = 0; at < elements_.size(); ++at) {
    for (const auto& g : generators_) {
      Permutation next = elements_[at].then(g);
      if (index_.contains(next)) continue;
      if (elements_.size() >= element_cap)
        throw resource_error("group closure exceeds the element cap of " +
                             std::to_string(element_cap));
      index_.emplace(next, static_cast<std::uint32_t>(elements_.size()));
      elements_.push_back(std::move(next));
    }
  }

  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    inverse_[i] = index_.at(elements_[i].inverse());
}

bool PermGroup::contains(const Permutation& p) const { return index_.contains(p); }

std::uint32_t PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw domain_error("permutation is not an element of the group");
  return it->second;
}

std::uint32_t PermGroup::product(std::uint32_t a, std::uint32_t b) const {
  return index_.at(elements_[a].then(elements_[b]));
}

std::uint32_t PermGroup::inverse(std::uint32_t a) const { return inverse_[a]; }

std::uint64_t PermGroup::element_order(std::uint32_t a) const { return elements_[a].order(); }

std::vector<std::uint32_t> PermGroup::closure_of(const std::vector<std::uint32_t>& seed) const {
  std::vector<bool> in(elements_.size(), false);
  std::vector<std::uint32_t> closure{0};
  in[0] = true;
  for (std::uint32_t s : seed) {
    if (s >= elements_.size()) throw domain_error("element index out of range");
    if (!in[s]) {
      in[s] = true;
      closure.push_back(s);
    }
  }
  for (std::size_t at = 0; at < closure.size(); ++at) {
    for (std::uint32_t s : seed) {
      const std::uint32_t t = product(closure[at], s);
      if (!in[t]) {
        in[t] = true;
        closure.push_back(t);
      }
    }
  }
  std::sort(closure.begin(), closure.end());
  return closure;
}

bool PermGroup::is_subgroup_set(const std::vector<std::uint32_t>& set) const {
  if (set.empty() || !std::is_sorted(set.begin(), set.end())) return false;
  std::vector<bool> in(elements_.size(), false);
  for (std::uint32_t s : set) {
    if (s >= elements_.size() || in[s]) return false;
    in[s] = true;
  }
  for (std::uint32_t a : set)
    for (std::uint32_t b : set)
      if (!in[product(a, b)]) return false;
  return true;
}

PermGroup generate(unsigned degree, std::vector<Permutation> generators,
                   std::size_t element_cap) {
  return PermGroup(degree, std::move(generators), element_cap);
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h, std::size_t element_cap) {
  const unsigned degree = g.degree() + h.degree();
  std::vector<Permutation> gens;
  for (const auto& gen : g.generators()) {
    std::vector<std::uint32_t> images(degree);
    for (unsigned x = 0; x < g.degree(); ++x) images[x] = gen[x];
    for (unsigned x = 0; x < h.degree(); ++x) images[g.degree() + x] = g.degree() + x;
    gens.emplace_back(std::move(images));
  }
  for (const auto& gen : h.generators()) {
    std::vector<std::uint32_t> images(degree);
    for (unsigned x = 0; x < g.degree(); ++x) images[x] = x;
    for (unsigned x = 0; x < h.degree(); ++x) images[g.degree() + x] = g.degree() + gen[x];
    gens.emplace_back(std::move(images));
  }
  PermGroup prod(degree, std::move(gens), element_cap);
  if (prod.order() != g.order() * h.order())
    throw internal_error("direct product order mismatch");
  return prod;
}

PermGroup cyclic_group(std::uint64_t n, std::size_t element_cap) {
  if (n < 1) throw domain_error("cyclic_group requires n >= 1");
  if (n == 1) return PermGroup(1, {}, element_cap);
  std::vector<std::uint32_t> images(n);
  for (std::uint64_t x = 0; x < n; ++x) images[x] = static_cast<std::uint32_t>((x + 1) % n);
  return PermGroup(static_cast<unsigned>(n), {Permutation(std::move(images))}, element_cap);
}

PermGroup symmetric_group(unsigned n, std::size_t element_cap) {
  if (n < 1) throw domain_error("symmetric_group requires n >= 1");
  if (n == 1) return PermGroup(1, {}, element_cap);
  std::vector<std::uint32_t> swap01(n), cycle(n);
  std::iota(swap01.begin(), swap01.end(), 0u);
  std::swap(swap01[0], swap01[1]);
  for (unsigned x = 0; x < n; ++x) cycle[x] = (x + 1) % n;
  std::vector<Permutation> gens{Permutation(std::move(swap01))};
  if (n > 2) gens.emplace_back(std::move(cycle));
  return PermGroup(n, std::move(gens), element_cap);
}

namespace {

void require_subgroup(const PermGroup& g, const std::vector<std::uint32_t>& set,
                      const char* what) {
  if (!g.is_subgroup_set(set))
    throw domain_error(std::string(what) + " is not a closed subgroup element-set");
}

}  // namespace

bool is_normal(const PermGroup& g, const std::vector<std::uint32_t>& h) {
  require_subgroup(g, h, "H");
  std::vector<bool> in(g.order(), false);
  for (std::uint32_t x : h) in[x] = true;
  for (const auto& gen : g.generators()) {
    const std::uint32_t gi = g.index_of(gen);
    const std::uint32_t gi_inv = g.inverse(gi);
    for (std::uint32_t x : h)
      if (!in[g.product(g.product(gi, x), gi_inv)]) return false;
  }
  return true;
}

PermGroup quotient_group(const PermGroup& g, const std::vector<std::uint32_t>& n) {
  require_subgroup(g, n, "N");
  if (!is_normal(g, n)) throw domain_error("N is not normal in G");

  const std::uint32_t order = static_cast<std::uint32_t>(g.order());
  std::vector<std::uint32_t> coset(order, UINT32_MAX);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t e = 0; e < order; ++e) {
    if (coset[e] != UINT32_MAX) continue;
    const std::uint32_t id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(e);
    for (std::uint32_t x : n) coset[g.product(x, e)] = id;  // right coset Ne
  }

  const unsigned degree = static_cast<unsigned>(reps.size());
  std::vector<Permutation> gens;
  for (const auto& gen : g.generators()) {
    const std::uint32_t gi = g.index_of(gen);
    std::vector<std::uint32_t> images(degree);
    for (unsigned c = 0; c < degree; ++c) images[c] = coset[g.product(reps[c], gi)];
    gens.emplace_back(std::move(images));
  }
  PermGroup quotient(degree, std::move(gens));
  if (quotient.order() * n.size() != g.order())
    throw internal_error("quotient order is not |G|/|N|");
  return quotient;
}

GroupFile read_group_file(std::istream& in) {
  GroupFile out;
  std::string line;
  std::size_t line_no = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword) || keyword[0] == '#') continue;
    auto fail = [&](const std::string& msg) {
      throw domain_error("group file line " + std::to_string(line_no) + ": " + msg);
    };
    if (keyword == "degree") {
      if (have_degree) fail("duplicate degree line");
      long long degree = 0;
      if (!(ls >> degree) || degree < 1 || degree > 65535) fail("expected 'degree <N>' with N in 1..65535");
      out.degree = static_cast<unsigned>(degree);
      have_degree = true;
    } else if (keyword == "gen") {
      if (!have_degree) fail("'gen' before 'degree'");
      std::vector<std::uint64_t> images;
      long long img = 0;
      while (ls >> img) {
        if (img < 1) fail("image values must be >= 1");
        images.push_back(static_cast<std::uint64_t>(img));
      }
      if (!ls.eof()) fail("non-numeric image value");
      if (images.size() != out.degree)
        fail("expected " + std::to_string(out.degree) + " images, got " +
             std::to_string(images.size()));
      try {
        out.generators.push_back(Permutation::from_one_based(images));
      } catch (const domain_error& e) {
        fail(e.what());
      }
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
  }
  if (!have_degree) throw domain_error("group file has no degree line");
  return out;
}

GroupFile read_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open group file: " + path.string());
  return read_group_file(in);
}

}  // namespace clt
