#include "clt/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "clt/numtheory.hpp"

namespace clt {

namespace {

struct Bitset {
  std::vector<std::uint64_t> words;

  Bitset() = default;
  explicit Bitset(std::size_t bits) : words((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words[i >> 6] |= 1ull << (i & 63); }
  bool test(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  void clear() { std::fill(words.begin(), words.end(), 0); }

  void and_assign(const Bitset& other) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] &= other.words[i];
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t w : words) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      std::uint64_t w = words[wi];
      while (w) {
        const int b = std::countr_zero(w);
        fn(static_cast<std::uint32_t>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;
};

// hash -> indices into a bitset store; collisions resolved by full compare
using HashIndex = std::unordered_map<std::uint64_t, std::vector<std::uint32_t>>;

std::uint32_t find_bits(const HashIndex& index, const std::vector<Bitset>& store,
                        const Bitset& bits) {
  auto it = index.find(bits.hash());
  if (it != index.end())
    for (std::uint32_t id : it->second)
      if (store[id] == bits) return id;
  return UINT32_MAX;
}

// The multiplication table and everything derived from element indices.
class GroupTable {
 public:
  explicit GroupTable(const PermGroup& g) : n_(static_cast<std::uint32_t>(g.order())) {
    // Generator columns by hash lookup, then the rest by the BFS recurrence
    // b = parent * gen  =>  a*b = (a*parent)*gen.
    std::vector<std::uint32_t> gen_idx;
    for (const auto& gen : g.generators()) gen_idx.push_back(g.index_of(gen));
    std::vector<std::vector<std::uint16_t>> cols(gen_idx.size());
    for (std::size_t j = 0; j < gen_idx.size(); ++j) {
      cols[j].resize(n_);
      for (std::uint32_t a = 0; a < n_; ++a)
        cols[j][a] = static_cast<std::uint16_t>(g.product(a, gen_idx[j]));
    }

    table_.assign(static_cast<std::size_t>(n_) * n_, 0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> derivation(n_, {UINT32_MAX, 0});
    std::vector<std::uint32_t> bfs_order;
    bfs_order.reserve(n_);
    {
      std::vector<bool> seen(n_, false);
      seen[0] = true;
      bfs_order.push_back(0);
      for (std::size_t at = 0; at < bfs_order.size(); ++at) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
          const std::uint32_t t = cols[j][bfs_order[at]];
          if (!seen[t]) {
            seen[t] = true;
            derivation[t] = {bfs_order[at], static_cast<std::uint32_t>(j)};
            bfs_order.push_back(t);
          }
        }
      }
      if (bfs_order.size() != n_) throw internal_error("generator columns do not span the group");
    }
    for (std::uint32_t b : bfs_order) {
      if (b == 0) {
        for (std::uint32_t a = 0; a < n_; ++a)
          table_[static_cast<std::size_t>(a) * n_] = static_cast<std::uint16_t>(a);
        continue;
      }
      const auto [parent, j] = derivation[b];
      const auto& col = cols[j];
      for (std::uint32_t a = 0; a < n_; ++a)
        table_[static_cast<std::size_t>(a) * n_ + b] =
            col[table_[static_cast<std::size_t>(a) * n_ + parent]];
    }

    inverse_.resize(n_);
    for (std::uint32_t a = 0; a < n_; ++a)
      inverse_[a] = static_cast<std::uint16_t>(g.inverse(a));

    // conjugation maps e -> g^-1 e g, one per group generator
    conj_maps_.resize(gen_idx.size());
    for (std::size_t j = 0; j < gen_idx.size(); ++j) {
      conj_maps_[j].resize(n_);
      for (std::uint32_t e = 0; e < n_; ++e)
        conj_maps_[j][e] = mul(mul(inv(gen_idx[j]), e), gen_idx[j]);
    }
  }

  std::uint32_t order() const { return n_; }
  std::uint16_t mul(std::uint32_t a, std::uint32_t b) const {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  std::uint16_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint16_t conj(std::uint32_t e, std::uint32_t x) const {  // x^-1 e x
    return mul(mul(inv(x), e), x);
  }
  const std::vector<std::vector<std::uint16_t>>& conj_maps() const { return conj_maps_; }

  // <gens> as a bitset, by BFS from the identity.
  void close(const std::vector<std::uint16_t>& gens, Bitset& out,
             std::vector<std::uint16_t>& stack) const {
    out.clear();
    out.set(0);
    stack.clear();
    stack.push_back(0);
    while (!stack.empty()) {
      const std::uint32_t a = stack.back();
      stack.pop_back();
      for (std::uint16_t x : gens) {
        const std::uint16_t t = mul(a, x);
        if (!out.test(t)) {
          out.set(t);
          stack.push_back(t);
        }
      }
    }
  }

 private:
  std::uint32_t n_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inverse_;
  std::vector<std::vector<std::uint16_t>> conj_maps_;
};

// Subgroup enumeration by conjugacy-class-reduced join closure. Seeds are
// the cyclic subgroups; each class representative is joined with cyclic
// subgroups of prime-power order, reduced to orbit representatives under
// the centralizer of the class rep (conjugate partners give conjugate
// joins). Every discovered class is expanded to its full conjugation orbit
// in a raw-bitset store, so join results dedup with a single lookup.
//
// Completeness: any subgroup K with maximal subgroup M satisfies
// K = <M, x_p> for some prime-power part x_p of any x in K \ M, so the
// class of K is reached from the class of M.
class Lattice {
 public:
  Lattice(const GroupTable& table, unsigned workers) : table_(table) {
    seed_cyclics();
    cache_centralizers();
    run_rounds(workers);
  }

  const std::vector<Bitset>& store() const { return store_; }
  std::uint64_t class_count() const { return class_gens_.size(); }
  std::uint64_t subgroup_count() const { return store_.size(); }
  std::vector<std::uint64_t> realized_orders() const {
    std::vector<std::uint64_t> sizes;
    sizes.reserve(class_sizes_.size());
    for (std::uint32_t s : class_sizes_) sizes.push_back(s);
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    return sizes;
  }
  const std::vector<std::uint32_t>& class_sizes() const { return class_sizes_; }

 private:
  struct Candidate {
    Bitset bits;
    std::vector<std::uint16_t> gens;
  };

  const GroupTable& table_;
  std::vector<Bitset> store_;  // every subgroup, all conjugates
  HashIndex index_;
  std::vector<std::uint32_t> class_rep_;  // class id -> store id of the rep
  std::vector<std::uint32_t> class_sizes_;
  std::vector<std::vector<std::uint16_t>> class_gens_;

  std::vector<std::uint16_t> partner_elt_;   // partner id -> generator element
  std::vector<std::uint32_t> elt_partner_;   // element -> partner id (or ~0)
  std::unordered_map<std::uint16_t, Bitset> centralizer_of_;  // per gens-list element

  void insert_class(Bitset bits, std::vector<std::uint16_t> gens) {
    const std::uint32_t store_id = static_cast<std::uint32_t>(store_.size());
    index_[bits.hash()].push_back(store_id);
    store_.push_back(std::move(bits));
    class_rep_.push_back(store_id);
    class_sizes_.push_back(static_cast<std::uint32_t>(store_[store_id].count()));
    class_gens_.push_back(std::move(gens));

    // expand the conjugation orbit into the store
    std::vector<std::uint32_t> queue{store_id};
    Bitset image(table_.order());
    while (!queue.empty()) {
      const std::uint32_t at = queue.back();
      queue.pop_back();
      for (const auto& cmap : table_.conj_maps()) {
        image.clear();
        store_[at].for_each([&](std::uint32_t e) { image.set(cmap[e]); });
        if (find_bits(index_, store_, image) != UINT32_MAX) continue;
        const std::uint32_t id = static_cast<std::uint32_t>(store_.size());
        index_[image.hash()].push_back(id);
        store_.push_back(image);
        queue.push_back(id);
      }
    }
  }

  void seed_cyclics() {
    const std::uint32_t n = table_.order();
    elt_partner_.assign(n, UINT32_MAX);
    HashIndex cyclic_index;
    std::vector<Bitset> cyclic_store;
    for (std::uint32_t x = 0; x < n; ++x) {
      Bitset bits(n);
      bits.set(0);
      std::uint32_t size = 1, e = x;
      while (e != 0) {
        bits.set(e);
        e = table_.mul(e, x);
        ++size;
      }
      if (x == 0) size = 1;
      const bool prime_power = size > 1 && factorize(size).parts.size() == 1;
      if (prime_power) {
        std::uint32_t pid = find_bits(cyclic_index, cyclic_store, bits);
        if (pid == UINT32_MAX) {
          pid = static_cast<std::uint32_t>(cyclic_store.size());
          cyclic_index[bits.hash()].push_back(pid);
          cyclic_store.push_back(bits);
          partner_elt_.push_back(static_cast<std::uint16_t>(x));
        }
        elt_partner_[x] = pid;
      }
      if (find_bits(index_, store_, bits) == UINT32_MAX)
        insert_class(std::move(bits), {static_cast<std::uint16_t>(x)});
    }
  }

  Bitset element_centralizer(std::uint16_t h) const {
    Bitset out(table_.order());
    for (std::uint32_t g = 0; g < table_.order(); ++g)
      if (table_.mul(g, h) == table_.mul(h, g)) out.set(g);
    return out;
  }

  void cache_centralizers() {
    for (std::uint16_t x : partner_elt_)
      if (!centralizer_of_.contains(x)) centralizer_of_.emplace(x, element_centralizer(x));
    for (const auto& gens : class_gens_)
      for (std::uint16_t x : gens)
        if (!centralizer_of_.contains(x)) centralizer_of_.emplace(x, element_centralizer(x));
  }

  // Small generating set for a subgroup given as a bitset.
  std::vector<std::uint16_t> generators_of(const Bitset& bits) const {
    std::vector<std::uint16_t> gens;
    Bitset closed(table_.order());
    std::vector<std::uint16_t> stack;
    table_.close(gens, closed, stack);
    std::size_t have = closed.count();
    const std::size_t want = bits.count();
    for (std::uint32_t e = 0; have < want && e < table_.order(); ++e) {
      if (!bits.test(e) || closed.test(e)) continue;
      gens.push_back(static_cast<std::uint16_t>(e));
      table_.close(gens, closed, stack);
      have = closed.count();
    }
    return gens;
  }

  // Partner ids reduced to orbit representatives under conjugation by the
  // given centralizer; the result is cached per centralizer bitset. The
  // returned reference is only valid until the next call with the same
  // cache (bucket vectors may reallocate).
  using PartnerRepsCache = std::vector<std::pair<Bitset, std::vector<std::uint16_t>>>;

  const std::vector<std::uint16_t>& partner_reps(
      const Bitset& centralizer, std::unordered_map<std::uint64_t, PartnerRepsCache>& cache)
      const {
    auto& bucket = cache[centralizer.hash()];
    for (const auto& entry : bucket)
      if (entry.first == centralizer) return entry.second;

    const std::vector<std::uint16_t> cgens = generators_of(centralizer);
    std::vector<std::uint16_t> reps;
    std::vector<bool> visited(partner_elt_.size(), false);
    std::vector<std::uint16_t> queue;
    for (std::uint32_t pid = 0; pid < partner_elt_.size(); ++pid) {
      if (visited[pid]) continue;
      visited[pid] = true;
      reps.push_back(partner_elt_[pid]);
      queue.assign(1, partner_elt_[pid]);
      while (!queue.empty()) {
        const std::uint16_t x = queue.back();
        queue.pop_back();
        for (std::uint16_t c : cgens) {
          const std::uint16_t y = table_.conj(x, c);
          const std::uint32_t qid = elt_partner_[y];
          if (!visited[qid]) {
            visited[qid] = true;
            queue.push_back(y);
          }
        }
      }
    }
    bucket.emplace_back(centralizer, std::move(reps));
    return bucket.back().second;
  }

  void join_slice(std::uint32_t begin, std::uint32_t end, std::vector<Candidate>& out) const {
    Bitset scratch(table_.order()), centralizer(table_.order());
    std::vector<std::uint16_t> stack, gens;
    HashIndex local_index;
    std::vector<Bitset> local_store;
    std::unordered_map<std::uint64_t, PartnerRepsCache> reps_cache;
    for (std::uint32_t cls = begin; cls < end; ++cls) {
      const Bitset& rep = store_[class_rep_[cls]];
      const auto& rep_gens = class_gens_[cls];

      std::fill(centralizer.words.begin(), centralizer.words.end(), ~0ull);
      for (std::uint16_t x : rep_gens) centralizer.and_assign(centralizer_of_.at(x));

      for (std::uint16_t x : partner_reps(centralizer, reps_cache)) {
        if (rep.test(x)) continue;  // <H, x> = H
        gens = rep_gens;
        gens.push_back(x);
        table_.close(gens, scratch, stack);
        if (find_bits(index_, store_, scratch) != UINT32_MAX) continue;
        if (find_bits(local_index, local_store, scratch) != UINT32_MAX) continue;
        local_index[scratch.hash()].push_back(static_cast<std::uint32_t>(local_store.size()));
        local_store.push_back(scratch);
        out.push_back({scratch, gens});
      }
    }
  }

  void run_rounds(unsigned workers) {
    std::uint32_t round_begin = 0;
    while (round_begin < class_gens_.size()) {
      const std::uint32_t round_end = static_cast<std::uint32_t>(class_gens_.size());
      const std::uint32_t span = round_end - round_begin;
      const unsigned nworkers = std::max(1u, std::min<unsigned>(workers, span));
      std::vector<std::vector<Candidate>> found(nworkers);
      if (nworkers == 1) {
        join_slice(round_begin, round_end, found[0]);
      } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nworkers; ++w) {
          const std::uint32_t lo =
              round_begin +
              static_cast<std::uint32_t>((static_cast<std::uint64_t>(span) * w) / nworkers);
          const std::uint32_t hi =
              round_begin +
              static_cast<std::uint32_t>((static_cast<std::uint64_t>(span) * (w + 1)) / nworkers);
          pool.emplace_back([this, lo, hi, &found, w] { join_slice(lo, hi, found[w]); });
        }
        for (auto& t : pool) t.join();
      }
      round_begin = round_end;
      for (auto& slice : found)
        for (auto& cand : slice)
          if (find_bits(index_, store_, cand.bits) == UINT32_MAX)
            insert_class(std::move(cand.bits), std::move(cand.gens));
    }
  }
};

GroupTable make_table_checked(const PermGroup& g, const OracleOptions& opts) {
  const std::size_t cap = std::min(opts.order_cap, kOracleIndexCap);
  if (g.order() > cap)
    throw resource_error("group order " + std::to_string(g.order()) +
                         " exceeds the oracle cap of " + std::to_string(cap));
  return GroupTable(g);
}

std::vector<ElementSet> to_sorted_sets(const std::vector<Bitset>& store) {
  std::vector<ElementSet> out;
  out.reserve(store.size());
  for (const auto& bits : store) {
    ElementSet set;
    set.reserve(bits.count());
    bits.for_each([&](std::uint32_t e) { set.push_back(e); });
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

SpectrumReport build_report(const PermGroup& g, const Lattice& lattice) {
  SpectrumReport report;
  report.group_order = g.order();
  report.subgroup_count = lattice.subgroup_count();
  report.conjugacy_class_count = lattice.class_count();
  report.realized_orders = lattice.realized_orders();

  const std::vector<std::uint64_t> divs = divisors(report.group_order);
  std::set_difference(divs.begin(), divs.end(), report.realized_orders.begin(),
                      report.realized_orders.end(), std::back_inserter(report.missing_orders));

  report.D = report.realized_orders.size();
  report.tau = divs.size();
  report.degree = Rational(report.D, report.tau);

  // Always-on self-checks; all are O(tau) given the enumeration.
  if (report.D + report.missing_orders.size() != report.tau)
    throw internal_error("D + |missing| != tau");
  for (std::uint64_t size : report.realized_orders)
    if (report.group_order % size != 0)
      throw internal_error("realized order violates Lagrange");
  if (report.realized_orders.front() != 1 || report.realized_orders.back() != report.group_order)
    throw internal_error("trivial or full subgroup missing from the enumeration");
  if (report.group_order > 1) {
    for (const auto& pp : factorize(report.group_order).parts) {
      std::uint64_t q = 1;
      for (unsigned e = 1; e <= pp.exponent; ++e) {
        q *= pp.prime;
        if (!std::binary_search(report.realized_orders.begin(), report.realized_orders.end(), q))
          throw internal_error("prime-power divisor " + std::to_string(q) +
                               " not realized (Sylow violation)");
      }
    }
  }
  return report;
}

}  // namespace

std::size_t default_oracle_cap() {
  if (const char* env = std::getenv("CLT_ORACLE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > kOracleIndexCap)
      throw domain_error("CLT_ORACLE_CAP must be an integer in 1.." +
                         std::to_string(kOracleIndexCap));
    return static_cast<std::size_t>(v);
  }
  return 2000;
}

std::vector<ElementSet> enumerate_subgroups(const PermGroup& g, const OracleOptions& opts) {
  const GroupTable table = make_table_checked(g, opts);
  return to_sorted_sets(Lattice(table, opts.workers).store());
}

SpectrumReport spectrum(const PermGroup& g, const OracleOptions& opts) {
  const GroupTable table = make_table_checked(g, opts);
  return build_report(g, Lattice(table, opts.workers));
}

bool is_clt(const PermGroup& g, const OracleOptions& opts) {
  return spectrum(g, opts).missing_orders.empty();
}

LowerBoundReport check_lower_bound(const PermGroup& g, const OracleOptions& opts) {
  if (g.order() < 2 || factorize(g.order()).parts.size() < 2)
    throw domain_error("lower bound requires at least two distinct prime factors");
  const auto fac = factorize(g.order());
  std::uint64_t exp_sum = 0, tau_prod = 1;
  for (const auto& pp : fac.parts) {
    exp_sum += pp.exponent;
    tau_prod *= pp.exponent + 1;
  }

  const GroupTable table = make_table_checked(g, opts);
  const Lattice lattice(table, opts.workers);
  const SpectrumReport report = build_report(g, lattice);

  LowerBoundReport out;
  out.bound = Rational(exp_sum + 2, tau_prod);
  out.degree = report.degree;
  out.holds = out.degree >= out.bound;
  out.equality = out.degree == out.bound;
  out.all_proper_prime_power = true;
  for (std::uint32_t size : lattice.class_sizes()) {
    if (size == 1 || size == g.order()) continue;
    if (factorize(size).parts.size() > 1) {
      out.all_proper_prime_power = false;
      break;
    }
  }
  return out;
}

bool check_quotient_inequality(const PermGroup& g, const std::vector<std::uint32_t>& n,
                               const OracleOptions& opts) {
  const PermGroup quotient = quotient_group(g, n);  // validates normality
  const Rational lhs = spectrum(quotient, opts).degree;
  const Rational rhs = Rational(tau(g.order()), tau(quotient.order())) * spectrum(g, opts).degree;
  return lhs <= rhs;
}

bool check_multiplicativity(const PermGroup& g1, const PermGroup& g2, const OracleOptions& opts) {
  if (std::gcd(g1.order(), g2.order()) != 1)
    throw domain_error("multiplicativity requires coprime group orders");
  const PermGroup prod = direct_product(g1, g2);
  return spectrum(prod, opts).degree == spectrum(g1, opts).degree * spectrum(g2, opts).degree;
}

SpectrumReport sn_report(unsigned n, bool allow_slow, OracleOptions opts) {
  if (n < 1) throw domain_error("sn_report requires n >= 1");
  if (n > 7) throw resource_error("S_n spectra beyond n = 7 are out of reach");
  if (n == 7 && !allow_slow)
    throw resource_error("S_7 is a long run; pass the long-running flag to allow it");
  std::uint64_t fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact *= i;
  if (allow_slow && fact > opts.order_cap) opts.order_cap = fact;
  return spectrum(symmetric_group(n), opts);
}

void check_spectrum_invariants(const PermGroup& g, const std::vector<ElementSet>& subgroups,
                               const SpectrumReport& report, bool check_pairwise_joins) {
  if (report.group_order != g.order()) throw internal_error("report order mismatch");
  if (report.subgroup_count != subgroups.size())
    throw internal_error("report subgroup count mismatch");
  if (report.D != report.realized_orders.size() ||
      report.D + report.missing_orders.size() != report.tau)
    throw internal_error("D/tau bookkeeping mismatch");
  if (report.degree != Rational(report.D, report.tau))
    throw internal_error("degree is not D/tau");
  if (!(report.degree > 0 && report.degree <= 1))
    throw internal_error("degree outside (0, 1]");
  if ((report.degree == 1) != report.missing_orders.empty())
    throw internal_error("degree-1 iff no missing orders violated");

  std::vector<std::uint64_t> sizes;
  for (const auto& set : subgroups) {
    if (set.empty() || !g.is_subgroup_set(set)) throw internal_error("listed set is not a subgroup");
    if (g.order() % set.size() != 0) throw internal_error("Lagrange violation");
    sizes.push_back(set.size());
  }
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  if (sizes != report.realized_orders) throw internal_error("realized orders mismatch");

  const GroupTable table(g);
  HashIndex index;
  std::vector<Bitset> store;
  for (const auto& set : subgroups) {
    Bitset bits(table.order());
    for (std::uint32_t e : set) bits.set(e);
    index[bits.hash()].push_back(static_cast<std::uint32_t>(store.size()));
    store.push_back(std::move(bits));
  }

  // Conjugation closure under every generator, and the class count.
  std::vector<std::uint32_t> class_of(store.size(), UINT32_MAX);
  std::uint32_t classes = 0;
  Bitset image(table.order());
  for (std::uint32_t start = 0; start < store.size(); ++start) {
    if (class_of[start] != UINT32_MAX) continue;
    const std::uint32_t cls = classes++;
    std::vector<std::uint32_t> queue{start};
    class_of[start] = cls;
    while (!queue.empty()) {
      const std::uint32_t at = queue.back();
      queue.pop_back();
      for (const auto& cmap : table.conj_maps()) {
        image.clear();
        store[at].for_each([&](std::uint32_t e) { image.set(cmap[e]); });
        const std::uint32_t other = find_bits(index, store, image);
        if (other == UINT32_MAX) throw internal_error("conjugation closure violated");
        if (class_of[other] == UINT32_MAX) {
          class_of[other] = cls;
          queue.push_back(other);
        }
      }
    }
  }
  if (classes != report.conjugacy_class_count)
    throw internal_error("conjugacy class count mismatch");

  // Re-running a closure pass must add nothing (join idempotence).
  if (check_pairwise_joins) {
    Bitset scratch(table.order());
    std::vector<std::uint16_t> stack;
    for (const auto& a : store) {
      for (const auto& b : store) {
        std::vector<std::uint16_t> gens;
        a.for_each([&](std::uint32_t e) { gens.push_back(static_cast<std::uint16_t>(e)); });
        b.for_each([&](std::uint32_t e) { gens.push_back(static_cast<std::uint16_t>(e)); });
        table.close(gens, scratch, stack);
        if (find_bits(index, store, scratch) == UINT32_MAX)
          throw internal_error("pairwise join escapes the subgroup list");
      }
    }
  }
}

}  // namespace clt
