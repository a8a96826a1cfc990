#ifndef CLT_PERMGROUP_HPP
#define CLT_PERMGROUP_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "clt/util.hpp"

namespace clt {

inline constexpr std::size_t kDefaultElementCap = 100000;

// A permutation of the points 0..degree-1. All file and CLI I/O is
// 1-based; everything in memory is 0-based.
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(unsigned degree);
  // Accepts a 1-based image list as it appears in group files.
  static Permutation from_one_based(const std::vector<std::uint64_t>& images);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  std::uint32_t operator[](std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  std::vector<std::uint64_t> one_based_images() const;

  // Left-to-right composition: (a.then(b))(x) = b(a(x)).
  Permutation then(const Permutation& b) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::uint64_t order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

// A finite permutation group with its full element table. Elements are
// enumerated breadth-first from the identity, generators applied in list
// order, which fixes a deterministic indexing: element 0 is the identity.
class PermGroup {
 public:
  PermGroup(unsigned degree, std::vector<Permutation> generators,
            std::size_t element_cap = kDefaultElementCap);

  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const Permutation& element(std::uint32_t index) const { return elements_[index]; }

  bool contains(const Permutation& p) const;
  std::uint32_t index_of(const Permutation& p) const;  // throws domain_error if absent
  // Index of element(a).then(element(b)).
  std::uint32_t product(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const;
  std::uint64_t element_order(std::uint32_t a) const;

  // Smallest subgroup containing the given elements, as sorted indices.
  std::vector<std::uint32_t> closure_of(const std::vector<std::uint32_t>& seed) const;
  // True iff the sorted index set is nonempty and closed under products.
  bool is_subgroup_set(const std::vector<std::uint32_t>& set) const;

 private:
  unsigned degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::uint32_t> inverse_;
};

// BFS closure of the generators.
PermGroup generate(unsigned degree, std::vector<Permutation> generators,
                   std::size_t element_cap = kDefaultElementCap);

// G acting on the first degree(G) points, H on the next degree(H).
PermGroup direct_product(const PermGroup& g, const PermGroup& h,
                         std::size_t element_cap = kDefaultElementCap);

// The n-cycle on n points; n = 1 gives the trivial group on one point.
PermGroup cyclic_group(std::uint64_t n, std::size_t element_cap = kDefaultElementCap);

// S_n generated by (1 2) and the n-cycle.
PermGroup symmetric_group(unsigned n, std::size_t element_cap = kDefaultElementCap);

// True iff ghg^-1 lies in H for every generator g and h in H.
// H must be a subgroup of G given as sorted element indices.
bool is_normal(const PermGroup& g, const std::vector<std::uint32_t>& h);

// The image of G acting by left multiplication on the left cosets of N;
// degree |G|/|N|. N must be normal, so the order equals |G|/|N|.
PermGroup quotient_group(const PermGroup& g, const std::vector<std::uint32_t>& n);

// True iff N is a proper nontrivial normal subgroup, some subgroup H with
// |H| = |G|/|N| and H meet N = 1 exists, and no nonidentity element of such
// an H commutes with a nonidentity element of N.
bool verify_frobenius(const PermGroup& g, const std::vector<std::uint32_t>& n);

enum class FrobeniusCase { in_kernel, trivial_meet, frobenius_sub };
std::string to_string(FrobeniusCase c);

// The subgroup trichotomy inside a Frobenius group with kernel N:
// K <= N, or K meet N = 1, or K is itself Frobenius with kernel K meet N.
FrobeniusCase classify_in_frobenius(const PermGroup& g, const std::vector<std::uint32_t>& n,
                                    const std::vector<std::uint32_t>& k);

// --- group file format -----------------------------------------------
//   degree <N>
//   gen <i1> <i2> ... <iN>     (1-based image list)
// Blank lines and lines starting with '#' are ignored.

struct GroupFile {
  unsigned degree = 0;
  std::vector<Permutation> generators;
};

GroupFile read_group_file(std::istream& in);
GroupFile read_group_file(const std::filesystem::path& path);

}  // namespace clt

#endif
