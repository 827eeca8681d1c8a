#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

using BigInt = boost::multiprecision::cpp_int;

// Permutation group given by a base and strong generating set.
//
// Built by deterministic Schreier-Sims (Knuth's sifting variant) with the
// base 0, 1, ..., n-1; levels whose basic orbit is trivial are simply
// skipped when reporting the base. Immutable after construction, so
// membership queries may run concurrently.
class PermGroup {
 public:
  PermGroup() = default;
  // Throws PreconditionError when generator degrees differ. `degree` is used
  // when `generators` is empty. With drop_redundant, generators() keeps only
  // those that were not already members when sifted in order.
  explicit PermGroup(std::span<const Perm> generators, std::size_t degree = 0,
                     bool drop_redundant = false);
  static PermGroup trivial(std::size_t degree);
  static PermGroup symmetric(std::size_t degree);
  static PermGroup alternating(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const BigInt& order() const { return order_; }
  // Points with a nontrivial basic orbit, in level order.
  std::vector<Point> base() const;
  // Union of the strong generators over all stabilizer levels.
  std::vector<Perm> strong_generators() const;
  std::size_t basic_orbit_size(std::size_t level) const;

  bool contains(const Perm& p) const;  // throws on degree mismatch
  bool is_trivial() const { return order_ == 1; }

  // Visits every element exactly once (order of the transversal product).
  // The callback returns false to stop early.
  void for_each_element(const std::function<bool(const Perm&)>& visit) const;
  // Uniformly random element (product of random coset representatives).
  Perm random_element(std::mt19937_64& rng) const;

 private:
  struct Level {
    std::vector<Perm> gens;                    // T_k: generators added at this level
    std::vector<std::optional<Perm>> coset;    // coset[j] maps k -> j
    std::vector<std::optional<Perm>> coset_inv;
    std::vector<Point> orbit;                  // points j with coset[j] set, insertion order
  };

  bool sift_from(std::size_t level, Perm g) const;
  void add_generator(std::size_t level, const Perm& g);
  void extend_orbit(std::size_t level, const Perm& g);

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

BigInt factorial(std::size_t n);

// Partition of {0..n-1} into blocks D_1..D_k (not necessarily contiguous).
struct BlockStructure {
  std::vector<std::vector<Point>> blocks;

  // Contiguous blocks of the given sizes.
  static BlockStructure contiguous(std::span<const std::size_t> sizes);
  std::size_t degree() const;
  std::vector<std::size_t> sizes() const;
  // Block index of every point; throws StructuralError unless the blocks
  // partition 0..degree-1.
  std::vector<std::size_t> labels() const;
};

struct Classification {
  bool respects_blocks = false;
  bool is_full_product = false;
  bool contains_alt_product = false;
  bool inside_even_part = false;
  // Rank over GF(2) of the generators' per-block sign vectors; only
  // meaningful when the group respects the blocks.
  std::optional<std::size_t> sign_image_rank;
  BigInt order;
};

// Asserts is_full_product => contains_alt_product => order >= prod n_j!/2^k
// (InvariantError otherwise).
Classification classify_in_product(const PermGroup& h, const BlockStructure& blocks);

// Transitivity on k-subsets. Throws PreconditionError for k > n and
// ResourceError if C(n,k) exceeds `max_subsets`.
bool k_homogeneous(const PermGroup& h, std::size_t k, std::uint64_t max_subsets = 50'000'000);

struct HomogeneityVerdict {
  std::size_t k = 0;  // floor(n/2)
  bool homogeneous = false;
  bool is_alternating = false;
  bool is_symmetric = false;
  bool consistent = false;  // homogeneous => (A_n or S_n)
};
HomogeneityVerdict check_homogeneity_dichotomy(const PermGroup& h);

enum class InvariableMode { exhaustive, sampled };

struct InvariableOptions {
  InvariableMode mode = InvariableMode::exhaustive;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::size_t max_exhaustive_degree = 8;
};

// True iff for all (exhaustive) or all sampled choices of conjugators the
// conjugated subgroups generate S_n. The first subgroup is never conjugated.
bool invariably_generates(std::span<const std::vector<Perm>> subgroup_gens, std::size_t degree,
                          const InvariableOptions& options = {});

// All permutations of degree n in lexicographic order of image arrays.
void for_each_permutation(std::size_t degree, const std::function<bool(const Perm&)>& visit);

}  // namespace hurwitz
