#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/orbit_kernel.hpp"
#include "hurwitz/perm_group.hpp"
#include "hurwitz/rack.hpp"

namespace hurwitz {

// sigma_index^sign with index 1-based.
struct BraidLetter {
  std::uint32_t index = 1;
  int sign = 1;
  bool operator==(const BraidLetter&) const = default;
};
using BraidWord = std::vector<BraidLetter>;

// "s2 s1 S2" style text: s<i> is sigma_i, S<i> its inverse.
std::string to_string(const BraidWord& w);
// Parses "1,-2,3" (signed 1-based generator indices).
BraidWord parse_braid_word(const std::string& text);

// Hurwitz move on positions i, i+1 (i 1-based):
//   sign +1: (t_i, t_{i+1}) -> (t_{i+1}, t_i^{t_{i+1}})
//   sign -1: (t_i, t_{i+1}) -> (u, t_i) with u^{t_i} = t_{i+1}
Tuple apply_generator(const Rack& x, const Tuple& t, std::size_t i, int sign);
// Letters act on the right, left to right.
Tuple apply_word(const Rack& x, Tuple t, const BraidWord& w);
// Image in S_n: product of the transpositions (i, i+1) in word order.
Perm braid_to_perm(const BraidWord& w, std::size_t n);

// sigma_{beta-1} ... sigma_{alpha+1} sigma_alpha sigma_{alpha+1}^-1 ... sigma_{beta-1}^-1
// (1-based positions, alpha < beta <= n). Its image is the transposition
// (alpha beta); it fixes quandle tuples with t_alpha = t_beta.
BraidWord transposition_word(std::size_t alpha, std::size_t beta, std::size_t n);
// Same with the middle letter cubed.
BraidWord transposition_word_cubed(std::size_t alpha, std::size_t beta, std::size_t n);
// sigma_{n-1} sigma_{n-2} ... sigma_1
BraidWord cyclic_shift_word(std::size_t n);

struct OrbitOptions {
  bool colored = false;
  std::size_t cap = 50'000'000;
  Execution execution = Execution::parallel;
  int threads = 0;
};

// Orbit of a seed tuple under B_n with per-member access permutations.
//
// Members are numbered in BFS order (generator order sigma_1..sigma_{n-1},
// then inverses). access(i) is the S_n image of the BFS word from the seed
// to member i. A colored orbit is the full orbit restricted to the block
// of tuples sharing the seed's per-position component labels; that block
// meets the full orbit in exactly one orbit of the colored braid group.
class OrbitGraph {
 public:
  OrbitGraph(OrbitData data, bool colored, std::vector<std::uint32_t> block_members);

  std::size_t length() const { return data_.length; }
  std::size_t size() const { return data_.size(); }  // full B_n orbit
  bool colored() const { return colored_; }
  // Member indices in the seed's block (all members when not colored).
  const std::vector<std::uint32_t>& block_members() const { return block_; }
  std::size_t colored_size() const { return block_.size(); }

  Tuple member(std::size_t i) const;
  Perm access(std::size_t i) const { return data_.access_perm(i); }
  // Target of sigma_i^sign from member m (i 1-based).
  std::uint32_t edge(std::size_t m, std::size_t i, int sign) const {
    return data_.edges[m * data_.slots() + data_.slot(i, sign)];
  }
  std::optional<std::uint32_t> find(const Tuple& t) const;
  // Lexicographically least member of the full orbit.
  Tuple canonical_representative() const;
  const OrbitData& data() const { return data_; }

 private:
  OrbitData data_;
  bool colored_;
  std::vector<std::uint32_t> block_;
};

// Throws ResourceError when the cap is exceeded, PreconditionError for
// invalid seeds or racks larger than 256 elements.
OrbitGraph orbit(const Rack& x, const Tuple& seed, const OrbitOptions& options = {});

// Image in S_n of the seed's stabilizer (equal for the colored subgroup).
PermGroup stabilizer_image(const OrbitGraph& o, Execution execution = Execution::parallel,
                           int threads = 0);

struct MonodromyReport {
  std::vector<std::size_t> component_counts;  // n_j per rack component
  BlockStructure blocks;                      // nonempty D_j by component
  bool generates = false;
  std::size_t orbit_size = 0;
  std::size_t colored_orbit_size = 0;
  PermGroup image;
  Classification classification;
};

MonodromyReport classify_monodromy(const Rack& x, const Tuple& seed, const OrbitOptions& options = {});

struct RelationReport {
  std::size_t length = 0;
  std::uint64_t tuples_checked = 0;
  std::uint64_t commutation_checks = 0;
  std::uint64_t braid_checks = 0;
  std::uint64_t violations = 0;
};

// Exhaustive check of sigma_i sigma_j = sigma_j sigma_i (|i-j| >= 2) and
// sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1} on X^n.
RelationReport check_braid_relations(const Rack& x, std::size_t n);

}  // namespace hurwitz
