#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

using GroupElem = std::uint32_t;

// Finite group stored as a full multiplication table over dense indices.
//
// Hosts the ambient group for conjugation racks and Nielsen tuples. When
// built from permutations, elements are sorted by image array, so the
// identity is index 0 and numbering is reproducible.
class GroupTable {
 public:
  // Validates closure, associativity, identity and inverses; throws
  // StructuralError on a malformed table.
  GroupTable(std::size_t order, std::vector<GroupElem> mul, std::string name = {});

  // The group generated by `gens`, enumerated exhaustively.
  static GroupTable from_permutations(std::span<const Perm> gens, std::size_t degree,
                                      std::string name = {});
  static GroupTable symmetric(std::size_t m);
  static GroupTable alternating(std::size_t m);
  static GroupTable cyclic(std::size_t m);
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
  // "S3", "A5", "Z2", "D4" (dihedral of order 8), ... Throws PreconditionError.
  static GroupTable builtin(const std::string& spec);

  std::size_t order() const { return order_; }
  GroupElem identity() const { return identity_; }
  GroupElem mul(GroupElem a, GroupElem b) const { return mul_[a * order_ + b]; }
  GroupElem inv(GroupElem a) const { return inv_[a]; }
  // a^b = b^-1 a b
  GroupElem conj(GroupElem a, GroupElem b) const { return mul(mul(inv_[b], a), b); }
  const std::vector<GroupElem>& table() const { return mul_; }
  const std::string& name() const { return name_; }

  // Present when the group was built from permutations.
  const std::optional<std::vector<Perm>>& perms() const { return perms_; }
  std::optional<GroupElem> index_of(const Perm& p) const;
  // Cycle notation for permutation groups, otherwise the decimal index.
  std::string label(GroupElem a) const;

  std::uint64_t element_order(GroupElem a) const;
  // Conjugacy class of a, sorted ascending.
  std::vector<GroupElem> conjugacy_class(GroupElem a) const;
  // Membership mask of the subgroup generated by gens.
  std::vector<bool> subgroup_closure(std::span<const GroupElem> gens) const;
  bool generates(std::span<const GroupElem> gens) const;
  std::vector<bool> commutator_subgroup() const;
  bool is_abelian() const;
  bool is_solvable() const;
  // Smallest-size generating set found greedily (deterministic).
  std::vector<GroupElem> greedy_generators() const;

 private:
  GroupTable() = default;
  void finish();

  std::size_t order_ = 0;
  std::vector<GroupElem> mul_;
  std::vector<GroupElem> inv_;
  GroupElem identity_ = 0;
  std::string name_;
  std::optional<std::vector<Perm>> perms_;
};

// Brute-force isomorphism test for small groups (backtracking on the images
// of a greedy generating set).
bool isomorphic(const GroupTable& a, const GroupTable& b);

}  // namespace hurwitz
