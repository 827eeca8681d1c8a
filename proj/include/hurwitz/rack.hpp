#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/group_table.hpp"
#include "hurwitz/perm_group.hpp"

namespace hurwitz {

// Rack/braided-set elements are dense indices 0..size-1.
using Elem = std::uint32_t;
// A point of X^n.
using Tuple = std::vector<Elem>;

// A finite set with a bijection R on pairs, stored as a row-major table
// r[x * size + y] = R(x, y). Construction only checks shape and ranges;
// the algebraic properties are reported by validate_braided_set.
class BraidedSet {
 public:
  BraidedSet(std::size_t size, std::vector<std::pair<Elem, Elem>> r);

  std::size_t size() const { return size_; }
  std::pair<Elem, Elem> operator()(Elem x, Elem y) const { return r_[x * size_ + y]; }
  const std::vector<std::pair<Elem, Elem>>& table() const { return r_; }

 private:
  std::size_t size_;
  std::vector<std::pair<Elem, Elem>> r_;
};

struct ValidationReport {
  bool is_bijective = false;
  bool satisfies_yang_baxter = false;
  bool is_braided = false;  // bijective and Yang-Baxter
  bool is_nondegenerate = false;
  bool is_self_distributive = false;  // braided and pi_1 R(x, y) = y
  bool is_squarefree = false;
};

ValidationReport validate_braided_set(const BraidedSet& b);

// Finite rack: op(x, y) = x^y, every column x -> x^y a bijection, and
// (z^x)^y = (z^y)^(x^y). Immutable after construction.
class Rack {
 public:
  // StructuralError on shape/range problems, PreconditionError when the
  // table is well formed but not a rack.
  Rack(std::size_t size, std::vector<Elem> op, std::string name = {},
       std::vector<std::string> labels = {});
  static Rack from_braided_set(const BraidedSet& b, std::string name = {});
  static Rack trivial(std::size_t k);
  // The two-element rack with x^y = the other element for all y.
  static Rack two_element_swap();
  static Rack permutation_rack(const Perm& f);  // x^y = f(x)

  std::size_t size() const { return size_; }
  Elem op(Elem x, Elem y) const { return op_[x * size_ + y]; }
  // The u with u^y = z.
  Elem inv_op(Elem z, Elem y) const { return inv_[y * size_ + z]; }
  bool is_quandle() const { return quandle_; }
  const std::string& name() const { return name_; }
  const std::vector<Elem>& table() const { return op_; }
  // Element names; defaults to decimal indices.
  std::string label(Elem x) const;
  const std::vector<std::string>& labels() const { return labels_; }

  BraidedSet to_braided_set() const;
  // The permutation x -> x^y.
  Perm column(Elem y) const;

  bool operator==(const Rack& other) const { return size_ == other.size_ && op_ == other.op_; }

 private:
  std::size_t size_;
  std::vector<Elem> op_;
  std::vector<Elem> inv_;
  bool quandle_ = false;
  std::string name_;
  std::vector<std::string> labels_;
};

struct ConjugationRack {
  Rack rack;
  std::vector<GroupElem> embedding;  // rack index -> group index
};

// Union of the conjugacy classes of the seeds with x^y = y^-1 x y.
// Elements are ordered by group index.
ConjugationRack conjugation_rack(const GroupTable& g, std::span<const GroupElem> class_seeds,
                                 bool allow_identity = false);

Rack product_rack(const Rack& x, const Rack& y);

struct ComponentLabeling {
  std::vector<std::size_t> labels;  // numbered by first occurrence
  std::size_t count = 0;
  std::vector<std::size_t> component_sizes;

  Rack trivialization() const { return Rack::trivial(count); }
  std::vector<Elem> members(std::size_t component) const;
};

ComponentLabeling components(const Rack& x);
PermGroup inner_group(const Rack& x);
std::uint64_t element_inn_order(const Rack& x, Elem e);
// Each element e repeated m_e times, ascending element order.
Tuple central_word_z(const Rack& x);
// Membership mask of the subrack generated by `subset`.
std::vector<bool> subrack_closure(const Rack& x, std::span<const Elem> subset);
// False for the empty subset.
bool generates(const Rack& x, std::span<const Elem> subset);

}  // namespace hurwitz
