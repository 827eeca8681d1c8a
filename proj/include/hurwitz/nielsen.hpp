#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/braid.hpp"
#include "hurwitz/group_table.hpp"
#include "hurwitz/perm_group.hpp"

namespace hurwitz {

using GroupTuple = std::vector<GroupElem>;

// max(d(G^ab), 1), with d of a finite abelian group the largest p-rank.
std::size_t d_normal(const GroupTable& g);

// Braid moves on group tuples: (a, b) -> (b, b^-1 a b) at positions i, i+1.
GroupTuple apply_generator(const GroupTable& g, const GroupTuple& t, std::size_t i, int sign);
GroupTuple apply_word(const GroupTable& g, GroupTuple t, const BraidWord& w);

// Ordered product t_1 t_2 ... t_n.
GroupElem tuple_product(const GroupTable& g, const GroupTuple& t);
// Simultaneous conjugate h^-1 t_i h.
GroupTuple conjugate_tuple(const GroupTable& g, const GroupTuple& t, GroupElem h);
// Least simultaneous conjugate.
GroupTuple conjugation_canonical(const GroupTable& g, const GroupTuple& t);

struct NielsenOptions {
  bool product_one = true;
  bool up_to_conj = false;
  std::uint64_t max_nodes = 100'000'000;  // backtracking budget
};

// Streams the generating tuples with n_vec[j] entries from the class of
// class_seeds[j] (and product one when asked), in lexicographic order.
// With up_to_conj only conjugation-canonical tuples are emitted. The visitor
// returns false to stop. Returns the number of tuples emitted.
std::uint64_t enumerate_nielsen(const GroupTable& g, const std::vector<GroupElem>& class_seeds,
                                const std::vector<std::size_t>& n_vec, const NielsenOptions& options,
                                const std::function<bool(const GroupTuple&)>& visit);

// sigma_{n-1}...sigma_1 maps t into the conjugation class of
// (t_n, t_1, ..., t_{n-1}).
bool cyclic_shift_check(const GroupTable& g, const GroupTuple& t);

// {x^(y^r)} generates G.
bool is_abundance_witness(const GroupTable& g, GroupElem x, GroupElem y);
// Least y witnessing abundance of the class of x.
std::optional<GroupElem> find_abundant(const GroupTable& g, GroupElem x);

struct Certificate {
  std::string group;
  std::string x, y;
  std::size_t n = 0;
  std::string word_applied = "sigma_{n-1}..sigma_1";
  bool product_one = false;
  bool generates = false;
  bool shift_fixes_class = false;  // image of the word is conjugate to s
  bool image_is_ncycle = false;
  GroupElem conjugator = 0;        // h with s^word = h^-1 s h
  bool verified = false;
  bool theorem_applies = false;    // |G|^2 divides n
};

// s = n/|G| copies of (x, x^y, ..., x^(y^(|G|-1))). Requires |G| | n and
// that {x^(y^r)} generates G (PreconditionError otherwise).
Certificate abundant_ncycle_certificate(const GroupTable& g, GroupElem x, GroupElem y, std::size_t n);

struct QuotientOrbit {
  std::size_t orbit_size = 0;
  PermGroup image;
};

// Orbit of the conjugation class of t under B_n and the image in S_n of
// its stabilizer. PreconditionError if t does not generate G or |G| > 256.
QuotientOrbit quotient_orbit_and_image(const GroupTable& g, const GroupTuple& t, const OrbitOptions& options = {});

}  // namespace hurwitz
