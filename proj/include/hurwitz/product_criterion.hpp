#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hurwitz/group_table.hpp"

namespace hurwitz {

// An element of G_1 x ... x G_r, one index per factor.
using ProductElem = std::vector<GroupElem>;

struct ProductVerdict {
  // Hypothesis: every pair of non-isomorphic factors has a solvable
  // member (so no common nonabelian simple quotient). Checked conservatively.
  bool hypothesis_holds = false;
  bool abelianization_surjective = false;
  bool projects_onto_factors = false;
  bool projects_onto_isomorphic_pairs = false;
  bool equals_product = false;
  // (hypothesis and all three conditions) => equals_product
  bool consistent = false;
  std::uint64_t order = 0;
};

// Checks the subdirect-product criterion on H = <generators> inside the
// direct product of `factors`. H is enumerated, so the product order must
// not exceed `max_product_order` (ResourceError).
ProductVerdict product_criterion(std::span<const ProductElem> generators,
                                 std::span<const GroupTable> factors,
                                 std::uint64_t max_product_order = 20'000'000);

}  // namespace hurwitz
