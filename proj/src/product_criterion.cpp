#include "hurwitz/product_criterion.hpp"

#include <set>

#include "hurwitz/error.hpp"

namespace hurwitz {

ProductVerdict product_criterion(std::span<const ProductElem> generators,
                                 std::span<const GroupTable> factors,
                                 std::uint64_t max_product_order) {
  const std::size_t r = factors.size();
  if (r == 0) throw PreconditionError("product_criterion: no factors");
  std::uint64_t total = 1;
  for (const auto& f : factors) {
    total *= f.order();
    if (total > max_product_order) throw ResourceError("product_criterion: product order exceeds budget");
  }
  for (const auto& g : generators) {
    if (g.size() != r) throw PreconditionError("product_criterion: generator has wrong number of components");
    for (std::size_t i = 0; i < r; ++i) {
      if (g[i] >= factors[i].order()) throw PreconditionError("product_criterion: component out of range");
    }
  }

  auto encode = [&](const ProductElem& e) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < r; ++i) code = code * factors[i].order() + e[i];
    return code;
  };

  ProductElem id(r);
  for (std::size_t i = 0; i < r; ++i) id[i] = factors[i].identity();
  std::vector<bool> in(total, false);
  std::vector<ProductElem> elems{id};
  in[encode(id)] = true;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : generators) {
      ProductElem next(r);
      for (std::size_t i = 0; i < r; ++i) next[i] = factors[i].mul(elems[head][i], g[i]);
      const auto code = encode(next);
      if (!in[code]) {
        in[code] = true;
        elems.push_back(std::move(next));
      }
    }
  }

  ProductVerdict v;
  v.order = elems.size();
  v.equals_product = v.order == total;

  // Abelianization: coset labels of each G_i' in G_i.
  std::vector<std::vector<std::uint32_t>> coset(r);
  std::uint64_t ab_total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& f = factors[i];
    const auto comm = f.commutator_subgroup();
    coset[i].assign(f.order(), UINT32_MAX);
    std::uint32_t next_label = 0;
    for (GroupElem g = 0; g < f.order(); ++g) {
      if (coset[i][g] != UINT32_MAX) continue;
      for (GroupElem c = 0; c < f.order(); ++c) {
        if (comm[c]) coset[i][f.mul(g, c)] = next_label;
      }
      ++next_label;
    }
    ab_total *= next_label;
  }
  std::set<std::vector<std::uint32_t>> ab_image;
  for (const auto& e : elems) {
    std::vector<std::uint32_t> key(r);
    for (std::size_t i = 0; i < r; ++i) key[i] = coset[i][e[i]];
    ab_image.insert(std::move(key));
  }
  v.abelianization_surjective = ab_image.size() == ab_total;

  v.projects_onto_factors = true;
  for (std::size_t i = 0; i < r && v.projects_onto_factors; ++i) {
    std::set<GroupElem> proj;
    for (const auto& e : elems) proj.insert(e[i]);
    v.projects_onto_factors = proj.size() == factors[i].order();
  }

  v.hypothesis_holds = true;
  v.projects_onto_isomorphic_pairs = true;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (isomorphic(factors[i], factors[j])) {
        std::set<std::pair<GroupElem, GroupElem>> proj;
        for (const auto& e : elems) proj.emplace(e[i], e[j]);
        if (proj.size() != factors[i].order() * factors[j].order()) v.projects_onto_isomorphic_pairs = false;
      } else if (!factors[i].is_solvable() && !factors[j].is_solvable()) {
        v.hypothesis_holds = false;
      }
    }
  }

  const bool conditions =
      v.abelianization_surjective && v.projects_onto_factors && v.projects_onto_isomorphic_pairs;
  v.consistent = !(v.hypothesis_holds && conditions) || v.equals_product;
  return v;
}

}  // namespace hurwitz
