#include "hurwitz/rack.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hurwitz/error.hpp"

namespace hurwitz {

BraidedSet::BraidedSet(std::size_t size, std::vector<std::pair<Elem, Elem>> r)
    : size_(size), r_(std::move(r)) {
  if (size_ == 0) throw StructuralError("braided set: size must be positive");
  if (r_.size() != size_ * size_) throw StructuralError("braided set: table is not size x size");
  for (const auto& [a, b] : r_) {
    if (a >= size_ || b >= size_) throw StructuralError("braided set: entry out of range");
  }
}

ValidationReport validate_braided_set(const BraidedSet& b) {
  const std::size_t n = b.size();
  ValidationReport rep;

  std::vector<bool> hit(n * n, false);
  rep.is_bijective = true;
  for (const auto& [p, q] : b.table()) {
    if (hit[p * n + q]) rep.is_bijective = false;
    hit[p * n + q] = true;
  }

  rep.satisfies_yang_baxter = true;
  for (Elem x = 0; x < n && rep.satisfies_yang_baxter; ++x) {
    for (Elem y = 0; y < n && rep.satisfies_yang_baxter; ++y) {
      for (Elem z = 0; z < n; ++z) {
        // R12 R23 R12
        auto [a1, b1] = b(x, y);
        auto [b2, c2] = b(b1, z);
        auto [a3, b3] = b(a1, b2);
        // R23 R12 R23
        auto [q1, r1] = b(y, z);
        auto [p2, q2] = b(x, q1);
        auto [q3, r3] = b(q2, r1);
        if (a3 != p2 || b3 != q3 || c2 != r3) {
          rep.satisfies_yang_baxter = false;
          break;
        }
      }
    }
  }
  rep.is_braided = rep.is_bijective && rep.satisfies_yang_baxter;

  rep.is_nondegenerate = true;
  for (Elem fixed = 0; fixed < n && rep.is_nondegenerate; ++fixed) {
    std::vector<bool> second(n, false), first(n, false);
    for (Elem v = 0; v < n; ++v) {
      second[b(v, fixed).second] = true;  // x -> pi_2 R(x, y), y fixed
      first[b(fixed, v).first] = true;    // y -> pi_1 R(x, y), x fixed
    }
    rep.is_nondegenerate = std::all_of(second.begin(), second.end(), [](bool t) { return t; }) &&
                           std::all_of(first.begin(), first.end(), [](bool t) { return t; });
  }

  bool pi1_is_y = true;
  rep.is_squarefree = true;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (b(x, y).first != y) pi1_is_y = false;
    }
    if (b(x, x) != std::pair<Elem, Elem>{x, x}) rep.is_squarefree = false;
  }
  rep.is_self_distributive = rep.is_braided && pi1_is_y;
  return rep;
}

Rack::Rack(std::size_t size, std::vector<Elem> table, std::string name, std::vector<std::string> labels)
    : size_(size), op_(std::move(table)), name_(std::move(name)), labels_(std::move(labels)) {
  if (size_ == 0) throw StructuralError("rack: size must be positive");
  if (size_ > 65535) throw StructuralError("rack: size too large");
  if (op_.size() != size_ * size_) throw StructuralError("rack: table is not size x size");
  for (Elem v : op_) {
    if (v >= size_) throw StructuralError("rack: entry out of range");
  }
  if (!labels_.empty() && labels_.size() != size_) throw StructuralError("rack: label count mismatch");

  inv_.assign(size_ * size_, static_cast<Elem>(size_));
  for (Elem y = 0; y < size_; ++y) {
    for (Elem x = 0; x < size_; ++x) {
      Elem z = op(x, y);
      if (inv_[y * size_ + z] != size_) {
        throw PreconditionError("not a rack: x -> x^" + std::to_string(y) + " is not a bijection");
      }
      inv_[y * size_ + z] = x;
    }
  }
  for (Elem x = 0; x < size_; ++x) {
    for (Elem y = 0; y < size_; ++y) {
      const Elem xy = op(x, y);
      for (Elem z = 0; z < size_; ++z) {
        if (op(op(z, x), y) != op(op(z, y), xy)) throw PreconditionError("not a rack: self-distributivity fails");
      }
    }
  }
  quandle_ = true;
  for (Elem x = 0; x < size_; ++x) quandle_ = quandle_ && op(x, x) == x;
}

Rack Rack::from_braided_set(const BraidedSet& b, std::string name) {
  const auto rep = validate_braided_set(b);
  if (!rep.is_self_distributive) throw PreconditionError("braided set is not self-distributive");
  std::vector<Elem> op(b.size() * b.size());
  for (Elem x = 0; x < b.size(); ++x) {
    for (Elem y = 0; y < b.size(); ++y) op[x * b.size() + y] = b(x, y).second;
  }
  return Rack(b.size(), std::move(op), std::move(name));
}

Rack Rack::trivial(std::size_t k) {
  std::vector<Elem> op(k * k);
  for (Elem x = 0; x < k; ++x) {
    for (Elem y = 0; y < k; ++y) op[x * k + y] = x;
  }
  return Rack(k, std::move(op), "T" + std::to_string(k));
}

Rack Rack::two_element_swap() {
  return Rack(2, {1, 1, 0, 0}, "N", {"eta", "xi"});
}

Rack Rack::permutation_rack(const Perm& f) {
  const std::size_t k = f.degree();
  std::vector<Elem> op(k * k);
  for (Elem x = 0; x < k; ++x) {
    for (Elem y = 0; y < k; ++y) op[x * k + y] = f[x];
  }
  return Rack(k, std::move(op), "perm" + f.to_cycle_string());
}

std::string Rack::label(Elem x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

BraidedSet Rack::to_braided_set() const {
  std::vector<std::pair<Elem, Elem>> r(size_ * size_);
  for (Elem x = 0; x < size_; ++x) {
    for (Elem y = 0; y < size_; ++y) r[x * size_ + y] = {y, op(x, y)};
  }
  return BraidedSet(size_, std::move(r));
}

Perm Rack::column(Elem y) const {
  std::vector<Point> img(size_);
  for (Elem x = 0; x < size_; ++x) img[x] = op(x, y);
  return Perm(std::move(img));
}

ConjugationRack conjugation_rack(const GroupTable& g, std::span<const GroupElem> class_seeds,
                                 bool allow_identity) {
  std::set<GroupElem> elems;
  for (GroupElem s : class_seeds) {
    if (s >= g.order()) throw PreconditionError("conjugation_rack: seed index out of range");
    if (s == g.identity() && !allow_identity) {
      throw PreconditionError("conjugation_rack: identity seed requires allow_identity");
    }
    for (GroupElem c : g.conjugacy_class(s)) elems.insert(c);
  }
  if (elems.empty()) throw PreconditionError("conjugation_rack: no seeds");
  std::vector<GroupElem> embedding(elems.begin(), elems.end());
  const std::size_t k = embedding.size();
  std::vector<Elem> index(g.order(), static_cast<Elem>(k));
  for (std::size_t i = 0; i < k; ++i) index[embedding[i]] = static_cast<Elem>(i);
  std::vector<Elem> op(k * k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(g.label(embedding[i]));
    for (std::size_t j = 0; j < k; ++j) op[i * k + j] = index[g.conj(embedding[i], embedding[j])];
  }
  std::string name = g.name().empty() ? "conj" : "conj(" + g.name() + ")";
  return {Rack(k, std::move(op), std::move(name), std::move(labels)), std::move(embedding)};
}

Rack product_rack(const Rack& x, const Rack& y) {
  const std::size_t a = x.size(), b = y.size(), k = a * b;
  std::vector<Elem> op(k * k);
  std::vector<std::string> labels;
  for (Elem p = 0; p < k; ++p) {
    labels.push_back("(" + x.label(p / b) + "," + y.label(p % b) + ")");
    for (Elem q = 0; q < k; ++q) {
      op[p * k + q] = static_cast<Elem>(x.op(p / b, q / b) * b + y.op(p % b, q % b));
    }
  }
  return Rack(k, std::move(op), x.name() + "x" + y.name(), std::move(labels));
}

std::vector<Elem> ComponentLabeling::members(std::size_t component) const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == component) out.push_back(static_cast<Elem>(i));
  }
  return out;
}

ComponentLabeling components(const Rack& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      auto ra = find(a), rb = find(x.op(a, b));
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  ComponentLabeling c;
  c.labels.assign(n, n);
  std::vector<std::size_t> root_label(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    auto r = find(v);
    if (root_label[r] == n) {
      root_label[r] = c.count++;
      c.component_sizes.push_back(0);
    }
    c.labels[v] = root_label[r];
    ++c.component_sizes[c.labels[v]];
  }
  return c;
}

PermGroup inner_group(const Rack& x) {
  std::set<Perm> gens;
  for (Elem y = 0; y < x.size(); ++y) {
    Perm p = x.column(y);
    if (!p.is_identity()) gens.insert(std::move(p));
  }
  std::vector<Perm> g(gens.begin(), gens.end());
  return PermGroup(g, x.size());
}

std::uint64_t element_inn_order(const Rack& x, Elem e) {
  if (e >= x.size()) throw PreconditionError("element_inn_order: element out of range");
  return x.column(e).order();
}

Tuple central_word_z(const Rack& x) {
  Tuple z;
  for (Elem e = 0; e < x.size(); ++e) z.insert(z.end(), element_inn_order(x, e), e);
  return z;
}

std::vector<bool> subrack_closure(const Rack& x, std::span<const Elem> subset) {
  std::vector<bool> in(x.size(), false);
  std::vector<Elem> members;
  for (Elem s : subset) {
    if (s >= x.size()) throw PreconditionError("subrack_closure: element out of range");
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        for (Elem c : {x.op(members[i], members[j]), x.inv_op(members[i], members[j])}) {
          if (!in[c]) {
            in[c] = true;
            members.push_back(c);
            grew = true;
          }
        }
      }
    }
  }
  return in;
}

bool generates(const Rack& x, std::span<const Elem> subset) {
  if (subset.empty()) return false;
  const auto in = subrack_closure(x, subset);
  return std::all_of(in.begin(), in.end(), [](bool b) { return b; });
}

}  // namespace hurwitz
