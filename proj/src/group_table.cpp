#include "hurwitz/group_table.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <set>

#include "hurwitz/error.hpp"

namespace hurwitz {

GroupTable::GroupTable(std::size_t order, std::vector<GroupElem> mul, std::string name)
    : order_(order), mul_(std::move(mul)), name_(std::move(name)) {
  if (order_ == 0) throw StructuralError("group table: order must be positive");
  if (mul_.size() != order_ * order_) throw StructuralError("group table: table is not order x order");
  for (GroupElem v : mul_) {
    if (v >= order_) throw StructuralError("group table: entry out of range");
  }
  finish();
}

void GroupTable::finish() {
  const std::size_t n = order_;
  std::optional<GroupElem> e;
  for (GroupElem c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (GroupElem x = 0; x < n && ok; ++x) ok = mul(c, x) == x && mul(x, c) == x;
    if (ok) e = c;
  }
  if (!e) throw StructuralError("group table: no identity element");
  identity_ = *e;
  inv_.assign(n, 0);
  for (GroupElem x = 0; x < n; ++x) {
    bool found = false;
    for (GroupElem y = 0; y < n && !found; ++y) {
      if (mul(x, y) == identity_ && mul(y, x) == identity_) {
        inv_[x] = y;
        found = true;
      }
    }
    if (!found) throw StructuralError("group table: element without inverse");
  }
  for (GroupElem a = 0; a < n; ++a) {
    for (GroupElem b = 0; b < n; ++b) {
      const GroupElem ab = mul(a, b);
      for (GroupElem c = 0; c < n; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c))) throw StructuralError("group table: not associative");
      }
    }
  }
}

GroupTable GroupTable::from_permutations(std::span<const Perm> gens, std::size_t degree,
                                         std::string name) {
  std::set<Perm> elems{Perm::identity(degree)};
  std::vector<Perm> queue{Perm::identity(degree)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const Perm& g : gens) {
      Perm next = queue[head] * g;
      if (elems.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Perm> sorted(elems.begin(), elems.end());
  std::map<Perm, GroupElem> index;
  for (std::size_t i = 0; i < sorted.size(); ++i) index.emplace(sorted[i], static_cast<GroupElem>(i));
  GroupTable g;
  g.order_ = sorted.size();
  g.mul_.resize(g.order_ * g.order_);
  for (std::size_t a = 0; a < g.order_; ++a) {
    for (std::size_t b = 0; b < g.order_; ++b) g.mul_[a * g.order_ + b] = index.at(sorted[a] * sorted[b]);
  }
  g.name_ = std::move(name);
  g.perms_ = std::move(sorted);
  g.identity_ = 0;
  g.inv_.resize(g.order_);
  for (GroupElem a = 0; a < g.order_; ++a) g.inv_[a] = index.at((*g.perms_)[a].inverse());
  return g;
}

namespace {

Perm cycle_perm(std::size_t m) {
  std::vector<Point> img(m);
  for (std::size_t i = 0; i < m; ++i) img[i] = static_cast<Point>((i + 1) % m);
  return Perm(std::move(img));
}

}  // namespace

GroupTable GroupTable::symmetric(std::size_t m) {
  std::vector<Perm> gens;
  if (m >= 2) gens = {Perm::transposition(m, 0, 1), cycle_perm(m)};
  return from_permutations(gens, m, "S" + std::to_string(m));
}

GroupTable GroupTable::alternating(std::size_t m) {
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < m; ++i) {
    std::vector<Point> img(m);
    for (std::size_t p = 0; p < m; ++p) img[p] = static_cast<Point>(p);
    img[0] = 1;
    img[1] = static_cast<Point>(i);
    img[i] = 0;
    gens.emplace_back(std::move(img));
  }
  return from_permutations(gens, m, "A" + std::to_string(m));
}

GroupTable GroupTable::cyclic(std::size_t m) {
  if (m == 0) throw PreconditionError("cyclic group of order 0");
  std::vector<Perm> gens{cycle_perm(m)};
  return from_permutations(gens, m, "Z" + std::to_string(m));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
  GroupTable g;
  g.order_ = a.order_ * b.order_;
  g.mul_.resize(g.order_ * g.order_);
  for (GroupElem x = 0; x < g.order_; ++x) {
    for (GroupElem y = 0; y < g.order_; ++y) {
      const auto xa = static_cast<GroupElem>(x / b.order_), xb = static_cast<GroupElem>(x % b.order_);
      const auto ya = static_cast<GroupElem>(y / b.order_), yb = static_cast<GroupElem>(y % b.order_);
      g.mul_[x * g.order_ + y] = static_cast<GroupElem>(a.mul(xa, ya) * b.order_ + b.mul(xb, yb));
    }
  }
  g.identity_ = static_cast<GroupElem>(a.identity_ * b.order_ + b.identity_);
  g.inv_.resize(g.order_);
  for (GroupElem x = 0; x < g.order_; ++x) {
    g.inv_[x] = static_cast<GroupElem>(a.inv(static_cast<GroupElem>(x / b.order_)) * b.order_ +
                                       b.inv(static_cast<GroupElem>(x % b.order_)));
  }
  g.name_ = a.name_ + "x" + b.name_;
  if (a.perms_ && b.perms_) {
    const std::size_t da = a.perms_->front().degree(), db = b.perms_->front().degree();
    std::vector<Perm> perms;
    for (GroupElem x = 0; x < g.order_; ++x) {
      const Perm& pa = (*a.perms_)[x / b.order_];
      const Perm& pb = (*b.perms_)[x % b.order_];
      std::vector<Point> img(da + db);
      for (std::size_t i = 0; i < da; ++i) img[i] = pa[static_cast<Point>(i)];
      for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<Point>(da + pb[static_cast<Point>(i)]);
      perms.emplace_back(std::move(img));
    }
    g.perms_ = std::move(perms);
  }
  return g;
}

GroupTable GroupTable::builtin(const std::string& spec) {
  static const std::regex re("^([SAZD])([0-9]+)$");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) {
    throw PreconditionError("unknown builtin group \"" + spec + "\" (expected S<m>, A<m>, Z<m>, D<m>)");
  }
  const std::size_t k = std::stoul(m[2]);
  const char kind = m[1].str()[0];
  const std::size_t max_k = (kind == 'S' || kind == 'A') ? 6 : 128;
  if (k == 0 || k > max_k) {
    throw PreconditionError("builtin group parameter must lie in 1.." + std::to_string(max_k));
  }
  switch (kind) {
    case 'S':
      return symmetric(k);
    case 'A':
      return alternating(k);
    case 'Z':
      return cyclic(k);
    default: {
      if (k < 3) throw PreconditionError("dihedral group needs m >= 3");
      std::vector<Point> refl(k);
      for (std::size_t i = 0; i < k; ++i) refl[i] = static_cast<Point>((k - i) % k);
      std::vector<Perm> gens{cycle_perm(k), Perm(std::move(refl))};
      return from_permutations(gens, k, spec);
    }
  }
}

std::optional<GroupElem> GroupTable::index_of(const Perm& p) const {
  if (!perms_) return std::nullopt;
  auto it = std::lower_bound(perms_->begin(), perms_->end(), p);
  if (it == perms_->end() || *it != p) return std::nullopt;
  return static_cast<GroupElem>(it - perms_->begin());
}

std::string GroupTable::label(GroupElem a) const {
  if (perms_) return (*perms_)[a].to_cycle_string();
  return std::to_string(a);
}

std::uint64_t GroupTable::element_order(GroupElem a) const {
  std::uint64_t k = 1;
  for (GroupElem x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::vector<GroupElem> GroupTable::conjugacy_class(GroupElem a) const {
  std::set<GroupElem> cls;
  for (GroupElem g = 0; g < order_; ++g) cls.insert(conj(a, g));
  return {cls.begin(), cls.end()};
}

std::vector<bool> GroupTable::subgroup_closure(std::span<const GroupElem> gens) const {
  std::vector<bool> in(order_, false);
  std::vector<GroupElem> queue{identity_};
  in[identity_] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (GroupElem g : gens) {
      GroupElem next = mul(queue[head], g);
      if (!in[next]) {
        in[next] = true;
        queue.push_back(next);
      }
    }
  }
  return in;
}

bool GroupTable::generates(std::span<const GroupElem> gens) const {
  const auto in = subgroup_closure(gens);
  return std::all_of(in.begin(), in.end(), [](bool b) { return b; });
}

namespace {

std::vector<bool> derived_of(const GroupTable& g, const std::vector<bool>& sub) {
  std::vector<GroupElem> comms;
  std::vector<bool> seen(g.order(), false);
  for (GroupElem a = 0; a < g.order(); ++a) {
    if (!sub[a]) continue;
    for (GroupElem b = 0; b < g.order(); ++b) {
      if (!sub[b]) continue;
      GroupElem c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  }
  return g.subgroup_closure(comms);
}

}  // namespace

std::vector<bool> GroupTable::commutator_subgroup() const {
  return derived_of(*this, std::vector<bool>(order_, true));
}

bool GroupTable::is_abelian() const {
  for (GroupElem a = 0; a < order_; ++a) {
    for (GroupElem b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

bool GroupTable::is_solvable() const {
  std::vector<bool> cur(order_, true);
  for (;;) {
    const auto next = derived_of(*this, cur);
    const auto size = std::count(next.begin(), next.end(), true);
    if (size == 1) return true;
    if (next == cur) return false;
    cur = next;
  }
}

std::vector<GroupElem> GroupTable::greedy_generators() const {
  std::vector<GroupElem> gens;
  auto closure = subgroup_closure(gens);
  auto count = [](const std::vector<bool>& v) { return std::count(v.begin(), v.end(), true); };
  while (count(closure) < static_cast<std::ptrdiff_t>(order_)) {
    GroupElem best = 0;
    std::ptrdiff_t best_size = -1;
    for (GroupElem x = 0; x < order_; ++x) {
      if (closure[x]) continue;
      gens.push_back(x);
      const auto size = count(subgroup_closure(gens));
      gens.pop_back();
      if (size > best_size) {
        best_size = size;
        best = x;
      }
    }
    gens.push_back(best);
    closure = subgroup_closure(gens);
  }
  return gens;
}

bool isomorphic(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return false;
  const std::size_t n = a.order();
  std::map<std::uint64_t, std::size_t> hist_a, hist_b;
  for (GroupElem x = 0; x < n; ++x) {
    ++hist_a[a.element_order(x)];
    ++hist_b[b.element_order(x)];
  }
  if (hist_a != hist_b) return false;
  if (a.is_abelian() != b.is_abelian()) return false;

  const auto gens = a.greedy_generators();
  std::vector<GroupElem> images(gens.size());

  auto extends = [&]() {
    std::vector<std::optional<GroupElem>> phi(n);
    std::vector<bool> used(n, false);
    phi[a.identity()] = b.identity();
    used[b.identity()] = true;
    std::vector<GroupElem> queue{a.identity()};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const GroupElem x = queue[head];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const GroupElem y = a.mul(x, gens[i]);
        const GroupElem fy = b.mul(*phi[x], images[i]);
        if (phi[y]) {
          if (*phi[y] != fy) return false;
        } else {
          if (used[fy]) return false;
          phi[y] = fy;
          used[fy] = true;
          queue.push_back(y);
        }
      }
    }
    return queue.size() == n;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == gens.size()) return extends();
    const auto ord = a.element_order(gens[i]);
    for (GroupElem y = 0; y < n; ++y) {
      if (b.element_order(y) != ord) continue;
      images[i] = y;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace hurwitz
