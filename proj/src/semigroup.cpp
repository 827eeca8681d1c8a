#include "hurwitz/semigroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

std::string pack(std::span<const Elem> t) {
  std::string s(t.size(), '\0');
  for (std::size_t i = 0; i < t.size(); ++i) s[i] = static_cast<char>(t[i]);
  return s;
}

std::string pack(std::span<const std::uint8_t> t) { return std::string(t.begin(), t.end()); }

}  // namespace

Semigroup::Semigroup(Rack x, OrbitOptions options, std::size_t max_tuples)
    : rack_(std::make_shared<const Rack>(std::move(x))),
      comp_(components(*rack_)),
      options_(options),
      max_tuples_(max_tuples) {
  options_.colored = false;
  if (rack_->size() > 256) throw PreconditionError("semigroup: racks above 256 elements are not supported");
}

std::vector<std::size_t> Semigroup::component_vector(const Tuple& t) const {
  std::vector<std::size_t> v(comp_.count, 0);
  for (Elem e : t) ++v[comp_.labels[e]];
  return v;
}

OrbitClass Semigroup::compute(const Tuple& t) const {
  const OrbitGraph o = orbit(*rack_, t, options_);
  OrbitClass c;
  c.rack = rack_;
  c.representative = o.canonical_representative();
  c.length = t.size();
  c.components = component_vector(t);
  c.generating = generates(*rack_, t);
  c.orbit_size = o.size();

  std::unique_lock lock(mutex_);
  auto it = index_.find(pack(t));
  if (it != index_.end()) return known_[it->second];
  const auto slot = static_cast<std::uint32_t>(known_.size());
  known_.push_back(c);
  const bool memo = index_.size() + o.size() <= max_tuples_;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (memo || i == 0) index_.emplace(pack(o.data().member(i)), slot);
  }
  if (!memo) index_.emplace(pack(t), slot);
  return c;
}

OrbitClass Semigroup::orbit_class(const Tuple& t) const {
  if (t.empty()) throw PreconditionError("orbit_class: tuples have length at least 1");
  for (Elem e : t) {
    if (e >= rack_->size()) throw PreconditionError("orbit_class: entry out of range");
  }
  {
    std::shared_lock lock(mutex_);
    auto it = index_.find(pack(t));
    if (it != index_.end()) return known_[it->second];
  }
  return compute(t);
}

OrbitClass Semigroup::concat(const OrbitClass& u, const OrbitClass& v) const {
  for (const OrbitClass* c : {&u, &v}) {
    if (!c->rack || (c->rack != rack_ && !(*c->rack == *rack_))) {
      throw PreconditionError("concat: class belongs to a different rack");
    }
  }
  Tuple t = u.representative;
  t.insert(t.end(), v.representative.begin(), v.representative.end());
  return orbit_class(t);
}

std::vector<OrbitClass> Semigroup::classes(const std::vector<std::size_t>& n_vec, bool generating_only) const {
  if (n_vec.size() != comp_.count) {
    throw PreconditionError("n_vec needs one entry per rack component (" + std::to_string(comp_.count) + ")");
  }
  std::vector<std::vector<Elem>> members(comp_.count);
  for (std::size_t j = 0; j < comp_.count; ++j) members[j] = comp_.members(j);

  // Positions are laid out block by block; every orbit meets this block.
  std::vector<std::size_t> pos_comp;
  for (std::size_t j = 0; j < n_vec.size(); ++j) pos_comp.insert(pos_comp.end(), n_vec[j], j);
  const std::size_t n = pos_comp.size();
  if (n == 0) throw PreconditionError("count_classes: total length must be positive");

  std::vector<std::size_t> radix(n);
  double approx = 1;
  std::size_t total = 1;
  for (std::size_t p = 0; p < n; ++p) {
    radix[p] = members[pos_comp[p]].size();
    approx *= static_cast<double>(radix[p]);
    if (approx > static_cast<double>(max_tuples_)) {
      throw ResourceError("count_classes: block of more than " + std::to_string(max_tuples_) + " tuples");
    }
    total *= radix[p];
  }
  std::vector<std::size_t> digit_of(rack_->size());
  for (const auto& m : members) {
    for (std::size_t d = 0; d < m.size(); ++d) digit_of[m[d]] = d;
  }
  auto block_index = [&](std::span<const std::uint8_t> t) -> std::optional<std::size_t> {
    std::size_t idx = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (comp_.labels[t[p]] != pos_comp[p]) return std::nullopt;
      idx = idx * radix[p] + digit_of[t[p]];
    }
    return idx;
  };

  std::vector<bool> seen(total, false);
  std::vector<OrbitClass> out;
  Tuple t(n);
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (idx > 0) {
      std::size_t p = n;
      while (p-- > 0) {
        if (++digits[p] < radix[p]) break;
        digits[p] = 0;
      }
    }
    if (seen[idx]) continue;
    for (std::size_t p = 0; p < n; ++p) t[p] = members[pos_comp[p]][digits[p]];
    const OrbitGraph o = orbit(*rack_, t, options_);
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (auto b = block_index(o.data().member(i))) seen[*b] = true;
    }
    const bool gen = generates(*rack_, t);
    if (generating_only && !gen) continue;
    OrbitClass c;
    c.rack = rack_;
    c.representative = o.canonical_representative();
    c.length = n;
    c.components = n_vec;
    c.generating = gen;
    c.orbit_size = o.size();
    {
      std::unique_lock lock(mutex_);
      if (!index_.contains(pack(c.representative))) {
        const auto slot = static_cast<std::uint32_t>(known_.size());
        known_.push_back(c);
        const bool memo = index_.size() + o.size() <= max_tuples_;
        for (std::size_t i = 0; i < o.size(); ++i) {
          if (memo || i == 0) index_.emplace(pack(o.data().member(i)), slot);
        }
      }
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const OrbitClass& a, const OrbitClass& b) { return a.representative < b.representative; });
  return out;
}

std::size_t Semigroup::count_classes(const std::vector<std::size_t>& n_vec, bool generating_only) const {
  return classes(n_vec, generating_only).size();
}

MultMapReport Semigroup::mult_map_check(const Tuple& w, const std::vector<std::size_t>& n_vec) const {
  if (w.empty()) throw PreconditionError("mult_map_check: w must be nonempty");
  for (Elem e : w) {
    if (e >= rack_->size()) throw PreconditionError("mult_map_check: entry of w out of range");
  }
  const auto domain = classes(n_vec, true);
  std::vector<std::size_t> target = n_vec;
  const auto dw = component_vector(w);
  for (std::size_t j = 0; j < target.size(); ++j) target[j] += dw[j];
  const auto codomain = classes(target, true);

  std::set<Tuple> codomain_reps;
  for (const auto& c : codomain) codomain_reps.insert(c.representative);
  std::set<Tuple> image;
  MultMapReport rep;
  rep.domain_size = domain.size();
  rep.codomain_size = codomain.size();
  rep.injective = true;
  for (const auto& c : domain) {
    Tuple t = w;
    t.insert(t.end(), c.representative.begin(), c.representative.end());
    const OrbitClass img = orbit_class(t);
    if (!codomain_reps.contains(img.representative)) {
      throw InvariantError("mult_map_check: image class is not generating or has the wrong type");
    }
    if (!image.insert(img.representative).second) rep.injective = false;
  }
  rep.surjective = image.size() == codomain_reps.size();
  if (rep.surjective && rep.domain_size < rep.codomain_size) throw InvariantError("mult_map_check: size mismatch");
  if (rep.injective && rep.domain_size > rep.codomain_size) throw InvariantError("mult_map_check: size mismatch");
  return rep;
}

StabilizationTable Semigroup::stabilization_table(
    const std::vector<std::pair<std::size_t, std::size_t>>& ranges) const {
  const std::size_t k = comp_.count;
  if (ranges.size() != k) {
    throw PreconditionError("stabilization_table: need one range per rack component (" + std::to_string(k) + ")");
  }
  for (const auto& [lo, hi] : ranges) {
    if (lo > hi) throw PreconditionError("stabilization_table: empty range");
  }
  StabilizationTable table;
  table.rack_name = rack_->name();
  std::vector<std::size_t> cur(k);
  for (std::size_t j = 0; j < k; ++j) cur[j] = ranges[j].first;
  std::map<std::vector<std::size_t>, std::size_t> row_of;
  for (;;) {
    std::size_t total = 0;
    for (auto v : cur) total += v;
    StabilizationRow row;
    row.n_vec = cur;
    if (total > 0) {
      const auto all = classes(cur, false);
      row.classes = all.size();
      row.generating_classes = static_cast<std::size_t>(
          std::count_if(all.begin(), all.end(), [](const OrbitClass& c) { return c.generating; }));
    }
    row_of[cur] = table.rows.size();
    table.rows.push_back(std::move(row));
    std::size_t j = k;
    while (j-- > 0) {
      if (++cur[j] <= ranges[j].second) break;
      cur[j] = ranges[j].first;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }

  for (auto& row : table.rows) {
    row.stable = true;
    for (std::size_t j = 0; j < k && row.stable; ++j) {
      auto probe = row.n_vec;
      for (std::size_t v = row.n_vec[j] + 1; v <= ranges[j].second; ++v) {
        probe[j] = v;
        if (table.rows[row_of.at(probe)].generating_classes != row.generating_classes) {
          row.stable = false;
          break;
        }
      }
    }
  }
  if (k == 1) {
    for (const auto& row : table.rows) {
      if (row.stable) {
        table.threshold = row.n_vec[0];
        table.window = ranges[0].second - row.n_vec[0] + 1;
        break;
      }
    }
  }
  return table;
}

std::size_t Semigroup::cache_size() const {
  std::shared_lock lock(mutex_);
  return index_.size();
}

OrbitClass orbit_class(const Rack& x, const Tuple& t) { return Semigroup(x).orbit_class(t); }

std::size_t count_classes(const Rack& x, const std::vector<std::size_t>& n_vec, bool generating_only) {
  return Semigroup(x).count_classes(n_vec, generating_only);
}

std::string stabilization_csv(const StabilizationTable& t) {
  std::string out;
  if (t.rows.empty()) return out;
  for (std::size_t j = 0; j < t.rows.front().n_vec.size(); ++j) out += "n_" + std::to_string(j + 1) + ",";
  out += "classes,generating_classes,stable\n";
  for (const auto& r : t.rows) {
    for (auto v : r.n_vec) out += std::to_string(v) + ",";
    out += std::to_string(r.classes) + "," + std::to_string(r.generating_classes) + "," +
           (r.stable ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace hurwitz
