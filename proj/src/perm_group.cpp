#include "hurwitz/perm_group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_set>

#include "hurwitz/error.hpp"

namespace hurwitz {

PermGroup::PermGroup(std::span<const Perm> generators, std::size_t degree, bool drop_redundant) {
  degree_ = generators.empty() ? degree : generators.front().degree();
  for (const Perm& g : generators) {
    if (g.degree() != degree_) throw PreconditionError("generators of mixed degree");
  }
  if (!generators.empty() && degree != 0 && degree != degree_) {
    throw PreconditionError("generator degree does not match requested degree");
  }
  levels_.resize(degree_);
  for (std::size_t k = 0; k < degree_; ++k) {
    Level& level = levels_[k];
    level.coset.resize(degree_);
    level.coset_inv.resize(degree_);
    level.coset[k] = Perm::identity(degree_);
    level.coset_inv[k] = level.coset[k];
    level.orbit.push_back(static_cast<Point>(k));
  }
  for (const Perm& g : generators) {
    if (drop_redundant) {
      if (g.is_identity() || sift_from(0, g)) continue;
      generators_.push_back(g);
    }
    if (!g.is_identity()) add_generator(0, g);
  }
  if (!drop_redundant) generators_.assign(generators.begin(), generators.end());
  order_ = 1;
  for (const Level& level : levels_) order_ *= level.orbit.size();
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup({}, degree); }

PermGroup PermGroup::symmetric(std::size_t degree) {
  std::vector<Perm> gens;
  if (degree >= 2) {
    gens.push_back(Perm::transposition(degree, 0, 1));
    std::vector<Point> cycle(degree);
    for (std::size_t i = 0; i < degree; ++i) cycle[i] = static_cast<Point>((i + 1) % degree);
    gens.emplace_back(std::move(cycle));
  }
  return PermGroup(gens, degree);
}

PermGroup PermGroup::alternating(std::size_t degree) {
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < degree; ++i) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    img[0] = 1;
    img[1] = static_cast<Point>(i);
    img[i] = 0;
    gens.emplace_back(std::move(img));
  }
  return PermGroup(gens, degree);
}

// True iff g (which fixes 0..level-1) sifts to the identity.
bool PermGroup::sift_from(std::size_t level, Perm g) const {
  for (std::size_t i = level; i < degree_; ++i) {
    Point j = g[static_cast<Point>(i)];
    if (j == i) continue;
    const auto& inv = levels_[i].coset_inv[j];
    if (!inv) return false;
    g = g * *inv;
  }
  return true;
}

void PermGroup::add_generator(std::size_t level, const Perm& g) {
  if (level >= degree_ || sift_from(level, g)) return;
  Level& lv = levels_[level];
  lv.gens.push_back(g);
  const std::vector<Point> snapshot = lv.orbit;
  for (Point j : snapshot) extend_orbit(level, *levels_[level].coset[j] * g);
}

void PermGroup::extend_orbit(std::size_t level, const Perm& g) {
  Point j = g[static_cast<Point>(level)];
  Level& lv = levels_[level];
  if (lv.coset[j]) {
    Perm h = g * *lv.coset_inv[j];
    add_generator(level + 1, h);
    return;
  }
  lv.coset[j] = g;
  lv.coset_inv[j] = g.inverse();
  lv.orbit.push_back(j);
  // gens at this level cannot grow during the loop: recursion only adds
  // generators at deeper levels.
  for (std::size_t t = 0; t < levels_[level].gens.size(); ++t) {
    extend_orbit(level, g * levels_[level].gens[t]);
  }
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (std::size_t k = 0; k < degree_; ++k) {
    if (levels_[k].orbit.size() > 1) b.push_back(static_cast<Point>(k));
  }
  return b;
}

std::vector<Perm> PermGroup::strong_generators() const {
  std::vector<Perm> out;
  for (const Level& lv : levels_) out.insert(out.end(), lv.gens.begin(), lv.gens.end());
  return out;
}

std::size_t PermGroup::basic_orbit_size(std::size_t level) const {
  return level < degree_ ? levels_[level].orbit.size() : 1;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) throw PreconditionError("membership test: degree mismatch");
  return sift_from(0, p);
}

void PermGroup::for_each_element(const std::function<bool(const Perm&)>& visit) const {
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < degree_; ++k) {
    if (levels_[k].orbit.size() > 1) active.push_back(k);
  }
  bool stop = false;
  // g = u_{last} * ... * u_{first}, descending through the active levels.
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t depth, const Perm& acc) {
    if (stop) return;
    if (depth == 0) {
      if (!visit(acc)) stop = true;
      return;
    }
    const Level& lv = levels_[active[depth - 1]];
    for (Point j : lv.orbit) {
      rec(depth - 1, acc * *lv.coset[j]);
      if (stop) return;
    }
  };
  rec(active.size(), Perm::identity(degree_));
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  Perm acc = Perm::identity(degree_);
  for (std::size_t k = degree_; k-- > 0;) {
    const Level& lv = levels_[k];
    if (lv.orbit.size() <= 1) continue;
    std::uniform_int_distribution<std::size_t> pick(0, lv.orbit.size() - 1);
    acc = acc * *lv.coset[lv.orbit[pick(rng)]];
  }
  return acc;
}

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BlockStructure BlockStructure::contiguous(std::span<const std::size_t> sizes) {
  BlockStructure b;
  Point next = 0;
  for (std::size_t s : sizes) {
    std::vector<Point> block(s);
    std::iota(block.begin(), block.end(), next);
    next += static_cast<Point>(s);
    b.blocks.push_back(std::move(block));
  }
  return b;
}

std::size_t BlockStructure::degree() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

std::vector<std::size_t> BlockStructure::sizes() const {
  std::vector<std::size_t> s;
  for (const auto& b : blocks) s.push_back(b.size());
  return s;
}

std::vector<std::size_t> BlockStructure::labels() const {
  const std::size_t n = degree();
  std::vector<std::size_t> label(n, blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    for (Point p : blocks[j]) {
      if (p >= n || label[p] != blocks.size()) {
        throw StructuralError("blocks do not partition 0.." + std::to_string(n - 1));
      }
      label[p] = j;
    }
  }
  return label;
}

namespace {

std::size_t gf2_rank(std::vector<std::uint64_t> rows) {
  std::size_t rank = 0;
  for (std::size_t bit = 0; bit < 64; ++bit) {
    const std::uint64_t mask = std::uint64_t{1} << bit;
    auto pivot = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                              [&](std::uint64_t r) { return (r & mask) != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), pivot);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && (rows[i] & mask)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Classification classify_in_product(const PermGroup& h, const BlockStructure& blocks) {
  if (blocks.degree() != h.degree()) {
    throw PreconditionError("classify_in_product: block sizes do not sum to the group degree");
  }
  if (blocks.blocks.size() > 64) throw PreconditionError("classify_in_product: more than 64 blocks");
  const auto label = blocks.labels();
  const std::size_t n = h.degree();
  Classification c;
  c.order = h.order();

  c.respects_blocks = std::all_of(h.generators().begin(), h.generators().end(), [&](const Perm& g) {
    for (Point p = 0; p < n; ++p) {
      if (label[g[p]] != label[p]) return false;
    }
    return true;
  });
  c.inside_even_part = std::all_of(h.generators().begin(), h.generators().end(),
                                   [](const Perm& g) { return g.is_even(); });

  BigInt full = 1;
  for (const auto& b : blocks.blocks) full *= factorial(b.size());
  c.is_full_product = c.respects_blocks && h.order() == full;

  c.contains_alt_product = true;
  for (const auto& b : blocks.blocks) {
    for (std::size_t i = 2; i < b.size() && c.contains_alt_product; ++i) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      img[b[0]] = b[1];
      img[b[1]] = b[i];
      img[b[i]] = b[0];
      c.contains_alt_product = h.contains(Perm(std::move(img)));
    }
  }

  if (c.respects_blocks) {
    std::vector<std::uint64_t> rows;
    for (const Perm& g : h.generators()) {
      std::uint64_t row = 0;
      std::vector<bool> seen(n, false);
      for (Point p = 0; p < n; ++p) {
        if (seen[p]) continue;
        std::size_t len = 0;
        for (Point q = p; !seen[q]; q = g[q]) {
          seen[q] = true;
          ++len;
        }
        if (len % 2 == 0) row ^= std::uint64_t{1} << label[p];
      }
      rows.push_back(row);
    }
    c.sign_image_rank = gf2_rank(std::move(rows));
  }

  if (c.is_full_product && !c.contains_alt_product) {
    throw InvariantError("classify_in_product: full product without alternating product");
  }
  if (c.contains_alt_product && c.respects_blocks) {
    BigInt scaled = h.order() << blocks.blocks.size();
    if (scaled < full) throw InvariantError("classify_in_product: order below prod n_j!/2^k");
  }
  return c;
}

bool k_homogeneous(const PermGroup& h, std::size_t k, std::uint64_t max_subsets) {
  const std::size_t n = h.degree();
  if (k > n) throw PreconditionError("k_homogeneous: k exceeds the degree");
  if (k == 0 || k == n) return true;
  if (n > 64) throw PreconditionError("k_homogeneous: degree above 64 unsupported");
  BigInt total = 1;
  for (std::size_t i = 0; i < k; ++i) total = total * (n - i) / (i + 1);
  if (total > max_subsets) throw ResourceError("k_homogeneous: C(n,k) exceeds the subset budget");
  const auto target = static_cast<std::uint64_t>(total);

  std::uint64_t start = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  std::unordered_set<std::uint64_t> seen{start};
  std::vector<std::uint64_t> queue{start};
  for (std::size_t head = 0; head < queue.size() && seen.size() < target; ++head) {
    const std::uint64_t s = queue[head];
    for (const Perm& g : h.generators()) {
      std::uint64_t img = 0;
      for (std::uint64_t bits = s; bits; bits &= bits - 1) {
        img |= std::uint64_t{1} << g[static_cast<Point>(std::countr_zero(bits))];
      }
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return seen.size() == target;
}

HomogeneityVerdict check_homogeneity_dichotomy(const PermGroup& h) {
  const std::size_t n = h.degree();
  if (n == 0) throw PreconditionError("check_homogeneity_dichotomy: degree must be positive");
  HomogeneityVerdict v;
  v.k = n / 2;
  v.homogeneous = k_homogeneous(h, v.k);
  const BigInt nfact = factorial(n);
  v.is_symmetric = h.order() == nfact;
  const bool all_even = std::all_of(h.generators().begin(), h.generators().end(),
                                    [](const Perm& g) { return g.is_even(); });
  v.is_alternating = n <= 1 ? true : (all_even && h.order() * 2 == nfact);
  v.consistent = !v.homogeneous || v.is_symmetric || v.is_alternating;
  return v;
}

void for_each_permutation(std::size_t degree, const std::function<bool(const Perm&)>& visit) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  do {
    if (!visit(Perm(img))) return;
  } while (std::next_permutation(img.begin(), img.end()));
}

bool invariably_generates(std::span<const std::vector<Perm>> subgroup_gens, std::size_t degree,
                          const InvariableOptions& options) {
  for (const auto& gens : subgroup_gens) {
    for (const Perm& g : gens) {
      if (g.degree() != degree) throw PreconditionError("invariably_generates: degree mismatch");
    }
  }
  const BigInt target = factorial(degree);
  if (subgroup_gens.empty()) return target == 1;

  auto generates_with = [&](const std::vector<Perm>& conjugators) {
    std::vector<Perm> all(subgroup_gens[0].begin(), subgroup_gens[0].end());
    for (std::size_t i = 1; i < subgroup_gens.size(); ++i) {
      for (const Perm& g : subgroup_gens[i]) all.push_back(g.conjugate_by(conjugators[i - 1]));
    }
    return PermGroup(all, degree).order() == target;
  };

  const std::size_t others = subgroup_gens.size() - 1;
  if (options.mode == InvariableMode::sampled) {
    std::mt19937_64 rng(options.seed);
    const PermGroup sym = PermGroup::symmetric(degree);
    for (std::size_t s = 0; s < options.samples; ++s) {
      std::vector<Perm> conj;
      for (std::size_t i = 0; i < others; ++i) conj.push_back(sym.random_element(rng));
      if (!generates_with(conj)) return false;
    }
    return true;
  }

  if (degree > options.max_exhaustive_degree) {
    throw ResourceError("invariably_generates: exhaustive mode limited to degree " +
                        std::to_string(options.max_exhaustive_degree));
  }
  const BigInt combos = boost::multiprecision::pow(target, static_cast<unsigned>(others));
  if (combos > 100'000'000) {
    throw ResourceError("invariably_generates: exhaustive conjugator tuples exceed budget");
  }
  std::vector<Perm> all_perms;
  for_each_permutation(degree, [&](const Perm& p) {
    all_perms.push_back(p);
    return true;
  });
  // Odometer over all (others)-tuples of conjugators.
  std::vector<std::size_t> idx(others, 0);
  for (;;) {
    std::vector<Perm> conj;
    for (std::size_t i : idx) conj.push_back(all_perms[i]);
    if (!generates_with(conj)) return false;
    std::size_t pos = 0;
    while (pos < others && ++idx[pos] == all_perms.size()) idx[pos++] = 0;
    if (pos == others) break;
  }
  return true;
}

}  // namespace hurwitz
