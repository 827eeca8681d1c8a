#include "hurwitz/nielsen.hpp"

#include <algorithm>
#include <map>

#include "hurwitz/error.hpp"

namespace hurwitz {

std::size_t d_normal(const GroupTable& g) {
  const auto k = g.commutator_subgroup();
  const std::size_t ksize = static_cast<std::size_t>(std::count(k.begin(), k.end(), true));
  const std::size_t m = g.order() / ksize;
  std::size_t rank = 0;
  std::size_t rest = m;
  for (std::size_t p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    std::size_t hits = 0;
    for (GroupElem a = 0; a < g.order(); ++a) {
      GroupElem pw = g.identity();
      for (std::size_t e = 0; e < p; ++e) pw = g.mul(pw, a);
      if (k[pw]) ++hits;
    }
    std::size_t cosets = hits / ksize, r = 0;
    while (cosets > 1) {
      cosets /= p;
      ++r;
    }
    rank = std::max(rank, r);
  }
  return std::max<std::size_t>(rank, 1);
}

GroupTuple apply_generator(const GroupTable& g, const GroupTuple& t, std::size_t i, int sign) {
  if (i < 1 || i + 1 > t.size()) throw PreconditionError("braid generator index out of range");
  GroupTuple out = t;
  const GroupElem a = t[i - 1], b = t[i];
  if (sign > 0) {
    out[i - 1] = b;
    out[i] = g.conj(a, b);
  } else {
    out[i - 1] = g.mul(g.mul(a, b), g.inv(a));
    out[i] = a;
  }
  return out;
}

GroupTuple apply_word(const GroupTable& g, GroupTuple t, const BraidWord& w) {
  for (const auto& l : w) t = apply_generator(g, t, l.index, l.sign);
  return t;
}

GroupElem tuple_product(const GroupTable& g, const GroupTuple& t) {
  GroupElem p = g.identity();
  for (GroupElem e : t) p = g.mul(p, e);
  return p;
}

GroupTuple conjugate_tuple(const GroupTable& g, const GroupTuple& t, GroupElem h) {
  GroupTuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = g.conj(t[i], h);
  return out;
}

GroupTuple conjugation_canonical(const GroupTable& g, const GroupTuple& t) {
  GroupTuple best = t, cur(t.size());
  for (GroupElem h = 0; h < g.order(); ++h) {
    bool less = false, decided = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
      cur[i] = g.conj(t[i], h);
      if (!decided && cur[i] != best[i]) {
        less = cur[i] < best[i];
        decided = true;
        if (!less) break;
      }
    }
    if (less) best = cur;
  }
  return best;
}

namespace {

// Products of all arrangements with quota vector r, as membership masks,
// indexed by the mixed-radix encoding of r.
struct Feasibility {
  std::vector<std::size_t> stride;
  std::vector<std::vector<bool>> sets;

  Feasibility(const GroupTable& g, const std::vector<std::vector<GroupElem>>& classes,
              const std::vector<std::size_t>& n_vec) {
    const std::size_t k = n_vec.size();
    stride.assign(k, 1);
    std::size_t total = 1;
    for (std::size_t j = k; j-- > 0;) {
      stride[j] = total;
      total *= n_vec[j] + 1;
    }
    sets.assign(total, std::vector<bool>(g.order(), false));
    sets[0][g.identity()] = true;
    std::vector<std::size_t> r(k, 0);
    for (std::size_t code = 1; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t j = 0; j < k; ++j) {
        r[j] = c / stride[j];
        c %= stride[j];
      }
      auto& s = sets[code];
      for (std::size_t j = 0; j < k; ++j) {
        if (r[j] == 0) continue;
        const auto& prev = sets[code - stride[j]];
        for (GroupElem a : classes[j]) {
          for (GroupElem b = 0; b < g.order(); ++b) {
            if (prev[b]) s[g.mul(a, b)] = true;
          }
        }
      }
    }
  }
};

}  // namespace

std::uint64_t enumerate_nielsen(const GroupTable& g, const std::vector<GroupElem>& class_seeds,
                                const std::vector<std::size_t>& n_vec, const NielsenOptions& options,
                                const std::function<bool(const GroupTuple&)>& visit) {
  if (class_seeds.size() != n_vec.size()) throw PreconditionError("enumerate_nielsen: one count per class");
  if (class_seeds.empty()) throw PreconditionError("enumerate_nielsen: no classes");
  std::vector<std::vector<GroupElem>> classes;
  std::vector<int> class_of(g.order(), -1);
  for (std::size_t j = 0; j < class_seeds.size(); ++j) {
    if (class_seeds[j] >= g.order()) throw PreconditionError("enumerate_nielsen: seed out of range");
    classes.push_back(g.conjugacy_class(class_seeds[j]));
    for (GroupElem e : classes.back()) {
      if (class_of[e] != -1) throw PreconditionError("enumerate_nielsen: repeated class");
      class_of[e] = static_cast<int>(j);
    }
  }
  std::size_t n = 0;
  for (auto v : n_vec) n += v;
  if (n == 0) throw PreconditionError("enumerate_nielsen: empty tuples");

  std::vector<GroupElem> candidates;
  for (GroupElem e = 0; e < g.order(); ++e) {
    if (class_of[e] >= 0) candidates.push_back(e);
  }
  std::optional<Feasibility> feas;
  if (options.product_one) feas.emplace(g, classes, n_vec);

  std::vector<std::size_t> remaining = n_vec;
  std::size_t code = 0;
  if (feas) {
    for (std::size_t j = 0; j < n_vec.size(); ++j) code += n_vec[j] * feas->stride[j];
  }
  GroupTuple t(n);
  std::vector<GroupElem> prefix(n + 1, g.identity());
  std::uint64_t nodes = 0, emitted = 0;
  bool stop = false;

  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (stop) return;
    if (++nodes > options.max_nodes) {
      throw ResourceError("enumerate_nielsen: node budget of " + std::to_string(options.max_nodes) + " exceeded");
    }
    if (pos == n) {
      if (options.product_one && prefix[n] != g.identity()) return;
      if (!g.generates(t)) return;
      if (options.up_to_conj && conjugation_canonical(g, t) != t) return;
      ++emitted;
      if (!visit(t)) stop = true;
      return;
    }
    for (GroupElem e : candidates) {
      const auto j = static_cast<std::size_t>(class_of[e]);
      if (remaining[j] == 0) continue;
      const GroupElem p = g.mul(prefix[pos], e);
      if (feas && !feas->sets[code - feas->stride[j]][g.inv(p)]) continue;
      t[pos] = e;
      prefix[pos + 1] = p;
      --remaining[j];
      if (feas) code -= feas->stride[j];
      rec(pos + 1);
      ++remaining[j];
      if (feas) code += feas->stride[j];
      if (stop) return;
    }
  };
  rec(0);
  return emitted;
}

bool cyclic_shift_check(const GroupTable& g, const GroupTuple& t) {
  if (t.size() <= 1) return true;
  const GroupTuple moved = apply_word(g, t, cyclic_shift_word(t.size()));
  GroupTuple shifted(t.size());
  shifted[0] = t.back();
  std::copy(t.begin(), t.end() - 1, shifted.begin() + 1);
  return conjugation_canonical(g, moved) == conjugation_canonical(g, shifted);
}

bool is_abundance_witness(const GroupTable& g, GroupElem x, GroupElem y) {
  std::vector<GroupElem> conj;
  GroupElem c = x;
  for (std::size_t r = 0; r < g.order(); ++r) {
    conj.push_back(c);
    c = g.conj(c, y);
    if (c == x) break;
  }
  return g.generates(conj);
}

std::optional<GroupElem> find_abundant(const GroupTable& g, GroupElem x) {
  if (x >= g.order()) throw PreconditionError("find_abundant: element out of range");
  for (GroupElem y = 0; y < g.order(); ++y) {
    if (is_abundance_witness(g, x, y)) return y;
  }
  return std::nullopt;
}

Certificate abundant_ncycle_certificate(const GroupTable& g, GroupElem x, GroupElem y, std::size_t n) {
  const std::size_t m = g.order();
  if (x >= m || y >= m) throw PreconditionError("certificate: element out of range");
  if (n == 0 || n % m != 0) throw PreconditionError("certificate: n must be a positive multiple of |G|");
  if (!is_abundance_witness(g, x, y)) throw PreconditionError("certificate: conjugates of x under <y> do not generate G");

  Certificate cert;
  cert.group = g.name();
  cert.x = g.label(x);
  cert.y = g.label(y);
  cert.n = n;
  cert.theorem_applies = n % (m * m) == 0;

  GroupTuple s0;
  GroupElem c = x;
  for (std::size_t r = 0; r < m; ++r) {
    s0.push_back(c);
    c = g.conj(c, y);
  }
  GroupTuple s;
  for (std::size_t k = 0; k < n / m; ++k) s.insert(s.end(), s0.begin(), s0.end());

  cert.product_one = tuple_product(g, s) == g.identity();
  cert.generates = g.generates(s);
  const GroupTuple moved = apply_word(g, s, cyclic_shift_word(n));
  cert.conjugator = g.mul(g.inv(y), s.back());
  cert.shift_fixes_class = conjugate_tuple(g, s, cert.conjugator) == moved &&
                           conjugation_canonical(g, s) == conjugation_canonical(g, moved);
  const auto type = braid_to_perm(cyclic_shift_word(n), n).cycle_type();
  cert.image_is_ncycle = type.size() == 1 && type[0] == n;
  cert.verified = cert.product_one && cert.generates && cert.shift_fixes_class && cert.image_is_ncycle;
  return cert;
}

QuotientOrbit quotient_orbit_and_image(const GroupTable& g, const GroupTuple& t, const OrbitOptions& options) {
  if (g.order() > 256) throw PreconditionError("quotient orbit: groups above order 256 are not supported");
  if (t.empty()) throw PreconditionError("quotient orbit: empty tuple");
  for (GroupElem e : t) {
    if (e >= g.order()) throw PreconditionError("quotient orbit: entry out of range");
  }
  if (!g.generates(t)) throw PreconditionError("quotient orbit: tuple does not generate the group");
  const std::size_t n = t.size();
  const GroupTuple seed = conjugation_canonical(g, t);
  std::vector<std::uint8_t> packed(seed.begin(), seed.end());
  PackedMove move = [&g, n](const std::uint8_t* in, std::size_t pos, int sign, std::uint8_t* out) {
    GroupTuple cur(in, in + n);
    cur = conjugation_canonical(g, apply_generator(g, cur, pos + 1, sign));
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(cur[i]);
  };
  KernelOptions k;
  k.cap = options.cap;
  k.execution = options.execution;
  k.threads = options.threads;
  const OrbitData data = enumerate_orbit(packed, move, k);
  QuotientOrbit q;
  q.orbit_size = data.size();
  q.image = PermGroup(schreier_generator_images(data, options.execution, options.threads), n, true);
  return q;
}

}  // namespace hurwitz
