#include "hurwitz/braid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hurwitz/error.hpp"

namespace hurwitz {

std::string to_string(const BraidWord& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += (l.sign > 0 ? 's' : 'S') + std::to_string(l.index);
  }
  return out;
}

BraidWord parse_braid_word(const std::string& text) {
  BraidWord w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    if (tok.empty()) continue;
    long v = 0;
    try {
      std::size_t used = 0;
      v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw PreconditionError("braid word: bad letter '" + tok + "'");
    }
    if (v == 0) throw PreconditionError("braid word: generator index 0");
    w.push_back({static_cast<std::uint32_t>(v < 0 ? -v : v), v < 0 ? -1 : 1});
  }
  return w;
}

namespace {

void check_tuple(const Rack& x, const Tuple& t) {
  for (Elem e : t) {
    if (e >= x.size()) throw PreconditionError("tuple entry " + std::to_string(e) + " out of range");
  }
}

void check_letter(std::size_t i, int sign, std::size_t n) {
  if (i < 1 || i + 1 > n) {
    throw PreconditionError("braid generator sigma_" + std::to_string(i) + " out of range for n=" + std::to_string(n));
  }
  if (sign != 1 && sign != -1) throw PreconditionError("braid generator sign must be +1 or -1");
}

}  // namespace

Tuple apply_generator(const Rack& x, const Tuple& t, std::size_t i, int sign) {
  check_letter(i, sign, t.size());
  check_tuple(x, t);
  Tuple out = t;
  const Elem a = t[i - 1], b = t[i];
  if (sign > 0) {
    out[i - 1] = b;
    out[i] = x.op(a, b);
  } else {
    out[i - 1] = x.inv_op(b, a);
    out[i] = a;
  }
  return out;
}

Tuple apply_word(const Rack& x, Tuple t, const BraidWord& w) {
  for (const auto& l : w) t = apply_generator(x, t, l.index, l.sign);
  return t;
}

Perm braid_to_perm(const BraidWord& w, std::size_t n) {
  Perm p = Perm::identity(n);
  for (const auto& l : w) {
    check_letter(l.index, l.sign, n);
    p = p * Perm::transposition(n, l.index - 1, l.index);
  }
  return p;
}

BraidWord transposition_word(std::size_t alpha, std::size_t beta, std::size_t n) {
  if (alpha < 1 || alpha >= beta || beta > n) {
    throw PreconditionError("transposition_word: need 1 <= alpha < beta <= n");
  }
  BraidWord w;
  for (std::size_t j = beta - 1; j > alpha; --j) w.push_back({static_cast<std::uint32_t>(j), 1});
  w.push_back({static_cast<std::uint32_t>(alpha), 1});
  for (std::size_t j = alpha + 1; j < beta; ++j) w.push_back({static_cast<std::uint32_t>(j), -1});
  return w;
}

BraidWord transposition_word_cubed(std::size_t alpha, std::size_t beta, std::size_t n) {
  BraidWord w = transposition_word(alpha, beta, n);
  const auto mid = static_cast<std::ptrdiff_t>(beta - 1 - alpha);
  const BraidLetter centre = w[static_cast<std::size_t>(mid)];
  w.insert(w.begin() + mid, {centre, centre});
  return w;
}

BraidWord cyclic_shift_word(std::size_t n) {
  BraidWord w;
  for (std::size_t i = n; i-- > 1;) w.push_back({static_cast<std::uint32_t>(i), 1});
  return w;
}

OrbitGraph::OrbitGraph(OrbitData data, bool colored, std::vector<std::uint32_t> block_members)
    : data_(std::move(data)), colored_(colored), block_(std::move(block_members)) {}

Tuple OrbitGraph::member(std::size_t i) const {
  auto m = data_.member(i);
  return Tuple(m.begin(), m.end());
}

std::optional<std::uint32_t> OrbitGraph::find(const Tuple& t) const {
  if (t.size() != data_.length) return std::nullopt;
  for (std::size_t i = 0; i < size(); ++i) {
    auto m = data_.member(i);
    if (std::equal(m.begin(), m.end(), t.begin())) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

Tuple OrbitGraph::canonical_representative() const {
  const std::size_t n = data_.length;
  std::size_t best = 0;
  for (std::size_t i = 1; i < size(); ++i) {
    if (std::lexicographical_compare(data_.members.begin() + static_cast<std::ptrdiff_t>(i * n),
                                     data_.members.begin() + static_cast<std::ptrdiff_t>((i + 1) * n),
                                     data_.members.begin() + static_cast<std::ptrdiff_t>(best * n),
                                     data_.members.begin() + static_cast<std::ptrdiff_t>((best + 1) * n))) {
      best = i;
    }
  }
  return member(best);
}

OrbitGraph orbit(const Rack& x, const Tuple& seed, const OrbitOptions& options) {
  if (x.size() > 256) throw PreconditionError("orbit: racks above 256 elements are not supported");
  check_tuple(x, seed);
  std::vector<std::uint8_t> packed(seed.begin(), seed.end());
  const std::size_t n = seed.size();
  PackedMove move = [&x, n](const std::uint8_t* in, std::size_t pos, int sign, std::uint8_t* out) {
    std::copy(in, in + n, out);
    const Elem a = in[pos], b = in[pos + 1];
    if (sign > 0) {
      out[pos] = static_cast<std::uint8_t>(b);
      out[pos + 1] = static_cast<std::uint8_t>(x.op(a, b));
    } else {
      out[pos] = static_cast<std::uint8_t>(x.inv_op(b, a));
      out[pos + 1] = static_cast<std::uint8_t>(a);
    }
  };
  KernelOptions k;
  k.cap = options.cap;
  k.execution = options.execution;
  k.threads = options.threads;
  OrbitData data = enumerate_orbit(packed, move, k);

  std::vector<std::uint32_t> block;
  if (options.colored) {
    const auto comp = components(x);
    std::vector<std::size_t> pattern(n);
    for (std::size_t p = 0; p < n; ++p) pattern[p] = comp.labels[seed[p]];
    for (std::size_t i = 0; i < data.size(); ++i) {
      auto m = data.member(i);
      bool same = true;
      for (std::size_t p = 0; p < n && same; ++p) same = comp.labels[m[p]] == pattern[p];
      if (same) block.push_back(static_cast<std::uint32_t>(i));
    }
  } else {
    block.resize(data.size());
    for (std::size_t i = 0; i < block.size(); ++i) block[i] = static_cast<std::uint32_t>(i);
  }
  return OrbitGraph(std::move(data), options.colored, std::move(block));
}

PermGroup stabilizer_image(const OrbitGraph& o, Execution execution, int threads) {
  const auto gens = schreier_generator_images(o.data(), execution, threads);
  return PermGroup(gens, o.length(), true);
}

MonodromyReport classify_monodromy(const Rack& x, const Tuple& seed, const OrbitOptions& options) {
  check_tuple(x, seed);
  if (seed.empty()) throw PreconditionError("classify_monodromy: empty tuple");
  const auto comp = components(x);
  MonodromyReport rep;
  rep.component_counts.assign(comp.count, 0);
  std::vector<std::vector<Point>> blocks(comp.count);
  for (std::size_t p = 0; p < seed.size(); ++p) {
    const std::size_t c = comp.labels[seed[p]];
    ++rep.component_counts[c];
    blocks[c].push_back(static_cast<Point>(p));
  }
  for (auto& b : blocks) {
    if (!b.empty()) rep.blocks.blocks.push_back(std::move(b));
  }
  rep.generates = generates(x, seed);
  OrbitOptions opts = options;
  opts.colored = true;
  const OrbitGraph o = orbit(x, seed, opts);
  rep.orbit_size = o.size();
  rep.colored_orbit_size = o.colored_size();
  rep.image = stabilizer_image(o, options.execution, options.threads);
  rep.classification = classify_in_product(rep.image, rep.blocks);
  return rep;
}

RelationReport check_braid_relations(const Rack& x, std::size_t n) {
  RelationReport rep;
  rep.length = n;
  if (n == 0) return rep;
  const std::size_t k = x.size();
  Tuple t(n, 0);
  auto check = [&](const BraidWord& a, const BraidWord& b) {
    if (apply_word(x, t, a) != apply_word(x, t, b)) ++rep.violations;
  };
  for (;;) {
    ++rep.tuples_checked;
    for (std::uint32_t i = 1; i + 1 <= n; ++i) {
      for (std::uint32_t j = i + 2; j + 1 <= n; ++j) {
        check({{i, 1}, {j, 1}}, {{j, 1}, {i, 1}});
        ++rep.commutation_checks;
      }
      if (i + 2 <= n) {
        check({{i, 1}, {i + 1, 1}, {i, 1}}, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
        ++rep.braid_checks;
      }
    }
    std::size_t p = 0;
    while (p < n && ++t[p] == k) t[p++] = 0;
    if (p == n) break;
  }
  return rep;
}

}  // namespace hurwitz
