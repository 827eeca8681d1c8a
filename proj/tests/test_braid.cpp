#include <doctest.h>

#include "hurwitz/braid.hpp"
#include "hurwitz/error.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

Rack s3_transpositions() {
  const auto s3 = GroupTable::symmetric(3);
  const GroupElem seed[] = {*s3.index_of(Perm::parse_cycles("(1 2)", 3))};
  return conjugation_rack(s3, seed).rack;
}

ConjugationRack s4_rack() {
  const auto s4 = GroupTable::symmetric(4);
  const GroupElem seeds[] = {*s4.index_of(Perm::parse_cycles("(1 2)", 4)),
                             *s4.index_of(Perm::parse_cycles("(1 2 3)", 4))};
  return conjugation_rack(s4, seeds);
}

OrbitOptions serial() {
  OrbitOptions o;
  o.execution = Execution::serial;
  return o;
}

std::vector<Point> transposition_images(std::size_t n, std::size_t i) {
  std::vector<Point> p(n);
  std::iota(p.begin(), p.end(), Point{0});
  std::swap(p[i - 1], p[i]);
  return p;
}

std::vector<Point> inverse(const std::vector<Point>& p) {
  std::vector<Point> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<Point>(i);
  return r;
}

// Stabilizer image by an independent BFS: access permutations along a
// spanning tree and Schreier generators closed by brute force.
std::size_t oracle_image_order(const Rack& x, const Tuple& seed) {
  const std::size_t n = seed.size();
  std::vector<Point> id(n);
  std::iota(id.begin(), id.end(), Point{0});
  std::map<Tuple, std::vector<Point>> access{{seed, id}};
  std::deque<Tuple> queue{seed};
  std::vector<Perm> gens;
  while (!queue.empty()) {
    const Tuple t = queue.front();
    queue.pop_front();
    for (std::size_t i = 1; i < n; ++i) {
      const Tuple u = oracle::move(x, t, i, 1);
      const auto via = oracle::compose(access[t], transposition_images(n, i));
      auto it = access.find(u);
      if (it == access.end()) {
        access.emplace(u, via);
        queue.push_back(u);
      } else {
        gens.emplace_back(oracle::compose(via, inverse(it->second)));
      }
    }
  }
  return oracle::closure(gens, n).size();
}

Tuple random_tuple(std::size_t k, std::size_t n, std::mt19937_64& rng) {
  Tuple t(n);
  for (auto& e : t) e = static_cast<Elem>(rng() % k);
  return t;
}

}  // namespace

TEST_CASE("hurwitz moves") {
  const auto x = s3_transpositions();
  // 0 = (2 3), 1 = (1 2), 2 = (1 3)
  CHECK(apply_generator(x, {1, 0}, 1, 1) == Tuple{0, 2});
  const auto n = Rack::two_element_swap();
  CHECK(apply_generator(n, {0, 0}, 1, 1) == Tuple{0, 1});

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const Rack r = oracle::random_rack(rng);
    const Tuple t = random_tuple(r.size(), 2 + rng() % 4, rng);
    const std::size_t i = 1 + rng() % (t.size() - 1);
    CHECK(apply_generator(r, apply_generator(r, t, i, 1), i, -1) == t);
    CHECK(apply_generator(r, apply_generator(r, t, i, -1), i, 1) == t);
    CHECK(apply_generator(r, t, i, 1) == oracle::move(r, t, i, 1));
    CHECK(apply_generator(r, t, i, -1) == oracle::move(r, t, i, -1));
  }
  CHECK_THROWS_AS(apply_generator(x, {0, 1}, 2, 1), PreconditionError);
  CHECK_THROWS_AS(apply_generator(x, {0, 1}, 0, 1), PreconditionError);
  CHECK_THROWS_AS(apply_generator(x, {0, 7}, 1, 1), PreconditionError);
}

TEST_CASE("braid words") {
  const auto w = parse_braid_word("2,-1");
  REQUIRE(w.size() == 2);
  CHECK(w[0] == BraidLetter{2, 1});
  CHECK(w[1] == BraidLetter{1, -1});
  CHECK(to_string(w) == "s2 S1");
  CHECK_THROWS_AS(parse_braid_word("0"), PreconditionError);
  CHECK_THROWS_AS(parse_braid_word("a"), PreconditionError);

  CHECK(braid_to_perm(parse_braid_word("1"), 3) == Perm::transposition(3, 0, 1));
  // sigma_2 then sigma_1, right action: 0 -> 1 -> 2 -> 0
  CHECK(braid_to_perm(parse_braid_word("2,1"), 3) == Perm({1, 2, 0}));
  CHECK(braid_to_perm({}, 3).is_identity());
  CHECK_THROWS_AS(braid_to_perm(parse_braid_word("3"), 3), PreconditionError);

  const auto x = s3_transpositions();
  const Tuple t{1, 0, 2, 2};
  CHECK(apply_word(x, t, parse_braid_word("1,3,-2")) ==
        apply_generator(x, apply_generator(x, apply_generator(x, t, 1, 1), 3, 1), 2, -1));
}

TEST_CASE("transposition words") {
  CHECK(transposition_word(1, 2, 4) == BraidWord{{1, 1}});
  const auto w = transposition_word(1, 3, 3);
  CHECK(to_string(w) == "s2 s1 S2");
  CHECK(braid_to_perm(w, 3) == Perm::transposition(3, 0, 2));
  CHECK_THROWS_AS(transposition_word(2, 2, 3), PreconditionError);
  CHECK_THROWS_AS(transposition_word(1, 5, 4), PreconditionError);

  std::mt19937_64 rng(9);
  const auto x = s3_transpositions();
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t a = 1; a <= n; ++a) {
      for (std::size_t b = a + 1; b <= n; ++b) {
        CHECK(braid_to_perm(transposition_word(a, b, n), n) == Perm::transposition(n, Point(a - 1), Point(b - 1)));
        CHECK(braid_to_perm(transposition_word_cubed(a, b, n), n) ==
              Perm::transposition(n, Point(a - 1), Point(b - 1)));
        Tuple t = random_tuple(3, n, rng);
        t[b - 1] = t[a - 1];
        CHECK(apply_word(x, t, transposition_word(a, b, n)) == t);
      }
    }
  }
  CHECK(cyclic_shift_word(4) == parse_braid_word("3,2,1"));
}

TEST_CASE("orbit examples") {
  const auto n = Rack::two_element_swap();
  const auto o = orbit(n, {0, 0});
  CHECK(o.size() == 4);
  CHECK(o.member(0) == Tuple{0, 0});
  CHECK(o.member(1) == Tuple{0, 1});
  CHECK(o.find({1, 1}).has_value());
  CHECK(o.canonical_representative() == Tuple{0, 0});

  const auto t2 = orbit(Rack::trivial(2), {0, 1});
  CHECK(t2.size() == 2);
  CHECK(t2.find({1, 0}).has_value());
  CHECK_FALSE(t2.find({0, 0}).has_value());

  const auto x = s3_transpositions();
  const Tuple seed{1, 2, 0};
  CHECK(orbit(x, seed).size() == oracle::tuple_orbit(x, seed).size());

  CHECK(orbit(x, {2}).size() == 1);
  CHECK_THROWS_AS(orbit(x, {}), PreconditionError);
  CHECK_THROWS_AS(orbit(x, {0, 3}), PreconditionError);
  OrbitOptions tiny;
  tiny.cap = 3;
  CHECK_THROWS_AS(orbit(x, seed, tiny), ResourceError);
}

TEST_CASE("orbits agree with brute force") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const Rack r = oracle::random_rack(rng);
    const Tuple t = random_tuple(r.size(), 1 + rng() % 4, rng);
    const auto ref = oracle::tuple_orbit(r, t);
    const auto o = orbit(r, t);
    REQUIRE(o.size() == ref.size());
    std::set<Tuple> got;
    for (std::size_t i = 0; i < o.size(); ++i) got.insert(o.member(i));
    CHECK(got == ref);
    CHECK(o.canonical_representative() == *ref.begin());
  }
}

TEST_CASE("access permutations are coherent") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Rack r = oracle::random_rack(rng);
    const std::size_t n = 2 + rng() % 3;
    const auto o = orbit(r, random_tuple(r.size(), n, rng));
    CHECK(o.access(0).is_identity());
    for (std::size_t m = 0; m < o.size(); ++m) {
      for (std::size_t i = 1; i < n; ++i) {
        const auto target = o.edge(m, i, 1);
        CHECK(o.member(target) == apply_generator(r, o.member(m), i, 1));
        CHECK(o.member(o.edge(m, i, -1)) == apply_generator(r, o.member(m), i, -1));
      }
    }
    // every member is reached by a tree edge with access[t^g] = access[t] pi(g)
    for (std::size_t m = 1; m < o.size(); ++m) {
      bool found = false;
      for (std::size_t p = 0; p < m && !found; ++p) {
        for (std::size_t i = 1; i < n && !found; ++i) {
          for (int s : {1, -1}) {
            if (o.edge(p, i, s) == m && o.access(m) == o.access(p) * Perm::transposition(n, Point(i - 1), Point(i))) {
              found = true;
              break;
            }
          }
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("stabilizer images") {
  const auto n = Rack::two_element_swap();
  CHECK(stabilizer_image(orbit(n, {0, 0})).order() == 1);

  const auto x = s3_transpositions();
  for (const Tuple& t : {Tuple{1, 2, 0}, Tuple{0, 1, 2}, Tuple{1, 1, 2}}) {
    CHECK(stabilizer_image(orbit(x, t)).order() == 6);
  }
  CHECK(stabilizer_image(orbit(Rack::trivial(3), {0, 0, 0, 0})).order() == 24);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Rack r = oracle::random_rack(rng);
    const Tuple t = random_tuple(r.size(), 2 + rng() % 4, rng);
    const auto o = orbit(r, t);
    const auto img = stabilizer_image(o);
    CHECK(img.order() == oracle_image_order(r, t));
    CHECK(stabilizer_image(o, Execution::serial).order() == img.order());
  }
}

TEST_CASE("serial and parallel kernels agree") {
  const auto c = s4_rack();
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    const Tuple t = random_tuple(c.rack.size(), 3 + rng() % 3, rng);
    const auto a = orbit(c.rack, t, serial());
    for (int threads : {1, 2, 4}) {
      OrbitOptions par;
      par.threads = threads;
      const auto b = orbit(c.rack, t, par);
      CHECK(a.data().members == b.data().members);
      CHECK(a.data().access == b.data().access);
      CHECK(a.data().edges == b.data().edges);
      CHECK(schreier_generator_images(a.data(), Execution::serial) ==
            schreier_generator_images(b.data(), Execution::parallel, threads));
    }
  }
}

TEST_CASE("orbit invariants on conjugation racks") {
  const auto c = s4_rack();
  const auto s4 = GroupTable::symmetric(4);
  const auto comp = components(c.rack);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Tuple t = random_tuple(c.rack.size(), 2 + rng() % 3, rng);
    const auto product = [&](const Tuple& u) {
      GroupElem g = s4.identity();
      for (Elem e : u) g = s4.mul(g, c.embedding[e]);
      return g;
    };
    const auto labels = [&](const Tuple& u) {
      std::vector<std::size_t> v(comp.count, 0);
      for (Elem e : u) ++v[comp.labels[e]];
      return v;
    };
    const auto o = orbit(c.rack, t);
    for (std::size_t i = 0; i < o.size(); ++i) {
      CHECK(product(o.member(i)) == product(t));
      CHECK(labels(o.member(i)) == labels(t));
      // per-position component labels follow the access permutation
      const Perm a = o.access(i);
      for (std::size_t p = 0; p < t.size(); ++p) {
        CHECK(comp.labels[o.member(i)[a[Point(p)]]] == comp.labels[t[p]]);
      }
    }
    // simultaneous conjugation is an orbit bijection
    const GroupElem g = static_cast<GroupElem>(rng() % 24);
    Tuple tg = t;
    for (auto& e : tg) {
      const auto target = s4.conj(c.embedding[e], g);
      e = static_cast<Elem>(std::find(c.embedding.begin(), c.embedding.end(), target) - c.embedding.begin());
    }
    CHECK(orbit(c.rack, tg).size() == o.size());
  }
}

TEST_CASE("colored orbits") {
  const auto c = s4_rack();
  const auto comp = components(c.rack);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 3 + rng() % 2;
    const Tuple t = random_tuple(c.rack.size(), n, rng);
    OrbitOptions col;
    col.colored = true;
    const auto o = orbit(c.rack, t, col);

    // oracle: sigma_i between equal colors and the pure braids A_ij
    std::vector<BraidWord> gens;
    for (std::uint32_t i = 1; i < n; ++i) {
      if (comp.labels[t[i - 1]] == comp.labels[t[i]]) gens.push_back({{i, 1}});
    }
    for (std::uint32_t i = 1; i <= n; ++i) {
      for (std::uint32_t j = i + 1; j <= n; ++j) {
        BraidWord a;
        for (std::uint32_t k = j - 1; k > i; --k) a.push_back({k, 1});
        a.push_back({i, 1});
        a.push_back({i, 1});
        for (std::uint32_t k = i + 1; k < j; ++k) a.push_back({k, -1});
        gens.push_back(a);
      }
    }
    std::set<Tuple> seen{t};
    std::deque<Tuple> queue{t};
    while (!queue.empty()) {
      const Tuple u = queue.front();
      queue.pop_front();
      for (const auto& w : gens) {
        Tuple v = apply_word(c.rack, u, w);
        if (seen.insert(v).second) queue.push_back(std::move(v));
      }
    }
    CHECK(o.colored());
    CHECK(o.colored_size() == seen.size());
    std::set<Tuple> got;
    for (auto m : o.block_members()) got.insert(o.member(m));
    CHECK(got == seen);
  }
}

TEST_CASE("monodromy pipeline") {
  const auto x = s3_transpositions();
  const auto r = classify_monodromy(x, {1, 2, 0, 1});
  CHECK(r.generates);
  CHECK(r.image.order() == 24);
  CHECK(r.classification.is_full_product);

  const auto n = Rack::two_element_swap();
  const auto rn = classify_monodromy(n, {0, 1, 0, 1, 0, 1});
  CHECK(rn.generates);
  CHECK(rn.classification.inside_even_part);
  CHECK(rn.image.order() <= 360);

  const auto ng = classify_monodromy(x, {1, 1, 1});
  CHECK_FALSE(ng.generates);
  CHECK(ng.orbit_size == 1);
  CHECK(ng.image.order() == 6);

  const auto c = s4_rack();
  const auto mixed = classify_monodromy(c.rack, {0, 1, 8, 9});
  CHECK(mixed.classification.respects_blocks);
  CHECK(mixed.component_counts.size() == mixed.blocks.blocks.size());
}

TEST_CASE("braid relations") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const Rack r = oracle::random_rack(rng);
    const auto rep = check_braid_relations(r, 4);
    CHECK(rep.violations == 0);
    CHECK(rep.tuples_checked > 0);
  }
  const auto rep = check_braid_relations(s3_transpositions(), 4);
  CHECK(rep.tuples_checked == 81);
  CHECK(rep.braid_checks > 0);
  CHECK(rep.commutation_checks > 0);
}
