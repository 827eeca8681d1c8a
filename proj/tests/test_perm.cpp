#include <doctest.h>

#include <random>

#include "hurwitz/error.hpp"
#include "hurwitz/perm_group.hpp"
#include "hurwitz/product_criterion.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

Perm cyc(const char* text, std::size_t n) { return Perm::parse_cycles(text, n); }

PermGroup group(std::initializer_list<Perm> gens, std::size_t n = 0) {
  std::vector<Perm> g(gens);
  return PermGroup(g, n);
}

BlockStructure blocks(std::vector<std::size_t> sizes) { return BlockStructure::contiguous(sizes); }

}  // namespace

TEST_CASE("perm basics") {
  const Perm a = cyc("(1 2 3)", 4);
  const Perm b = Perm::transposition(4, 0, 3);
  CHECK((a * b)[0] == b[a[0]]);
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.order() == 3);
  CHECK(a.is_even());
  CHECK(b.sign() == -1);
  CHECK(a.conjugate_by(b) == b.inverse() * a * b);
  CHECK(a.to_cycle_string() == "(1 2 3)");
  CHECK(cyc("(1 2)(3 4)", 4).cycle_type() == std::vector<std::size_t>{2, 2});
  CHECK_THROWS_AS(Perm({0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(cyc("(1 5)", 4), PreconditionError);
}

TEST_CASE("group orders") {
  CHECK(group({cyc("(1 2)", 3), cyc("(1 2 3)", 3)}).order() == 6);
  CHECK(PermGroup({}, 4).order() == 1);
  CHECK(group({cyc("(1 2 3 4 5)", 5)}).order() == 5);
  CHECK(PermGroup::symmetric(7).order() == 5040);
  CHECK(PermGroup::alternating(6).order() == 360);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("membership") {
  const auto a4 = PermGroup::alternating(4);
  CHECK(a4.contains(cyc("(1 2 3)", 4)));
  CHECK_FALSE(a4.contains(cyc("(1 2)", 4)));
  CHECK(PermGroup::trivial(3).contains(Perm::identity(3)));
  CHECK_THROWS_AS((void)a4.contains(Perm::identity(5)), PreconditionError);
}

TEST_CASE("schreier-sims agrees with closure on random groups") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const std::size_t ngen = 1 + rng() % 3;
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < ngen; ++i) gens.push_back(oracle::random_sparse_perm(n, 4, rng));
    const PermGroup g(gens, n);
    const auto elems = oracle::closure(gens, n);
    REQUIRE(g.order() == elems.size());

    std::size_t visited = 0;
    g.for_each_element([&](const Perm& p) {
      CHECK(elems.contains(p.images()));
      ++visited;
      return true;
    });
    CHECK(visited == elems.size());
    for (int k = 0; k < 10; ++k) {
      const Perm p = oracle::random_perm(n, rng);
      CHECK(g.contains(p) == elems.contains(p.images()));
    }
    CHECK(elems.contains(g.random_element(rng).images()));
  }
}

TEST_CASE("classify_in_product") {
  SUBCASE("full S3 x S2") {
    const auto c = classify_in_product(group({cyc("(1 2)", 5), cyc("(1 2 3)", 5), cyc("(4 5)", 5)}), blocks({3, 2}));
    CHECK(c.respects_blocks);
    CHECK(c.is_full_product);
    CHECK(c.contains_alt_product);
    CHECK(c.sign_image_rank == 2u);
  }
  SUBCASE("A5 in one block") {
    const auto c = classify_in_product(PermGroup::alternating(5), blocks({5}));
    CHECK(c.contains_alt_product);
    CHECK_FALSE(c.is_full_product);
    CHECK(c.inside_even_part);
  }
  SUBCASE("double transposition") {
    const auto c = classify_in_product(group({cyc("(1 2)(3 4)", 4)}), blocks({2, 2}));
    CHECK(c.respects_blocks);
    CHECK(c.sign_image_rank == 1u);
    CHECK(c.contains_alt_product);  // A_2 x A_2 is trivial
    CHECK_FALSE(c.is_full_product);
  }
  SUBCASE("crossing generator") {
    const auto c = classify_in_product(group({cyc("(1 4)", 4)}), blocks({2, 2}));
    CHECK_FALSE(c.respects_blocks);
    CHECK_FALSE(c.is_full_product);
  }
  SUBCASE("bad blocks") {
    CHECK_THROWS_AS(classify_in_product(PermGroup::symmetric(4), blocks({2, 1})), PreconditionError);
  }
}

TEST_CASE("classification implications on random groups") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n1 = 1 + rng() % 4, n2 = 1 + rng() % 3;
    std::vector<Perm> gens;
    for (int i = 0; i < 3; ++i) {
      // perms preserving the two blocks, occasionally one that does not
      std::vector<Point> img(n1 + n2);
      std::iota(img.begin(), img.end(), Point{0});
      std::shuffle(img.begin(), img.begin() + static_cast<std::ptrdiff_t>(n1), rng);
      std::shuffle(img.begin() + static_cast<std::ptrdiff_t>(n1), img.end(), rng);
      if (rng() % 10 == 0) std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(img);
    }
    const PermGroup h(gens, n1 + n2);
    const auto c = classify_in_product(h, blocks({n1, n2}));
    if (c.is_full_product) CHECK(c.contains_alt_product);
    if (c.is_full_product) CHECK(c.order == factorial(n1) * factorial(n2));
    if (c.contains_alt_product) CHECK(c.order * 4 >= factorial(n1) * factorial(n2));
    if (c.respects_blocks) {
      // sign rank counted directly
      std::set<std::pair<int, int>> signs;
      h.for_each_element([&](const Perm& p) {
        int s1 = 1, s2 = 1;
        std::vector<Point> a(p.images().begin(), p.images().begin() + static_cast<std::ptrdiff_t>(n1));
        std::vector<Point> b(p.images().begin() + static_cast<std::ptrdiff_t>(n1), p.images().end());
        for (auto& v : b) v -= static_cast<Point>(n1);
        s1 = Perm(a).sign();
        s2 = Perm(b).sign();
        signs.insert({s1, s2});
        return true;
      });
      const std::size_t rank = signs.size() == 1 ? 0 : signs.size() == 2 ? 1 : 2;
      CHECK(c.sign_image_rank == rank);
    }
  }
}

TEST_CASE("k-homogeneity") {
  CHECK(k_homogeneous(PermGroup::symmetric(5), 2));
  CHECK(k_homogeneous(PermGroup::alternating(4), 2));
  CHECK_FALSE(k_homogeneous(group({cyc("(1 2 3 4)", 4)}), 2));
  CHECK_THROWS_AS(k_homogeneous(PermGroup::symmetric(3), 4), PreconditionError);
  CHECK_THROWS_AS(k_homogeneous(PermGroup::symmetric(30), 15, 1000), ResourceError);

  auto v = check_homogeneity_dichotomy(PermGroup::symmetric(6));
  CHECK(v.homogeneous);
  CHECK(v.is_symmetric);
  CHECK(v.consistent);
  v = check_homogeneity_dichotomy(group({cyc("(1 2 3 4 5)", 5)}));
  CHECK_FALSE(v.homogeneous);
  CHECK(v.consistent);
  v = check_homogeneity_dichotomy(PermGroup::alternating(7));
  CHECK(v.k == 3);
  CHECK(v.homogeneous);
  CHECK(v.is_alternating);
  CHECK(v.consistent);
}

TEST_CASE("k-homogeneity against subset orbits") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    std::vector<Perm> gens{oracle::random_sparse_perm(n, 3, rng), oracle::random_sparse_perm(n, n, rng)};
    const PermGroup h(gens, n);
    const auto elems = oracle::closure(gens, n);
    for (std::size_t k = 1; k < n; ++k) {
      std::set<std::set<Point>> orbit;
      std::set<Point> first;
      for (Point i = 0; i < k; ++i) first.insert(i);
      for (const auto& e : elems) {
        std::set<Point> img;
        for (Point p : first) img.insert(e[p]);
        orbit.insert(img);
      }
      std::size_t binom = 1;
      for (std::size_t i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
      CHECK(k_homogeneous(h, k) == (orbit.size() == binom));
      // 1-homogeneity is transitivity, and every homogeneous group is transitive
      if (k_homogeneous(h, k)) CHECK(k_homogeneous(h, 1));
    }
  }
}

TEST_CASE("homogeneity dichotomy: small degrees and counterexamples") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& sg : oracle::all_subgroups(n)) {
      const auto v = check_homogeneity_dichotomy(PermGroup(sg.gens, n));
      CHECK(v.consistent);
    }
  }
  // AGL(1,5) is sharply 2-transitive of order 20
  const auto agl = group({cyc("(1 2 3 4 5)", 5), cyc("(2 3 5 4)", 5)});
  CHECK(agl.order() == 20);
  auto v = check_homogeneity_dichotomy(agl);
  CHECK(v.homogeneous);
  CHECK_FALSE(v.consistent);
  // PGL(2,5) acting on the projective line, 3-homogeneous of order 120 in S_6
  const auto pgl = group({cyc("(1 2 3 4 5)", 6), cyc("(2 3 5 4)", 6), cyc("(1 6)(2 5)", 6)});
  CHECK(pgl.order() == 120);
  v = check_homogeneity_dichotomy(pgl);
  CHECK(v.homogeneous);
  CHECK_FALSE(v.consistent);
}

TEST_CASE("invariable generation") {
  const std::vector<std::vector<Perm>> ex1{{cyc("(1 2)", 5), cyc("(1 2 3)", 5)}, {cyc("(1 2 3 4 5)", 5)}};
  CHECK(invariably_generates(ex1, 5));
  const std::vector<std::vector<Perm>> ex2{{cyc("(1 2)", 4)}, {cyc("(3 4)", 4)}};
  CHECK_FALSE(invariably_generates(ex2, 4));
  const std::vector<std::vector<Perm>> whole{{cyc("(1 2)", 4), cyc("(1 2 3 4)", 4)}};
  CHECK(invariably_generates(whole, 4));

  InvariableOptions small;
  small.max_exhaustive_degree = 5;
  const std::vector<std::vector<Perm>> big{{cyc("(1 2)", 6)}, {cyc("(1 2 3 4 5 6)", 6)}};
  CHECK_THROWS_AS(invariably_generates(big, 6, small), ResourceError);

  InvariableOptions sampled;
  sampled.mode = InvariableMode::sampled;
  sampled.samples = 50;
  CHECK(invariably_generates(ex1, 5, sampled));
}

TEST_CASE("invariable generation against brute force in S_4") {
  // <H, K^g> = S_4 for all g, checked by closure
  const std::vector<std::vector<Perm>> cases[] = {
      {{cyc("(1 2)", 4)}, {cyc("(1 2 3 4)", 4)}},
      {{cyc("(1 2 3)", 4)}, {cyc("(1 2 3 4)", 4)}},
      {{cyc("(1 2)", 4), cyc("(1 2 3)", 4)}, {cyc("(1 2 3 4)", 4)}},
      {{cyc("(1 2)(3 4)", 4)}, {cyc("(1 2 3)", 4)}},
  };
  for (const auto& c : cases) {
    bool all = true;
    for_each_permutation(4, [&](const Perm& g) {
      std::vector<Perm> gens = c[0];
      for (const auto& k : c[1]) gens.push_back(k.conjugate_by(g));
      if (oracle::closure(gens, 4).size() != 24) all = false;
      return true;
    });
    CHECK(invariably_generates(c, 4) == all);
  }
}

TEST_CASE("for_each_permutation order") {
  std::vector<Perm> seen;
  for_each_permutation(3, [&](const Perm& p) {
    seen.push_back(p);
    return true;
  });
  REQUIRE(seen.size() == 6);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("product criterion") {
  const auto a5 = GroupTable::alternating(5);
  const auto s3 = GroupTable::symmetric(3);
  const auto s4 = GroupTable::symmetric(4);

  SUBCASE("diagonal in A5 x A5") {
    const GroupTable factors[] = {a5, a5};
    std::vector<ProductElem> gens;
    for (GroupElem g : a5.greedy_generators()) gens.push_back({g, g});
    const auto v = product_criterion(gens, factors);
    CHECK(v.projects_onto_factors);
    CHECK_FALSE(v.projects_onto_isomorphic_pairs);
    CHECK_FALSE(v.equals_product);
    CHECK(v.consistent);
    CHECK(v.order == 60);
  }
  SUBCASE("full S3 x S4") {
    const GroupTable factors[] = {s3, s4};
    std::vector<ProductElem> gens;
    for (GroupElem g : s3.greedy_generators()) gens.push_back({g, s4.identity()});
    for (GroupElem g : s4.greedy_generators()) gens.push_back({s3.identity(), g});
    const auto v = product_criterion(gens, factors);
    CHECK(v.hypothesis_holds);
    CHECK(v.abelianization_surjective);
    CHECK(v.projects_onto_factors);
    CHECK(v.projects_onto_isomorphic_pairs);
    CHECK(v.equals_product);
    CHECK(v.consistent);
    CHECK(v.order == 144);
  }
  SUBCASE("joint-sign kernel in S3 x S3") {
    const GroupTable factors[] = {s3, s3};
    const auto& perms = *s3.perms();
    std::vector<ProductElem> gens;
    for (GroupElem a = 0; a < 6; ++a) {
      for (GroupElem b = 0; b < 6; ++b) {
        if (perms[a].sign() == perms[b].sign()) gens.push_back({a, b});
      }
    }
    const auto v = product_criterion(gens, factors);
    CHECK(v.order == 18);
    CHECK_FALSE(v.abelianization_surjective);
    CHECK_FALSE(v.equals_product);
    CHECK(v.consistent);
  }
}
