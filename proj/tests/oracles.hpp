#pragma once

// Brute-force reference implementations used by the tests. They share no
// code with the library beyond the value types.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hurwitz/perm.hpp"
#include "hurwitz/rack.hpp"

namespace oracle {

using hurwitz::Elem;
using hurwitz::Perm;
using hurwitz::Point;
using hurwitz::Rack;
using hurwitz::Tuple;

inline std::vector<Point> compose(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

// Group closure by BFS on image arrays.
inline std::set<std::vector<Point>> closure(const std::vector<Perm>& gens, std::size_t n) {
  std::vector<Point> id(n);
  std::iota(id.begin(), id.end(), Point{0});
  std::set<std::vector<Point>> seen{id};
  std::deque<std::vector<Point>> queue{id};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto next = compose(cur, g.images());
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return seen;
}

inline Perm random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(img);
}

// Random permutation moving only a random subset of at most `support` points.
inline Perm random_sparse_perm(std::size_t n, std::size_t support, std::mt19937_64& rng) {
  std::vector<Point> pts(n);
  std::iota(pts.begin(), pts.end(), Point{0});
  std::shuffle(pts.begin(), pts.end(), rng);
  const std::size_t k = std::min(n, 1 + rng() % support);
  std::vector<Point> chosen(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(k));
  std::vector<Point> moved = chosen;
  std::shuffle(moved.begin(), moved.end(), rng);
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < k; ++i) img[chosen[i]] = moved[i];
  return Perm(img);
}

// x^y by direct table lookup, inverse by search.
inline Tuple move(const Rack& x, const Tuple& t, std::size_t i, int sign) {
  Tuple r = t;
  const Elem a = t[i - 1], b = t[i];
  if (sign > 0) {
    r[i - 1] = b;
    r[i] = x.op(a, b);
  } else {
    Elem u = 0;
    while (x.op(u, a) != b) ++u;
    r[i - 1] = u;
    r[i] = a;
  }
  return r;
}

inline std::set<Tuple> tuple_orbit(const Rack& x, const Tuple& seed) {
  std::set<Tuple> seen{seed};
  std::deque<Tuple> queue{seed};
  while (!queue.empty()) {
    Tuple cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 1; i < cur.size(); ++i) {
      for (int s : {1, -1}) {
        Tuple nx = move(x, cur, i, s);
        if (seen.insert(nx).second) queue.push_back(std::move(nx));
      }
    }
  }
  return seen;
}

// All of X^n.
inline std::vector<Tuple> all_tuples(std::size_t k, std::size_t n) {
  std::vector<Tuple> out;
  Tuple t(n, 0);
  for (;;) {
    out.push_back(t);
    std::size_t p = n;
    while (p-- > 0) {
      if (++t[p] < k) break;
      t[p] = 0;
    }
    if (p == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

// Number of B_n orbits on the tuples accepted by `keep`.
template <class Keep>
std::size_t orbit_count(const Rack& x, std::size_t n, Keep keep) {
  std::set<Tuple> done;
  std::size_t count = 0;
  for (const auto& t : all_tuples(x.size(), n)) {
    if (done.contains(t) || !keep(t)) continue;
    auto o = tuple_orbit(x, t);
    done.insert(o.begin(), o.end());
    ++count;
  }
  return count;
}

inline bool generates_rack(const Rack& x, const Tuple& t) {
  std::set<Elem> s(t.begin(), t.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur) {
      for (Elem b : cur) {
        Elem inv = 0;
        while (x.op(inv, b) != a) ++inv;
        grew |= s.insert(x.op(a, b)).second;
        grew |= s.insert(inv).second;
      }
    }
  }
  return s.size() == x.size();
}

inline bool is_rack_table(std::size_t k, const std::vector<Elem>& op) {
  for (Elem y = 0; y < k; ++y) {
    std::vector<bool> hit(k, false);
    for (Elem x = 0; x < k; ++x) {
      if (hit[op[x * k + y]]) return false;
      hit[op[x * k + y]] = true;
    }
  }
  for (Elem x = 0; x < k; ++x) {
    for (Elem y = 0; y < k; ++y) {
      for (Elem z = 0; z < k; ++z) {
        if (op[op[z * k + x] * k + y] != op[op[z * k + y] * k + op[x * k + y]]) return false;
      }
    }
  }
  return true;
}

// Every rack structure on {0..k-1} (as raw tables), k <= 3.
inline std::vector<std::vector<Elem>> all_rack_tables(std::size_t k) {
  std::vector<std::vector<Point>> perms;
  std::vector<Point> p(k);
  std::iota(p.begin(), p.end(), Point{0});
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<Elem>> out;
  std::vector<std::size_t> choice(k, 0);
  for (;;) {
    std::vector<Elem> op(k * k);
    for (Elem y = 0; y < k; ++y) {
      for (Elem x = 0; x < k; ++x) op[x * k + y] = perms[choice[y]][x];
    }
    if (is_rack_table(k, op)) out.push_back(op);
    std::size_t j = 0;
    while (j < k && ++choice[j] == perms.size()) choice[j++] = 0;
    if (j == k) break;
  }
  return out;
}

// Seeded racks of size <= 6 drawn from several families: permutation
// racks, Alexander quandles Z/m, conjugation racks inside S_3 and
// products of small racks.
inline Rack random_rack(std::mt19937_64& rng) {
  switch (rng() % 4) {
    case 0: {
      const std::size_t k = 2 + rng() % 5;
      return Rack::permutation_rack(random_perm(k, rng));
    }
    case 1: {
      const std::size_t m = 3 + rng() % 4;
      std::vector<std::size_t> units;
      for (std::size_t a = 1; a < m; ++a) {
        if (std::gcd(a, m) == 1) units.push_back(a);
      }
      const std::size_t a = units[rng() % units.size()];
      std::vector<Elem> op(m * m);
      for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) op[x * m + y] = static_cast<Elem>((a * x + (m + 1 - a) * y) % m);
      }
      return Rack(m, op, "alexander");
    }
    case 2: {
      // S_3 elements as image arrays, union of random conjugacy classes
      const std::vector<std::vector<Point>> trans{{1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
      const std::vector<std::vector<Point>> three{{1, 2, 0}, {2, 0, 1}};
      std::vector<std::vector<Point>> elems;
      const auto pick = rng() % 3;
      if (pick != 1) elems.insert(elems.end(), trans.begin(), trans.end());
      if (pick != 0) elems.insert(elems.end(), three.begin(), three.end());
      const std::size_t k = elems.size();
      std::vector<Elem> op(k * k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          std::vector<Point> inv(3);
          for (Point q = 0; q < 3; ++q) inv[elems[j][q]] = q;
          const auto c = compose(compose(inv, elems[i]), elems[j]);
          op[i * k + j] = static_cast<Elem>(std::find(elems.begin(), elems.end(), c) - elems.begin());
        }
      }
      return Rack(k, op, "s3conj");
    }
    default: {
      const auto small = all_rack_tables(2);
      const auto& a = small[rng() % small.size()];
      const std::size_t k2 = 1 + rng() % 3;
      const auto other = all_rack_tables(k2);
      const auto& b = other[rng() % other.size()];
      return hurwitz::product_rack(Rack(2, a), Rack(k2, b));
    }
  }
}

struct Subgroup {
  std::vector<Perm> gens;
  std::vector<bool> members;  // indexed by rank in `elements`
};

// Every subgroup of S_n, found by adjoining one element at a time to the
// subgroups already known, starting from the trivial group.
inline std::vector<Subgroup> all_subgroups(std::size_t n, std::vector<std::vector<Point>>* elements_out = nullptr) {
  std::vector<std::vector<Point>> elements;
  std::vector<Point> p(n);
  std::iota(p.begin(), p.end(), Point{0});
  do elements.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<Point>, std::size_t> rank;
  for (std::size_t i = 0; i < elements.size(); ++i) rank[elements[i]] = i;
  const std::size_t m = elements.size();
  std::vector<std::size_t> mul(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) mul[a * m + b] = rank[compose(elements[a], elements[b])];
  }
  std::vector<Subgroup> found;
  std::set<std::vector<bool>> seen;
  Subgroup trivial{{}, std::vector<bool>(m, false)};
  trivial.members[0] = true;
  seen.insert(trivial.members);
  found.push_back(trivial);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t g = 0; g < m; ++g) {
      if (found[i].members[g]) continue;
      std::vector<std::size_t> gens;
      for (const auto& h : found[i].gens) gens.push_back(rank[h.images()]);
      gens.push_back(g);
      std::vector<bool> mem(m, false);
      std::vector<std::size_t> queue{0};
      mem[0] = true;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (auto s : gens) {
          const auto nx = mul[queue[q] * m + s];
          if (!mem[nx]) {
            mem[nx] = true;
            queue.push_back(nx);
          }
        }
      }
      if (!seen.insert(mem).second) continue;
      Subgroup sg{found[i].gens, mem};
      sg.gens.push_back(Perm(elements[g]));
      found.push_back(std::move(sg));
    }
  }
  if (elements_out) *elements_out = std::move(elements);
  return found;
}

}  // namespace oracle
