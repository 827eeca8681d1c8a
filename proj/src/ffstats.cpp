#include "hurwitz/ffstats.hpp"

#include <algorithm>
#include <random>

#include <omp.h>

#include "hurwitz/error.hpp"

namespace hurwitz {

using boost::multiprecision::cpp_int;

PrimeFieldPoly::PrimeFieldPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p_ < 2) throw PreconditionError("polynomial modulus must be at least 2");
  for (auto& c : c_) c %= p_;
  trim();
}

PrimeFieldPoly PrimeFieldPoly::monomial(std::uint32_t p, std::size_t degree, std::uint32_t c) {
  std::vector<std::uint32_t> v(degree + 1, 0);
  v[degree] = c;
  return PrimeFieldPoly(p, std::move(v));
}

void PrimeFieldPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw PreconditionError("element not invertible modulo " + std::to_string(p));
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

void same_field(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
  if (a.modulus() != b.modulus()) throw PreconditionError("polynomials over different fields");
}

}  // namespace

PrimeFieldPoly PrimeFieldPoly::operator+(const PrimeFieldPoly& o) const {
  same_field(*this, o);
  std::vector<std::uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::uint64_t s = (i < c_.size() ? c_[i] : 0) + std::uint64_t{i < o.c_.size() ? o.c_[i] : 0};
    v[i] = static_cast<std::uint32_t>(s % p_);
  }
  return PrimeFieldPoly(p_, std::move(v));
}

PrimeFieldPoly PrimeFieldPoly::operator-(const PrimeFieldPoly& o) const {
  same_field(*this, o);
  std::vector<std::uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::uint64_t s = (i < c_.size() ? c_[i] : 0) + std::uint64_t{p_} - (i < o.c_.size() ? o.c_[i] : 0);
    v[i] = static_cast<std::uint32_t>(s % p_);
  }
  return PrimeFieldPoly(p_, std::move(v));
}

PrimeFieldPoly PrimeFieldPoly::operator*(const PrimeFieldPoly& o) const {
  same_field(*this, o);
  if (c_.empty() || o.c_.empty()) return PrimeFieldPoly(p_, {});
  std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{c_[i]} * o.c_[j]) % p_;
  }
  return PrimeFieldPoly(p_, std::vector<std::uint32_t>(acc.begin(), acc.end()));
}

std::pair<PrimeFieldPoly, PrimeFieldPoly> PrimeFieldPoly::divmod(const PrimeFieldPoly& d) const {
  same_field(*this, d);
  if (d.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<std::uint64_t> r(c_.begin(), c_.end());
  const std::size_t dd = d.c_.size() - 1;
  if (r.size() <= dd) return {PrimeFieldPoly(p_, {}), *this};
  std::vector<std::uint32_t> q(r.size() - dd, 0);
  const std::uint64_t li = inv_mod(d.lead(), p_);
  for (std::size_t k = r.size(); k-- > dd;) {
    const std::uint64_t coef = r[k] % p_ * li % p_;
    q[k - dd] = static_cast<std::uint32_t>(coef);
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      r[k - dd + j] = (r[k - dd + j] + (p_ - coef) * d.c_[j]) % p_;
    }
  }
  r.resize(dd);
  return {PrimeFieldPoly(p_, std::move(q)), PrimeFieldPoly(p_, std::vector<std::uint32_t>(r.begin(), r.end()))};
}

PrimeFieldPoly PrimeFieldPoly::monic() const {
  if (c_.empty()) return *this;
  const std::uint64_t li = inv_mod(lead(), p_);
  std::vector<std::uint32_t> v(c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::uint32_t>(c_[i] * li % p_);
  return PrimeFieldPoly(p_, std::move(v));
}

PrimeFieldPoly PrimeFieldPoly::derivative() const {
  if (c_.size() <= 1) return PrimeFieldPoly(p_, {});
  std::vector<std::uint32_t> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = static_cast<std::uint32_t>(i % p_ * c_[i] % p_);
  return PrimeFieldPoly(p_, std::move(v));
}

std::string PrimeFieldPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || c_[i] != 1) out += std::to_string(c_[i]);
    if (i >= 1) out += "T";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

PrimeFieldPoly gcd(PrimeFieldPoly a, PrimeFieldPoly b) {
  while (!b.is_zero()) {
    PrimeFieldPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PrimeFieldPoly powmod(PrimeFieldPoly base, cpp_int e, const PrimeFieldPoly& m) {
  PrimeFieldPoly result(m.modulus(), {1});
  result = result % m;
  base = base % m;
  while (e > 0) {
    if ((e & 1) != 0) result = result * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_squarefree(const PrimeFieldPoly& f) {
  if (f.degree() < 1) return !f.is_zero();
  return gcd(f, f.derivative()).degree() == 0;
}

Rational zeta_q(std::uint64_t q, std::uint64_t s) {
  if (q < 2) throw PreconditionError("zeta_q: q must be at least 2");
  if (s <= 1) throw PreconditionError("zeta_q: s must be at least 2");
  const cpp_int qs = boost::multiprecision::pow(cpp_int(q), static_cast<unsigned>(s - 1));
  return Rational(qs, qs - 1);
}

namespace {

void require_prime(std::uint32_t q) {
  if (!is_prime(q)) throw PreconditionError("q = " + std::to_string(q) + " is not prime");
}

std::uint64_t checked_power(std::uint64_t q, std::size_t n, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > limit / q) {
      throw ResourceError("q^n exceeds the enumeration budget of " + std::to_string(limit));
    }
    total *= q;
  }
  return total;
}

PrimeFieldPoly poly_from_index(std::uint32_t q, std::size_t n, std::uint64_t idx) {
  std::vector<std::uint32_t> c(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = static_cast<std::uint32_t>(idx % q);
    idx /= q;
  }
  c[n] = 1;
  return PrimeFieldPoly(q, std::move(c));
}

}  // namespace

void squarefree_polys(std::uint32_t q, std::size_t n, const std::function<bool(const PrimeFieldPoly&)>& visit,
                      std::uint64_t max_count) {
  require_prime(q);
  const std::uint64_t total = checked_power(q, n, max_count);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const PrimeFieldPoly f = poly_from_index(q, n, idx);
    if (is_squarefree(f) && !visit(f)) return;
  }
}

std::vector<std::pair<std::size_t, PrimeFieldPoly>> distinct_degree_factors(const PrimeFieldPoly& f) {
  if (!f.is_monic() || !is_squarefree(f)) throw PreconditionError("distinct-degree factorization needs monic squarefree input");
  const std::uint32_t q = f.modulus();
  std::vector<std::pair<std::size_t, PrimeFieldPoly>> out;
  PrimeFieldPoly rest = f;
  const PrimeFieldPoly t = PrimeFieldPoly::monomial(q, 1);
  PrimeFieldPoly h = t % rest;
  for (std::size_t d = 1; rest.degree() >= static_cast<long>(2 * d); ++d) {
    h = powmod(h, q, rest);
    const PrimeFieldPoly g = gcd(h - t, rest);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      rest = rest.divmod(g).first;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(static_cast<std::size_t>(rest.degree()), rest);
  return out;
}

CycleType factorization_type(const PrimeFieldPoly& f) {
  CycleType t;
  for (const auto& [d, g] : distinct_degree_factors(f)) t.insert(t.end(), static_cast<std::size_t>(g.degree()) / d, d);
  std::sort(t.rbegin(), t.rend());
  return t;
}

MoebiusLambda moebius_and_lambda(const CycleType& t) {
  MoebiusLambda r;
  r.mu = t.size() % 2 == 0 ? 1 : -1;
  r.lambda = t.size() == 1 ? t[0] : 0;
  return r;
}

MoebiusLambda moebius_and_lambda(const PrimeFieldPoly& f) { return moebius_and_lambda(factorization_type(f)); }

void for_each_partition(std::size_t n, const std::function<void(const CycleType&)>& visit) {
  CycleType cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max_part) {
    if (left == 0) {
      visit(cur);
      return;
    }
    for (std::size_t p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
}

std::vector<CycleType> partitions(std::size_t n) {
  std::vector<CycleType> out;
  for_each_partition(n, [&](const CycleType& t) { out.push_back(t); });
  return out;
}

std::vector<std::int64_t> exterior_chars(const CycleType& t) {
  std::size_t n = 0;
  for (auto l : t) {
    if (l == 0) throw PreconditionError("cycle type with a zero part");
    n += l;
  }
  if (n == 0) throw PreconditionError("empty cycle type");
  std::vector<std::int64_t> poly{1};
  for (auto l : t) {
    // multiply by 1 - (-t)^l
    std::vector<std::int64_t> next(poly.size() + l, 0);
    const std::int64_t c = l % 2 == 0 ? -1 : 1;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + l] += c * poly[i];
    }
    poly = std::move(next);
  }
  // divide by 1 + t
  std::vector<std::int64_t> out(n, 0);
  std::int64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = poly[i] - carry;
    carry = out[i];
  }
  if (poly[n] != carry) throw InvariantError("exterior_char: 1 + t does not divide the generating polynomial");
  return out;
}

std::int64_t exterior_char(const CycleType& t, std::size_t i) {
  const auto all = exterior_chars(t);
  if (i >= all.size()) throw PreconditionError("exterior_char: i must be below n");
  return all[i];
}

std::string cycle_type_key(const std::vector<CycleType>& per_block) {
  std::string key;
  for (std::size_t b = 0; b < per_block.size(); ++b) {
    if (b) key += '|';
    for (std::size_t i = 0; i < per_block[b].size(); ++i) {
      if (i) key += '+';
      key += std::to_string(per_block[b][i]);
    }
  }
  return key;
}

namespace {

std::string block_key(const Perm& g, const BlockStructure& blocks, std::vector<bool>& seen) {
  std::vector<CycleType> types;
  for (const auto& block : blocks.blocks) {
    CycleType t;
    for (Point p : block) seen[p] = false;
    for (Point p : block) {
      if (seen[p]) continue;
      std::size_t len = 0;
      for (Point c = p; !seen[c]; c = g[c]) {
        seen[c] = true;
        ++len;
      }
      t.push_back(len);
    }
    std::sort(t.rbegin(), t.rend());
    types.push_back(std::move(t));
  }
  return cycle_type_key(types);
}

}  // namespace

ChebotarevPrediction chebotarev_predict(const PermGroup& h, const BlockStructure& blocks,
                                        const ChebotarevOptions& options) {
  if (blocks.degree() != h.degree()) throw PreconditionError("chebotarev_predict: block degree mismatch");
  blocks.labels();
  if (!classify_in_product(h, blocks).respects_blocks) {
    throw PreconditionError("chebotarev_predict: group does not respect the blocks");
  }
  ChebotarevPrediction pred;
  std::vector<bool> seen(h.degree(), false);
  std::map<std::string, std::uint64_t> counts;
  if (h.order() <= options.max_exact) {
    h.for_each_element([&](const Perm& g) {
      ++counts[block_key(g, blocks, seen)];
      return true;
    });
    const Rational total(h.order());
    for (const auto& [k, c] : counts) pred.frequencies[k] = Rational(c) / total;
    return pred;
  }
  if (!options.allow_sampling) {
    throw ResourceError("chebotarev_predict: |H| = " + h.order().str() + " exceeds the exact budget");
  }
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t s = 0; s < options.samples; ++s) ++counts[block_key(h.random_element(rng), blocks, seen)];
  for (const auto& [k, c] : counts) pred.frequencies[k] = Rational(c, options.samples);
  pred.exact = false;
  pred.samples = options.samples;
  return pred;
}

Z2Stats z2_extension_stats(std::uint32_t q, std::size_t n, Execution execution, int threads,
                           std::uint64_t max_count) {
  if (q % 2 == 0 || !is_prime(q)) throw PreconditionError("z2 stats: q must be an odd prime");
  if (n == 0 || n % 2 != 0) throw PreconditionError("z2 stats: n must be even and positive");
  const std::uint64_t total = checked_power(q, n, max_count);
  Z2Stats s;
  s.q = q;
  s.n = n;
  std::uint64_t count = 0, irreducible = 0;
  std::int64_t mu = 0;
  auto one = [&](std::uint64_t idx, std::uint64_t& c, std::int64_t& m, std::uint64_t& irr) {
    const PrimeFieldPoly f = poly_from_index(q, n, idx);
    if (!is_squarefree(f)) return;
    const auto t = factorization_type(f);
    ++c;
    m += t.size() % 2 == 0 ? 1 : -1;
    if (t.size() == 1) ++irr;
  };
  if (execution == Execution::serial) {
    for (std::uint64_t idx = 0; idx < total; ++idx) one(idx, count, mu, irreducible);
  } else {
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 256) num_threads(nthreads) reduction(+ : count, mu, irreducible)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
      one(static_cast<std::uint64_t>(idx), count, mu, irreducible);
    }
  }
  s.count = count;
  s.sum_moebius = mu;
  s.count_irreducible = irreducible;
  return s;
}

std::string z2_csv(const std::vector<Z2Stats>& rows) {
  std::string out = "q,n,count,sum_moebius,count_irreducible\n";
  for (const auto& r : rows) {
    out += std::to_string(r.q) + "," + std::to_string(r.n) + "," + std::to_string(r.count) + "," +
           std::to_string(r.sum_moebius) + "," + std::to_string(r.count_irreducible) + "\n";
  }
  return out;
}

}  // namespace hurwitz
