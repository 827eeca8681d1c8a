#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/orbit_kernel.hpp"
#include "hurwitz/perm_group.hpp"

namespace hurwitz {

using Rational = boost::multiprecision::cpp_rational;

// Polynomial over F_p, coefficients ascending and trimmed (zero is empty).
class PrimeFieldPoly {
 public:
  PrimeFieldPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);
  static PrimeFieldPoly monomial(std::uint32_t p, std::size_t degree, std::uint32_t c = 1);

  std::uint32_t modulus() const { return p_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }

  PrimeFieldPoly operator+(const PrimeFieldPoly& o) const;
  PrimeFieldPoly operator-(const PrimeFieldPoly& o) const;
  PrimeFieldPoly operator*(const PrimeFieldPoly& o) const;
  // Quotient and remainder; PreconditionError on division by zero.
  std::pair<PrimeFieldPoly, PrimeFieldPoly> divmod(const PrimeFieldPoly& d) const;
  PrimeFieldPoly operator%(const PrimeFieldPoly& d) const { return divmod(d).second; }
  PrimeFieldPoly monic() const;
  PrimeFieldPoly derivative() const;
  bool operator==(const PrimeFieldPoly&) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

// Monic gcd (zero only if both are zero).
PrimeFieldPoly gcd(PrimeFieldPoly a, PrimeFieldPoly b);
// base^e mod m.
PrimeFieldPoly powmod(PrimeFieldPoly base, boost::multiprecision::cpp_int e, const PrimeFieldPoly& m);

bool is_prime(std::uint64_t n);
bool is_squarefree(const PrimeFieldPoly& f);

// 1 / (1 - q^(1-s)); PreconditionError for s <= 1 or q < 2.
Rational zeta_q(std::uint64_t q, std::uint64_t s);

// Monic squarefree polynomials of degree n in lexicographic order of the
// coefficient vector (c_0 fastest). ResourceError if q^n > max_count.
void squarefree_polys(std::uint32_t q, std::size_t n, const std::function<bool(const PrimeFieldPoly&)>& visit,
                      std::uint64_t max_count = 100'000'000);

// (d, product of the irreducible factors of degree d); the products multiply to f.
std::vector<std::pair<std::size_t, PrimeFieldPoly>> distinct_degree_factors(const PrimeFieldPoly& f);

using CycleType = std::vector<std::size_t>;  // descending parts

// Degrees of the irreducible factors of a monic squarefree f.
CycleType factorization_type(const PrimeFieldPoly& f);

struct MoebiusLambda {
  int mu = 1;
  std::size_t lambda = 0;
};
MoebiusLambda moebius_and_lambda(const PrimeFieldPoly& f);
MoebiusLambda moebius_and_lambda(const CycleType& t);

// Partitions of n, parts descending, in reverse lexicographic order.
void for_each_partition(std::size_t n, const std::function<void(const CycleType&)>& visit);
std::vector<CycleType> partitions(std::size_t n);

// chi of the i-th exterior power of the standard representation of S_n.
std::int64_t exterior_char(const CycleType& t, std::size_t i);
std::vector<std::int64_t> exterior_chars(const CycleType& t);  // i = 0..n-1

std::string cycle_type_key(const std::vector<CycleType>& per_block);

struct ChebotarevOptions {
  std::uint64_t max_exact = 10'000'000;
  bool allow_sampling = false;
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
};

struct ChebotarevPrediction {
  std::map<std::string, Rational> frequencies;  // keys like "3+2+1|4+1"
  bool exact = true;
  std::uint64_t samples = 0;
};

// Frequencies |Delta ∩ H| / |H| of each tuple of per-block cycle types.
// PreconditionError when H does not respect the blocks; ResourceError when
// |H| exceeds max_exact and sampling is not allowed.
ChebotarevPrediction chebotarev_predict(const PermGroup& h, const BlockStructure& blocks,
                                        const ChebotarevOptions& options = {});

struct Z2Stats {
  std::uint32_t q = 0;
  std::size_t n = 0;
  std::uint64_t count = 0;
  std::int64_t sum_moebius = 0;
  std::uint64_t count_irreducible = 0;
};

// Statistics over monic squarefree f of degree n (q an odd prime, n even).
Z2Stats z2_extension_stats(std::uint32_t q, std::size_t n, Execution execution = Execution::parallel,
                           int threads = 0, std::uint64_t max_count = 100'000'000);

std::string z2_csv(const std::vector<Z2Stats>& rows);

}  // namespace hurwitz
