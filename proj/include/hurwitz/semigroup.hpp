#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hurwitz/braid.hpp"
#include "hurwitz/rack.hpp"

namespace hurwitz {

// An element of X^n / B_n, identified by the lexicographically least
// tuple in its orbit.
struct OrbitClass {
  std::shared_ptr<const Rack> rack;
  Tuple representative;
  std::size_t length = 0;
  std::vector<std::size_t> components;  // entries per rack component
  bool generating = false;
  std::size_t orbit_size = 0;

  bool operator==(const OrbitClass& o) const { return representative == o.representative; }
};

struct MultMapReport {
  bool surjective = false;
  bool injective = false;
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
};

struct StabilizationRow {
  std::vector<std::size_t> n_vec;
  std::size_t classes = 0;
  std::size_t generating_classes = 0;
  // Generating count equals every row further along each coordinate.
  bool stable = false;
};

struct StabilizationTable {
  std::string rack_name;
  std::vector<StabilizationRow> rows;
  // Single-component racks only: first n from which the generating count
  // is constant through the end of the window.
  std::optional<std::size_t> threshold;
  std::size_t window = 0;
};

// Structure-semigroup experiments over one rack, with a memo of every
// tuple whose class has been computed. Safe for concurrent use.
class Semigroup {
 public:
  explicit Semigroup(Rack x, OrbitOptions options = {}, std::size_t max_tuples = 50'000'000);

  const Rack& rack() const { return *rack_; }
  const std::shared_ptr<const Rack>& rack_ptr() const { return rack_; }
  std::size_t component_count() const { return comp_.count; }

  OrbitClass orbit_class(const Tuple& t) const;
  // Class of the concatenated representatives. PreconditionError when the
  // classes belong to a different rack.
  OrbitClass concat(const OrbitClass& u, const OrbitClass& v) const;

  // Orbits on X(n_1..n_k) (or X^*(n_1..n_k)), sorted by representative.
  std::vector<OrbitClass> classes(const std::vector<std::size_t>& n_vec, bool generating_only) const;
  std::size_t count_classes(const std::vector<std::size_t>& n_vec, bool generating_only) const;

  // M_w : X^*(n_vec)/B_n -> X^*(n_vec + deg w)/B_{n+m}, w prepended.
  MultMapReport mult_map_check(const Tuple& w, const std::vector<std::size_t>& n_vec) const;

  // ranges[j] = inclusive (lo, hi) for component j.
  StabilizationTable stabilization_table(const std::vector<std::pair<std::size_t, std::size_t>>& ranges) const;

  std::size_t cache_size() const;

 private:
  std::vector<std::size_t> component_vector(const Tuple& t) const;
  OrbitClass compute(const Tuple& t) const;

  std::shared_ptr<const Rack> rack_;
  ComponentLabeling comp_;
  OrbitOptions options_;
  std::size_t max_tuples_;

  mutable std::shared_mutex mutex_;
  mutable std::vector<OrbitClass> known_;
  mutable std::unordered_map<std::string, std::uint32_t> index_;  // packed member -> known_ slot
};

OrbitClass orbit_class(const Rack& x, const Tuple& t);
std::size_t count_classes(const Rack& x, const std::vector<std::size_t>& n_vec, bool generating_only);

std::string stabilization_csv(const StabilizationTable& t);

}  // namespace hurwitz
