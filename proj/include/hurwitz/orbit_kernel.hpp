#pragma once

// Breadth-first orbit enumeration for the right B_n action on packed tuples.
//
// Two kernels produce bit-identical results: a plain queue BFS (the
// reference) and a level-synchronous BFS whose move generation and
// hash lookups run under OpenMP, followed by an ordered sequential merge.
// Member numbering is BFS order with generator slots sigma_1..sigma_{n-1}
// followed by their inverses.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

enum class Execution { serial, parallel };

// Applies sigma_{pos+1}^{sign} to `in` (length n), writing to `out`.
using PackedMove = std::function<void(const std::uint8_t* in, std::size_t pos, int sign, std::uint8_t* out)>;

struct OrbitData {
  std::size_t length = 0;              // n
  std::vector<std::uint8_t> members;   // size() * n entries
  std::vector<std::uint8_t> access;    // size() * n image arrays
  std::vector<std::uint32_t> edges;    // size() * 2(n-1) member indices

  std::size_t size() const { return length == 0 ? members.size() : members.size() / length; }
  std::size_t slots() const { return length < 2 ? 0 : 2 * (length - 1); }
  std::span<const std::uint8_t> member(std::size_t i) const {
    return {members.data() + i * length, length};
  }
  Perm access_perm(std::size_t i) const;
  // Slot of sigma_i^sign, i 1-based.
  std::size_t slot(std::size_t i, int sign) const { return sign > 0 ? i - 1 : (length - 1) + (i - 1); }
};

struct KernelOptions {
  std::size_t cap = 50'000'000;
  Execution execution = Execution::parallel;
  int threads = 0;  // 0: OpenMP default
  std::size_t chunk = 1 << 15;
};

// Throws ResourceError when the orbit exceeds options.cap.
OrbitData enumerate_orbit(std::span<const std::uint8_t> seed, const PackedMove& move,
                          const KernelOptions& options);

// Distinct nonidentity Schreier generator images access[t] * pi(sigma_i) *
// access[t^sigma_i]^-1, sorted. Parallel and serial paths agree exactly.
std::vector<Perm> schreier_generator_images(const OrbitData& orbit, Execution execution, int threads = 0);

}  // namespace hurwitz
