#include "hurwitz/orbit_kernel.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <string>
#include <unordered_set>

#include <omp.h>

#include "hurwitz/error.hpp"

namespace hurwitz {

Perm OrbitData::access_perm(std::size_t i) const {
  std::vector<Point> img(access.begin() + static_cast<std::ptrdiff_t>(i * length),
                         access.begin() + static_cast<std::ptrdiff_t>((i + 1) * length));
  return Perm(std::move(img));
}

namespace {

constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

std::uint64_t hash_bytes(const std::uint8_t* p, std::size_t n) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

// Open-addressing index over the packed member array.
class TupleIndex {
 public:
  TupleIndex(std::vector<std::uint8_t>& members, std::size_t n) : members_(members), n_(n) {
    slots_.assign(1024, kEmpty);
  }

  std::uint32_t find(const std::uint8_t* t, std::uint64_t h) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = h & mask;; s = (s + 1) & mask) {
      const std::uint32_t idx = slots_[s];
      if (idx == kEmpty) return kEmpty;
      if (std::memcmp(members_.data() + std::size_t{idx} * n_, t, n_) == 0) return idx;
    }
  }

  // Returns (index, inserted). Appends to the member array on insertion.
  std::pair<std::uint32_t, bool> insert(const std::uint8_t* t, std::uint64_t h) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t s = h & mask;
    for (;; s = (s + 1) & mask) {
      const std::uint32_t idx = slots_[s];
      if (idx == kEmpty) break;
      if (std::memcmp(members_.data() + std::size_t{idx} * n_, t, n_) == 0) return {idx, false};
    }
    const auto idx = static_cast<std::uint32_t>(count_);
    if (count_ + 1 >= kEmpty) throw ResourceError("orbit exceeds 32-bit member indexing");
    members_.insert(members_.end(), t, t + n_);
    slots_[s] = idx;
    if (++count_ * 2 > slots_.size()) grow();
    return {idx, true};
  }

 private:
  void grow() {
    std::vector<std::uint32_t> next(slots_.size() * 2, kEmpty);
    const std::size_t mask = next.size() - 1;
    for (std::size_t i = 0; i < count_; ++i) {
      std::size_t s = hash_bytes(members_.data() + i * n_, n_) & mask;
      while (next[s] != kEmpty) s = (s + 1) & mask;
      next[s] = static_cast<std::uint32_t>(i);
    }
    slots_.swap(next);
  }

  std::vector<std::uint8_t>& members_;
  std::size_t n_;
  std::vector<std::uint32_t> slots_;
  std::size_t count_ = 0;
};

void append_access(OrbitData& d, std::size_t src, std::size_t pos) {
  const std::size_t n = d.length;
  const std::size_t base = d.access.size();
  d.access.resize(base + n);
  const auto a = static_cast<std::uint8_t>(pos), b = static_cast<std::uint8_t>(pos + 1);
  for (std::size_t p = 0; p < n; ++p) {
    std::uint8_t v = d.access[src * n + p];
    d.access[base + p] = v == a ? b : (v == b ? a : v);
  }
}

void check_cap(const OrbitData& d, const KernelOptions& options, std::size_t frontier) {
  if (d.size() > options.cap) {
    throw ResourceError("orbit cap of " + std::to_string(options.cap) + " members exceeded (frontier size " +
                        std::to_string(frontier) + ")");
  }
}

}  // namespace

OrbitData enumerate_orbit(std::span<const std::uint8_t> seed, const PackedMove& move,
                          const KernelOptions& options) {
  const std::size_t n = seed.size();
  if (n == 0) throw PreconditionError("orbit: empty tuple");
  if (n > 255) throw PreconditionError("orbit: tuple length above 255");
  OrbitData d;
  d.length = n;
  TupleIndex index(d.members, n);
  index.insert(seed.data(), hash_bytes(seed.data(), n));
  for (std::size_t p = 0; p < n; ++p) d.access.push_back(static_cast<std::uint8_t>(p));
  const std::size_t slots = d.slots();
  if (slots == 0) return d;

  if (options.execution == Execution::serial) {
    std::vector<std::uint8_t> cur(n), tmp(n);
    for (std::size_t head = 0; head < d.size(); ++head) {
      std::memcpy(cur.data(), d.members.data() + head * n, n);
      for (std::size_t s = 0; s < slots; ++s) {
        const std::size_t pos = s % (n - 1);
        const int sign = s < n - 1 ? 1 : -1;
        move(cur.data(), pos, sign, tmp.data());
        auto [idx, inserted] = index.insert(tmp.data(), hash_bytes(tmp.data(), n));
        if (inserted) {
          append_access(d, head, pos);
          check_cap(d, options, d.size() - head);
        }
        d.edges.push_back(idx);
      }
    }
    return d;
  }

  std::vector<std::uint8_t> targets;
  std::vector<std::uint64_t> hashes;
  std::vector<std::uint32_t> found;
  std::size_t level_begin = 0, level_end = 1;
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  while (level_begin < level_end) {
    for (std::size_t chunk_begin = level_begin; chunk_begin < level_end; chunk_begin += options.chunk) {
      const std::size_t cnt = std::min(options.chunk, level_end - chunk_begin);
      targets.resize(cnt * slots * n);
      hashes.resize(cnt * slots);
      found.resize(cnt * slots);
      const std::uint8_t* base = d.members.data();
#pragma omp parallel for schedule(static) num_threads(threads)
      for (std::ptrdiff_t f = 0; f < static_cast<std::ptrdiff_t>(cnt); ++f) {
        const std::uint8_t* src = base + (chunk_begin + static_cast<std::size_t>(f)) * n;
        for (std::size_t s = 0; s < slots; ++s) {
          const std::size_t k = static_cast<std::size_t>(f) * slots + s;
          std::uint8_t* out = targets.data() + k * n;
          move(src, s % (n - 1), s < n - 1 ? 1 : -1, out);
          hashes[k] = hash_bytes(out, n);
          found[k] = index.find(out, hashes[k]);
        }
      }
      for (std::size_t f = 0; f < cnt; ++f) {
        for (std::size_t s = 0; s < slots; ++s) {
          const std::size_t k = f * slots + s;
          std::uint32_t idx = found[k];
          if (idx == kEmpty) {
            auto [ins_idx, inserted] = index.insert(targets.data() + k * n, hashes[k]);
            idx = ins_idx;
            if (inserted) {
              append_access(d, chunk_begin + f, s % (n - 1));
              check_cap(d, options, level_end - level_begin);
            }
          }
          d.edges.push_back(idx);
        }
      }
    }
    level_begin = level_end;
    level_end = d.size();
  }
  return d;
}

std::vector<Perm> schreier_generator_images(const OrbitData& orbit, Execution execution, int threads) {
  const std::size_t n = orbit.length;
  const std::size_t slots = orbit.slots();
  const std::size_t size = orbit.size();
  if (slots == 0) return {};

  auto generator_at = [&](std::size_t t, std::size_t pos, std::string& g, std::string& vinv) {
    const std::uint8_t* u = orbit.access.data() + t * n;
    const std::uint8_t* v = orbit.access.data() + std::size_t{orbit.edges[t * slots + pos]} * n;
    for (std::size_t p = 0; p < n; ++p) vinv[v[p]] = static_cast<char>(p);
    bool identity = true;
    const auto a = static_cast<std::uint8_t>(pos), b = static_cast<std::uint8_t>(pos + 1);
    for (std::size_t p = 0; p < n; ++p) {
      std::uint8_t w = u[p];
      w = w == a ? b : (w == b ? a : w);
      g[p] = vinv[w];
      identity = identity && static_cast<std::uint8_t>(g[p]) == p;
    }
    return !identity;
  };

  std::unordered_set<std::string> merged;
  if (execution == Execution::serial) {
    std::string g(n, '\0'), vinv(n, '\0');
    for (std::size_t t = 0; t < size; ++t) {
      for (std::size_t pos = 0; pos + 1 < n; ++pos) {
        if (generator_at(t, pos, g, vinv)) merged.insert(g);
      }
    }
  } else {
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
    std::vector<std::unordered_set<std::string>> local(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
    {
      auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
      std::string g(n, '\0'), vinv(n, '\0');
#pragma omp for schedule(static)
      for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(size); ++t) {
        for (std::size_t pos = 0; pos + 1 < n; ++pos) {
          if (generator_at(static_cast<std::size_t>(t), pos, g, vinv)) mine.insert(g);
        }
      }
    }
    for (auto& s : local) merged.insert(s.begin(), s.end());
  }

  std::vector<std::string> sorted(merged.begin(), merged.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Perm> out;
  out.reserve(sorted.size());
  for (const auto& s : sorted) {
    std::vector<Point> img(n);
    for (std::size_t p = 0; p < n; ++p) img[p] = static_cast<std::uint8_t>(s[p]);
    out.emplace_back(std::move(img));
  }
  return out;
}

}  // namespace hurwitz
