#ifndef EUCGRAPH_RNG_HPP
#define EUCGRAPH_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "eucgraph/errors.hpp"

namespace eucgraph {

// Steele-Lea-Flood splitmix64. Ten lines, no platform dependence, so a seed
// written into a report reproduces the run anywhere. std::mt19937 would also
// be deterministic but its seeding and distribution adapters are easy to get
// subtly wrong across library versions; here the whole stream is pinned.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough residue draw; bias is < n / 2^64, irrelevant for the
  // subset sizes used here and keeps the stream layout trivial to document.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) raise(errc::internal_error, "below(0)");
    return next() % n;
  }

 private:
  std::uint64_t state_;
};

// m distinct values out of [0, n), returned sorted ascending. Partial
// Fisher-Yates on a sparse map: draws exactly m values from the stream.
inline std::vector<std::uint64_t> sample_without_replacement(
    std::uint64_t n, std::uint64_t m, SplitMix64& rng) {
  if (m > n) raise(errc::subset_out_of_range, "sample size exceeds population");
  std::unordered_map<std::uint64_t, std::uint64_t> moved;
  std::vector<std::uint64_t> out;
  out.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t j = i + rng.below(n - i);
    auto it = moved.find(j);
    std::uint64_t pick = (it == moved.end()) ? j : it->second;
    auto self = moved.find(i);
    moved[j] = (self == moved.end()) ? i : self->second;
    out.push_back(pick);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eucgraph

#endif
