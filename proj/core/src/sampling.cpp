#include "lst/sampling.hpp"

#include <algorithm>

#include "lst/error.hpp"

namespace lst {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<Index> sample_without_replacement(Rng& rng, Index n, Index k) {
  if (k < 0 || k > n) fail(ErrorCode::kInvalidArgument, "cannot sample k > n distinct indices");
  std::vector<Index> picked;
  picked.reserve(static_cast<std::size_t>(k));
  for (Index j = n - k; j < n; ++j) {
    std::uniform_int_distribution<Index> draw(0, j);
    const Index t = draw(rng);
    if (std::find(picked.begin(), picked.end(), t) == picked.end()) {
      picked.push_back(t);
    } else {
      picked.push_back(j);
    }
  }
  return picked;
}

}  // namespace lst
