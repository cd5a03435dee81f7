#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lst/dataset.hpp"

namespace lst {

using Rng = std::mt19937_64;

// SplitMix64 finalizer over (master, stream): independent, reproducible
// child seeds for replications and estimators regardless of scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// k distinct indices from [0, n), Floyd's algorithm. Order is unspecified
// but deterministic for a given generator state.
std::vector<Index> sample_without_replacement(Rng& rng, Index n, Index k);

}  // namespace lst
