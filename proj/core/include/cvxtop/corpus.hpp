#pragma once

// Deterministic generators for test and benchmark set systems.

#include <cstdint>
#include <random>
#include <vector>

#include "cvxtop/set_system.hpp"

namespace cvxtop {

/// Each element joins each member independently with probability 1/2.
/// Uses only raw mt19937_64 output, so the result is platform independent.
SetSystem random_system(std::mt19937_64& rng, int ground, int members);
std::vector<SetSystem> random_corpus(std::uint64_t seed, int count, int ground, int members);

/// All nonempty intervals {i, ..., j} of {0, ..., n-1}.
SetSystem intervals_system(int n);

/// n members on ground {0, ..., n-1}; member i omits exactly i. The
/// whole ground set has no Radon partition, so radon = n + 1.
SetSystem star_system(int n);

}  // namespace cvxtop
