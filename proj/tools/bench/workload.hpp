#pragma once

#include <cstdint>
#include <vector>

namespace mvb::bench {

/// Synthetic posting-list workload: sorted distinct ids drawn uniformly from
/// [0, universe), grouped by length so group K holds lists of lengths
/// [2^K, 2^{K+1}).
struct WorkloadSpec {
    uint64_t seed = 42;
    uint32_t universe = 1u << 25;
    int k_min = 4;
    int k_max = 16;
    int lists_per_group = 8;
};

/// Lists for one length group, deterministic in (spec.seed, k, list index).
/// Throws std::invalid_argument when 2^{k+1} exceeds the universe.
std::vector<std::vector<uint32_t>> generate_group(const WorkloadSpec& spec, int k);

}  // namespace mvb::bench
