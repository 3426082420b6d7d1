#include "workload.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace mvb::bench {

std::vector<std::vector<uint32_t>> generate_group(const WorkloadSpec& spec, int k) {
    if (k < 0 || k >= 31 || (uint64_t{1} << (k + 1)) > spec.universe)
        throw std::invalid_argument("generate_group: universe too small for length group 2^" +
                                    std::to_string(k));

    std::vector<std::vector<uint32_t>> lists(static_cast<std::size_t>(spec.lists_per_group));
    for (int i = 0; i < spec.lists_per_group; ++i) {
        // seed_seq keeps 32-bit words; split the 64-bit seed so no bits drop.
        std::seed_seq seq{static_cast<uint32_t>(spec.seed), static_cast<uint32_t>(spec.seed >> 32),
                          static_cast<uint32_t>(k), static_cast<uint32_t>(i)};
        std::mt19937_64 rng(seq);

        const uint64_t lo = uint64_t{1} << k;
        const uint64_t hi = (uint64_t{1} << (k + 1)) - 1;
        const std::size_t length =
            static_cast<std::size_t>(std::uniform_int_distribution<uint64_t>(lo, hi)(rng));

        std::uniform_int_distribution<uint32_t> id(0, spec.universe - 1);
        std::unordered_set<uint32_t> seen;
        seen.reserve(length * 2);
        std::vector<uint32_t>& list = lists[i];
        list.reserve(length);
        while (list.size() < length) {
            const uint32_t v = id(rng);
            if (seen.insert(v).second) list.push_back(v);
        }
        std::sort(list.begin(), list.end());
    }
    return lists;
}

}  // namespace mvb::bench
