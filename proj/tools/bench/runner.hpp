#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mvb/decode.hpp"
#include "mvb/vbyte.hpp"
#include "workload.hpp"

namespace mvb::bench {

/// "l1" decodes through a reused buffer of buffer_ints integers; "full"
/// writes each whole list.
enum class BufferMode { l1, full };

const char* to_string(BufferMode mode) noexcept;

struct BenchResult {
    int k = 0;
    double bits_per_int = 0;
    std::string scheme;
    double mis = 0;  // millions of 32-bit integers decoded per second
    double ratio_vs_scalar = 0;  // 0 when no scalar row shares (k, buffer_mode)
    int repetitions = 0;
    std::string buffer_mode;
};

/// Scheme names: "scalar" (conventional decoder), "masked" (vectorized
/// decoder, auto path), "masked-portable" (lane-emulation path forced).
struct BenchConfig {
    std::vector<std::string> schemes = {"scalar", "masked"};
    BufferMode buffer_mode = BufferMode::l1;
    int repetitions = 3;
    int min_measure_ms = 100;  // each measurement is repeated to at least this
    std::size_t buffer_ints = 4096;
};

/// Encoded lists of one length group, ready to time.
struct GroupData {
    int k = 0;
    std::vector<EncodedBuffer> lists;
    std::size_t total_ints = 0;
    std::size_t total_bytes = 0;
    double bits_per_int() const noexcept {
        return total_ints == 0 ? 0 : 8.0 * static_cast<double>(total_bytes) /
                                         static_cast<double>(total_ints);
    }
};

GroupData prepare_group(int k, const std::vector<std::vector<uint32_t>>& lists);

/// Generates, delta-encodes, checks every scheme decodes to the scalar
/// reference (throws std::runtime_error on mismatch), then times each
/// (group, scheme) and reports the median of `repetitions` measurements.
std::vector<BenchResult> run_benchmark(const WorkloadSpec& spec, const BenchConfig& config);

/// Same, over externally supplied groups (e.g. lists read from disk).
std::vector<BenchResult> run_benchmark(const std::vector<GroupData>& groups,
                                       const BenchConfig& config);

}  // namespace mvb::bench
