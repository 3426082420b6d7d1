#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "runner.hpp"

namespace mvb::bench {

inline constexpr const char* kCsvHeader = "K,bits_per_int,scheme,mis,ratio_vs_scalar,buffer_mode";

/// Doubles are written in shortest round-trip form, so read_csv followed by
/// write_csv reproduces the text exactly.
void write_csv(std::ostream& os, std::span<const BenchResult> results);

/// Throws std::runtime_error on a missing header or malformed row.
std::vector<BenchResult> read_csv(std::istream& is);

/// Aligned, human-readable rendering of the same columns.
void write_table(std::ostream& os, std::span<const BenchResult> results);

}  // namespace mvb::bench
