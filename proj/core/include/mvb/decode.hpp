#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "mvb/mask_tables.hpp"
#include "mvb/vbyte.hpp"

namespace mvb {

/// Which decode implementation to run. `auto_select` consults the
/// MVB_DECODE_PATH environment variable (auto | portable | vector), then
/// picks `vector` when the host supports it. Forcing `vector` on a host
/// without support throws std::runtime_error.
enum class DecodePath { auto_select, portable, vector };

bool vector_path_available() noexcept;

struct DecodeOptions {
    DecodePath path = DecodePath::auto_select;
    DecodeMode mode = DecodeMode::strict;
    /// Bytes that must remain readable for the vectorized loop to continue;
    /// raising it hands off to the scalar tail earlier, SIZE_MAX disables the
    /// vector loop entirely. Values below 16 are clamped to 16 (each window
    /// reads 16 bytes while consuming at most 12).
    std::size_t scalar_handoff = 16;
};

struct WindowResult {
    DecodeStatus status = DecodeStatus::ok;
    uint8_t consumed = 0;  // 2..12
    uint8_t produced = 0;  // 2 | 4 | 6 | 12
};

/// Decodes one window. window16 must have 16 readable bytes and start at an
/// integer boundary; mask12 must be the continuation mask of its first 12
/// bytes. An invalid mask yields status = malformed and no output.
WindowResult decode_window(const uint8_t* window16, uint16_t mask12, uint32_t out[12],
                           DecodePath path = DecodePath::auto_select);

/// Decodes exactly `count` integers; output and bytes consumed are identical
/// to decode_scalar on any canonical stream.
DecodeResult decode_stream(std::span<const uint8_t> in, std::size_t count, uint32_t* out,
                           const DecodeOptions& options = {});
DecodeResult decode_stream(const EncodedBuffer& buf, uint32_t* out,
                           const DecodeOptions& options = {});

/// Decodes `count` gaps and writes absolute values starting from `prev`;
/// equivalent to decode_scalar followed by prefix_sum_scalar.
DecodeResult decode_delta_stream(std::span<const uint8_t> in, std::size_t count, uint32_t prev,
                                 uint32_t* out, const DecodeOptions& options = {});
DecodeResult decode_delta_stream(const EncodedBuffer& buf, uint32_t prev, uint32_t* out,
                                 const DecodeOptions& options = {});

/// 16 bytes with little-endian 16-bit and 32-bit lane views. Reinterpreting
/// between lane widths preserves the underlying bytes.
struct LaneBlock {
    alignas(16) std::array<uint8_t, 16> bytes{};

    uint16_t lane16(int i) const noexcept {
        return static_cast<uint16_t>(bytes[2 * i] | bytes[2 * i + 1] << 8);
    }
    uint32_t lane32(int i) const noexcept {
        return static_cast<uint32_t>(bytes[4 * i]) | static_cast<uint32_t>(bytes[4 * i + 1]) << 8 |
               static_cast<uint32_t>(bytes[4 * i + 2]) << 16 |
               static_cast<uint32_t>(bytes[4 * i + 3]) << 24;
    }
};

/// Portable byte permutation; kZeroSlot slots produce zero bytes.
LaneBlock apply_shuffle(const uint8_t* src16, const ShuffleControl& control) noexcept;

// Lane kernels, portable reference semantics. Each takes a block already
// permuted per the case layout from build_shuffle_table.
void kernel_six2b(const LaneBlock& permuted, uint32_t out[6]) noexcept;
void kernel_four3b(const LaneBlock& permuted, uint32_t out[4]) noexcept;
/// permuted must additionally have continuation bits cleared
/// (lane_constants::two5b_clear_mask applied before the shuffle).
void kernel_two5b(const LaneBlock& permuted, uint32_t out[2]) noexcept;

/// Running prefix-sum lanes; lane 3 always holds the last absolute value
/// written.
class PrefixState {
public:
    PrefixState() = default;
    explicit PrefixState(uint32_t prev) { lanes_.fill(prev); }
    uint32_t last() const noexcept { return lanes_[3]; }
    std::array<uint32_t, 4>& lanes() noexcept { return lanes_; }
    const std::array<uint32_t, 4>& lanes() const noexcept { return lanes_; }

private:
    std::array<uint32_t, 4> lanes_{};
};

/// out[j] = last + gaps[0] + ... + gaps[j] (mod 2^32); state ends with
/// out[3] in every lane position that matters (lane 3 = out[3]).
void prefix_sum4(PrefixState& state, const uint32_t gaps[4], uint32_t out[4]) noexcept;
/// Two-gap variant: out[0], out[1]; state lane 3 ends at out[1].
void prefix_sum2(PrefixState& state, const uint32_t gaps[2], uint32_t out[2]) noexcept;

}  // namespace mvb
