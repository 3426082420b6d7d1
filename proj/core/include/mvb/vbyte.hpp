#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mvb {

/// A 32-bit value never needs more than five 7-bit digits.
inline constexpr std::size_t kMaxEncodedBytes = 5;

/// Number of bytes encode_one(x) produces: 1 for [0,2^7), 2 for [2^7,2^14),
/// 3 for [2^14,2^21), 4 for [2^21,2^28), 5 for [2^28,2^32).
std::size_t encoded_size(uint32_t x) noexcept;

/// Writes the canonical minimal-length encoding of x (1..5 bytes, least
/// significant 7-bit digit first, continuation bit 0x80 on every byte but the
/// last). Returns the number of bytes written.
std::size_t encode_one(uint32_t x, uint8_t* out) noexcept;

/// Appends encode_one(x) to out.
void encode_one(uint32_t x, std::vector<uint8_t>& out);

/// A byte stream holding `count` encoded integers, possibly gaps.
struct EncodedBuffer {
    std::vector<uint8_t> bytes;
    uint32_t count = 0;
    bool delta_coded = false;
};

EncodedBuffer encode_sequence(std::span<const uint32_t> values);

/// delta_encode + encode_sequence; the result carries delta_coded = true.
/// Throws std::invalid_argument if values decreases anywhere.
EncodedBuffer encode_deltas(std::span<const uint32_t> sorted_values);

enum class DecodeMode {
    strict,      ///< reject integers whose fifth byte is >= 0x10
    permissive,  ///< take the fifth byte whole; value reduced mod 2^32
};

enum class DecodeStatus { ok, truncated, malformed };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::ok;
    std::size_t values_written = 0;
    std::size_t bytes_consumed = 0;
};

/// Conventional byte-at-a-time decoder; the reference for every other decode
/// path in this library. Decodes exactly `count` integers from `in`.
/// On error, values_written/bytes_consumed cover the integers completed
/// before the fault.
DecodeResult decode_scalar(std::span<const uint8_t> in, std::size_t count, uint32_t* out,
                           DecodeMode mode = DecodeMode::strict);
DecodeResult decode_scalar(const EncodedBuffer& buf, uint32_t* out,
                           DecodeMode mode = DecodeMode::strict);

/// Scalar decode fused with the prefix sum: decodes `count` gaps and writes
/// absolute values, starting from `prev`.
DecodeResult decode_delta_scalar(std::span<const uint8_t> in, std::size_t count, uint32_t prev,
                                 uint32_t* out, DecodeMode mode = DecodeMode::strict);

/// gaps[0] = values[0] - 0, gaps[i] = values[i] - values[i-1].
/// Throws std::invalid_argument if values decreases anywhere.
std::vector<uint32_t> delta_encode(std::span<const uint32_t> values);

/// out[i] = prev + gaps[0] + ... + gaps[i]  (mod 2^32). In-place use
/// (out == gaps.data()) is allowed.
void prefix_sum_scalar(std::span<const uint32_t> gaps, uint32_t prev, uint32_t* out) noexcept;
std::vector<uint32_t> prefix_sum_scalar(std::span<const uint32_t> gaps, uint32_t prev);

}  // namespace mvb
