#pragma once

// Internal helpers shared between the scalar decoder and the stream loop.
// Not installed.

#include <cstddef>
#include <cstdint>

#include "mvb/vbyte.hpp"

namespace mvb::detail {

struct ScalarOne {
    uint32_t value = 0;
    unsigned consumed = 0;  // 0 on error
    DecodeStatus status = DecodeStatus::ok;
};

// One integer, byte at a time. Reads at most five bytes; the fifth byte is
// taken whole and the sum wraps mod 2^32. Strict mode rejects a fifth byte
// >= 0x10 (covers both non-canonical values and a set continuation bit).
inline ScalarOne scalar_decode_one(const uint8_t* p, std::size_t avail, DecodeMode mode) noexcept {
    if (avail == 0) return {0, 0, DecodeStatus::truncated};
    uint32_t b = p[0];
    if (b < 0x80) return {b, 1, DecodeStatus::ok};
    uint32_t acc = b & 0x7F;
    for (unsigned k = 1; k < 4; ++k) {
        if (k >= avail) return {0, 0, DecodeStatus::truncated};
        b = p[k];
        if (b < 0x80) return {acc | (b << (7 * k)), k + 1, DecodeStatus::ok};
        acc |= (b & 0x7F) << (7 * k);
    }
    if (avail < 5) return {0, 0, DecodeStatus::truncated};
    b = p[4];
    if (mode == DecodeMode::strict && b >= 0x10) return {0, 0, DecodeStatus::malformed};
    return {acc + (b << 28), 5, DecodeStatus::ok};
}

}  // namespace mvb::detail
