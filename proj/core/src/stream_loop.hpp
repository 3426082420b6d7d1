#pragma once

// Shared stream-decoding loop, instantiated once per lane-ops backend.
// Included by decode_portable.cpp and decode_simd.cpp only.

#include <cstdint>
#include <span>

#include "internal.hpp"
#include "mvb/decode.hpp"
#include "mvb/mask_tables.hpp"

namespace mvb::detail {

struct WindowStep {
    unsigned consumed;
    unsigned produced;
};

// Ops contract:
//   using Prefix = ...;
//   static Prefix   make_prefix(uint32_t prev);
//   static uint32_t prefix_last(const Prefix&);
//   static void     set_prefix(Prefix&, uint32_t last);
//   static uint16_t movemask(const uint8_t* p);                  // 16 bytes
//   static WindowStep window(const uint8_t* p, EntryTable::Entry e, uint32_t* out);
//   static WindowStep window_delta(const uint8_t* p, EntryTable::Entry e, Prefix&, uint32_t* out);
// window/window_delta read 16 bytes, require a non-invalid entry, and may
// store up to 4 lanes past their last produced value (never past out+12).

template <class Ops, bool Delta>
DecodeResult stream_decode(std::span<const uint8_t> in, std::size_t count, uint32_t prev,
                           uint32_t* out, const DecodeOptions& opt) {
    const EntryTable& table = entry_table();
    const uint8_t* const base = in.data();
    const std::size_t len = in.size();

    typename Ops::Prefix prefix = Ops::make_prefix(prev);
    std::size_t pos = 0;
    std::size_t written = 0;

    const std::size_t floor_bytes = opt.scalar_handoff < 16 ? 16 : opt.scalar_handoff;

    // Continuation bits pending ahead of `pos`, lsb-first; a second 48-bit
    // batch is kept gathered while the first drains. Invariant:
    // gather_pos == pos + valid + next_valid.
    uint64_t bits = 0;
    unsigned valid = 0;
    uint64_t next_bits = 0;
    unsigned next_valid = 0;
    std::size_t gather_pos = 0;

    while (count - written >= 12 && len - pos >= floor_bytes) {
        if (valid < 12) {
            if (next_valid != 0) {
                bits |= next_bits << valid;
                valid += next_valid;
                next_bits = 0;
                next_valid = 0;
            } else if (valid == 0 && gather_pos + 48 <= len) {
                bits = static_cast<uint64_t>(Ops::movemask(base + gather_pos)) |
                       static_cast<uint64_t>(Ops::movemask(base + gather_pos + 16)) << 16 |
                       static_cast<uint64_t>(Ops::movemask(base + gather_pos + 32)) << 32;
                valid = 48;
                gather_pos += 48;
            }
            while (valid < 12 && gather_pos + 16 <= len) {
                bits |= static_cast<uint64_t>(Ops::movemask(base + gather_pos)) << valid;
                valid += 16;
                gather_pos += 16;
            }
            if (valid < 12) break;  // cannot form a window mask; scalar tail
        }
        // Keep the second batch full while plenty of input remains.
        if (next_valid == 0 && len - pos >= 96 && gather_pos + 48 <= len) {
            next_bits = static_cast<uint64_t>(Ops::movemask(base + gather_pos)) |
                        static_cast<uint64_t>(Ops::movemask(base + gather_pos + 16)) << 16 |
                        static_cast<uint64_t>(Ops::movemask(base + gather_pos + 32)) << 32;
            next_valid = 48;
            gather_pos += 48;
        }
        if (len - pos < 16) break;  // window over-read guard; scalar tail

        const uint16_t mask = static_cast<uint16_t>(bits & 0x0FFF);
        const EntryTable::Entry entry = table.entries[mask];
        if (entry.index == EntryTable::kInvalidIndex) {
            if (opt.mode == DecodeMode::strict) return {DecodeStatus::malformed, written, pos};
            // Permissive: take one integer the scalar way and resume. The 12
            // valid mask bits guarantee at least 12 readable bytes.
            const ScalarOne one = scalar_decode_one(base + pos, len - pos, opt.mode);
            uint32_t v = one.value;
            if constexpr (Delta) {
                v += Ops::prefix_last(prefix);
                Ops::set_prefix(prefix, v);
            }
            out[written++] = v;
            pos += one.consumed;
            bits >>= one.consumed;
            valid -= one.consumed;
            continue;
        }

        WindowStep step;
        if constexpr (Delta) {
            step = Ops::window_delta(base + pos, entry, prefix, out + written);
        } else {
            step = Ops::window(base + pos, entry, out + written);
        }
        pos += step.consumed;
        written += step.produced;
        bits >>= step.consumed;
        valid -= step.consumed;
    }

    // Conventional tail.
    uint32_t last = Ops::prefix_last(prefix);
    while (written < count) {
        const ScalarOne one = scalar_decode_one(base + pos, len - pos, opt.mode);
        if (one.status != DecodeStatus::ok) return {one.status, written, pos};
        uint32_t v = one.value;
        if constexpr (Delta) {
            last += v;
            v = last;
        }
        out[written++] = v;
        pos += one.consumed;
    }
    return {DecodeStatus::ok, written, pos};
}

}  // namespace mvb::detail
