#include <cstdint>

#include "mvb/decode.hpp"
#include "stream_loop.hpp"

// Portable lane-emulation backend: the same block/lane operations as the
// vector path, spelled as plain integer arithmetic. It is the reference the
// vector path is tested against, and the fallback on hosts without SIMD.

namespace mvb {

LaneBlock apply_shuffle(const uint8_t* src16, const ShuffleControl& control) noexcept {
    LaneBlock b;
    for (int i = 0; i < 16; ++i) {
        const uint8_t slot = control.permutation[i];
        b.bytes[i] = slot == ShuffleControl::kZeroSlot ? 0 : src16[slot];
    }
    return b;
}

void kernel_six2b(const LaneBlock& permuted, uint32_t out[6]) noexcept {
    using namespace lane_constants;
    for (int k = 0; k < 6; ++k) {
        const uint16_t lane = permuted.lane16(k);
        const uint16_t low = lane & six2b_low_mask;
        const uint16_t high = static_cast<uint16_t>(lane & six2b_high_mask) >> six2b_high_shift;
        out[k] = static_cast<uint32_t>(low | high);
    }
}

void kernel_four3b(const LaneBlock& permuted, uint32_t out[4]) noexcept {
    using namespace lane_constants;
    for (int k = 0; k < 4; ++k) {
        const uint32_t lane = permuted.lane32(k);
        out[k] = (lane & four3b_low_mask) | ((lane & four3b_mid_mask) >> four3b_mid_shift) |
                 ((lane & four3b_high_mask) >> four3b_high_shift);
    }
}

void kernel_two5b(const LaneBlock& permuted, uint32_t out[2]) noexcept {
    using namespace lane_constants;
    for (int h = 0; h < 2; ++h) {
        // Multiply the half's 16-bit lanes (b, c, d, e + a*2^8) by
        // (2^7, 2^6, 2^5, 2^4); products wrap mod 2^16.
        uint8_t x[8];
        for (int j = 0; j < 4; ++j) {
            const uint16_t product =
                static_cast<uint16_t>(permuted.lane16(4 * h + j) * two5b_multiplier[j]);
            x[2 * j] = static_cast<uint8_t>(product);
            x[2 * j + 1] = static_cast<uint8_t>(product >> 8);
        }
        // Combine with the byte-shifted copy and the isolated low digit; the
        // digit halves land on even bytes, odd bytes are don't-cares.
        const uint8_t low_digit = permuted.bytes[8 * h + 7];
        const uint8_t b0 = static_cast<uint8_t>(x[0] | low_digit);
        const uint8_t b1 = static_cast<uint8_t>(x[2] | x[1]);
        const uint8_t b2 = static_cast<uint8_t>(x[4] | x[3]);
        const uint8_t b3 = static_cast<uint8_t>(x[6] | x[5]);
        out[h] = static_cast<uint32_t>(b0) | static_cast<uint32_t>(b1) << 8 |
                 static_cast<uint32_t>(b2) << 16 | static_cast<uint32_t>(b3) << 24;
    }
}

void prefix_sum4(PrefixState& state, const uint32_t gaps[4], uint32_t out[4]) noexcept {
    auto& p = state.lanes();
    const uint32_t last = p[3];
    // c += c shifted up one lane, then two lanes: running sums in place.
    uint32_t c[4] = {gaps[0], gaps[1], gaps[2], gaps[3]};
    c[3] += c[2];
    c[2] += c[1];
    c[1] += c[0];
    c[3] += c[1];
    c[2] += c[0];
    for (int i = 0; i < 4; ++i) {
        p[i] = last + c[i];
        out[i] = p[i];
    }
}

void prefix_sum2(PrefixState& state, const uint32_t gaps[2], uint32_t out[2]) noexcept {
    auto& p = state.lanes();
    const uint32_t last = p[3];
    const uint32_t first = last + gaps[0];
    const uint32_t second = first + gaps[1];
    p = {first, second, second, second};
    out[0] = first;
    out[1] = second;
}

namespace detail {

namespace {

struct PortableOps {
    using Prefix = PrefixState;

    static Prefix make_prefix(uint32_t prev) noexcept { return PrefixState(prev); }
    static uint32_t prefix_last(const Prefix& p) noexcept { return p.last(); }
    static void set_prefix(Prefix& p, uint32_t last) noexcept { p = PrefixState(last); }
    static uint16_t movemask(const uint8_t* p) noexcept { return extract_mask(p); }

    static WindowStep window(const uint8_t* p, EntryTable::Entry e, uint32_t* out) noexcept {
        if (e.index == EntryTable::kAllSingleIndex) {
            for (int k = 0; k < 12; ++k) out[k] = p[k];
            return {12, 12};
        }
        const ShuffleControl& ctl = shuffle_table().controls[e.index];
        if (e.index < 64) {
            kernel_six2b(apply_shuffle(p, ctl), out);
            return {e.consumed, 6};
        }
        if (e.index < 145) {
            kernel_four3b(apply_shuffle(p, ctl), out);
            return {e.consumed, 4};
        }
        uint8_t cleared[16];
        for (int i = 0; i < 16; ++i) cleared[i] = p[i] & lane_constants::two5b_clear_mask;
        kernel_two5b(apply_shuffle(cleared, ctl), out);
        return {e.consumed, 2};
    }

    static WindowStep window_delta(const uint8_t* p, EntryTable::Entry e, Prefix& prefix,
                                   uint32_t* out) noexcept {
        uint32_t gaps[12];
        const WindowStep step = window(p, e, gaps);
        switch (step.produced) {
            case 12:
                prefix_sum4(prefix, gaps + 0, out + 0);
                prefix_sum4(prefix, gaps + 4, out + 4);
                prefix_sum4(prefix, gaps + 8, out + 8);
                break;
            case 6:
                prefix_sum4(prefix, gaps, out);
                prefix_sum2(prefix, gaps + 4, out + 4);
                break;
            case 4:
                prefix_sum4(prefix, gaps, out);
                break;
            default:
                prefix_sum2(prefix, gaps, out);
                break;
        }
        return step;
    }
};

}  // namespace

WindowResult decode_window_portable(const uint8_t* window16, uint16_t mask12, uint32_t out[12]) {
    const EntryTable::Entry e = entry_table().entries[mask12 & 0x0FFF];
    if (e.index == EntryTable::kInvalidIndex) return {DecodeStatus::malformed, 0, 0};
    const WindowStep step = PortableOps::window(window16, e, out);
    return {DecodeStatus::ok, static_cast<uint8_t>(step.consumed),
            static_cast<uint8_t>(step.produced)};
}

DecodeResult decode_stream_portable(std::span<const uint8_t> in, std::size_t count, uint32_t* out,
                                    const DecodeOptions& opt) {
    return stream_decode<PortableOps, false>(in, count, 0, out, opt);
}

DecodeResult decode_delta_stream_portable(std::span<const uint8_t> in, std::size_t count,
                                          uint32_t prev, uint32_t* out, const DecodeOptions& opt) {
    return stream_decode<PortableOps, true>(in, count, prev, out, opt);
}

}  // namespace detail
}  // namespace mvb
