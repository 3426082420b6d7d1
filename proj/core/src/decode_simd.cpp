// SSSE3/SSE4.1 backend. Compiled with the matching -m flags; callers must
// check vector_path_available() before routing here.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cstdint>

#include "mvb/decode.hpp"
#include "stream_loop.hpp"

namespace mvb::detail {

namespace {

inline __m128i load16(const uint8_t* p) noexcept {
    return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
}

inline void store16(uint32_t* p, __m128i v) noexcept {
    _mm_storeu_si128(reinterpret_cast<__m128i*>(p), v);
}

inline __m128i control16(uint8_t index) noexcept {
    return load16(shuffle_table().controls[index].permutation.data());
}

// p <- p4 broadcast + running sums of the four gap lanes.
inline __m128i prefix4_lanes(__m128i p, __m128i c) noexcept {
    p = _mm_shuffle_epi32(p, _MM_SHUFFLE(3, 3, 3, 3));
    c = _mm_add_epi32(c, _mm_slli_si128(c, 4));
    c = _mm_add_epi32(c, _mm_slli_si128(c, 8));
    return _mm_add_epi32(p, c);
}

// Two-gap variant: the second sum is copied into lanes 2 and 3 so lane 3
// keeps the last value written.
inline __m128i prefix2_lanes(__m128i p, __m128i c) noexcept {
    p = _mm_shuffle_epi32(p, _MM_SHUFFLE(3, 3, 3, 3));
    c = _mm_add_epi32(c, _mm_slli_si128(c, 4));
    c = _mm_shuffle_epi32(c, _MM_SHUFFLE(1, 1, 1, 0));
    return _mm_add_epi32(p, c);
}

// Decoded 16-bit lanes for the six-integer case: mask the 7 low bits, shift
// the high bytes down one bit, OR.
inline __m128i six2b_lanes(__m128i in, uint8_t index) noexcept {
    const __m128i perm = _mm_shuffle_epi8(in, control16(index));
    const __m128i low = _mm_and_si128(perm, _mm_set1_epi16(0x007F));
    const __m128i high = _mm_srli_epi16(_mm_and_si128(perm, _mm_set1_epi16(short(0xFF00))), 1);
    return _mm_or_si128(low, high);
}

inline __m128i four3b_lanes(__m128i in, uint8_t index) noexcept {
    const __m128i perm = _mm_shuffle_epi8(in, control16(index));
    const __m128i low = _mm_and_si128(perm, _mm_set1_epi32(0x0000007F));
    const __m128i mid = _mm_srli_epi32(_mm_and_si128(perm, _mm_set1_epi32(0x00007F00)), 1);
    const __m128i high = _mm_srli_epi32(_mm_and_si128(perm, _mm_set1_epi32(0x00FF0000)), 2);
    return _mm_or_si128(low, _mm_or_si128(mid, high));
}

// Two integers of up to five digits each, decoded simultaneously: clear the
// continuation bits, lay each half out as (b, c, d, e + a*2^8) in 16-bit
// lanes, multiply by (2^7, 2^6, 2^5, 2^4) so every digit's contribution
// splits across adjacent bytes, realign with byte shifts, and gather the even
// bytes as the two results (lanes 0 and 1; lanes 2 and 3 come out zero).
inline __m128i two5b_lanes(__m128i in, uint8_t index) noexcept {
    const __m128i cleared = _mm_and_si128(in, _mm_set1_epi8(0x7F));
    const __m128i laid = _mm_shuffle_epi8(cleared, control16(index));
    const __m128i isolated = _mm_srli_si128(laid, 7);
    const __m128i multiplied =
        _mm_mullo_epi16(laid, _mm_setr_epi16(128, 64, 32, 16, 128, 64, 32, 16));
    const __m128i shifted = _mm_slli_epi64(multiplied, 8);
    const __m128i combined = _mm_or_si128(_mm_or_si128(multiplied, shifted), isolated);
    const __m128i gather =
        _mm_setr_epi8(0, 2, 4, 6, 8, 10, 12, 14, -1, -1, -1, -1, -1, -1, -1, -1);
    return _mm_shuffle_epi8(combined, gather);
}

struct SimdOps {
    using Prefix = __m128i;

    static Prefix make_prefix(uint32_t prev) noexcept {
        return _mm_set1_epi32(static_cast<int>(prev));
    }
    static uint32_t prefix_last(const Prefix& p) noexcept {
        return static_cast<uint32_t>(_mm_extract_epi32(p, 3));
    }
    static void set_prefix(Prefix& p, uint32_t last) noexcept {
        p = _mm_set1_epi32(static_cast<int>(last));
    }
    static uint16_t movemask(const uint8_t* p) noexcept {
        return static_cast<uint16_t>(_mm_movemask_epi8(load16(p)));
    }

    static WindowStep window(const uint8_t* p, EntryTable::Entry e, uint32_t* out) noexcept {
        __m128i in = load16(p);
        if (e.index == EntryTable::kAllSingleIndex) {
            store16(out + 0, _mm_cvtepu8_epi32(in));
            in = _mm_srli_si128(in, 4);
            store16(out + 4, _mm_cvtepu8_epi32(in));
            in = _mm_srli_si128(in, 4);
            store16(out + 8, _mm_cvtepu8_epi32(in));
            return {12, 12};
        }
        if (e.index < 64) {
            const __m128i v16 = six2b_lanes(in, e.index);
            store16(out, _mm_cvtepu16_epi32(v16));
            store16(out + 4, _mm_cvtepu16_epi32(_mm_srli_si128(v16, 8)));
            return {e.consumed, 6};
        }
        if (e.index < 145) {
            store16(out, four3b_lanes(in, e.index));
            return {e.consumed, 4};
        }
        store16(out, two5b_lanes(in, e.index));
        return {e.consumed, 2};
    }

    static WindowStep window_delta(const uint8_t* p, EntryTable::Entry e, Prefix& prefix,
                                   uint32_t* out) noexcept {
        __m128i in = load16(p);
        if (e.index == EntryTable::kAllSingleIndex) {
            for (int r = 0; r < 3; ++r) {
                prefix = prefix4_lanes(prefix, _mm_cvtepu8_epi32(in));
                store16(out + 4 * r, prefix);
                in = _mm_srli_si128(in, 4);
            }
            return {12, 12};
        }
        if (e.index < 64) {
            const __m128i v16 = six2b_lanes(in, e.index);
            prefix = prefix4_lanes(prefix, _mm_cvtepu16_epi32(v16));
            store16(out, prefix);
            prefix = prefix2_lanes(prefix, _mm_cvtepu16_epi32(_mm_srli_si128(v16, 8)));
            store16(out + 4, prefix);
            return {e.consumed, 6};
        }
        if (e.index < 145) {
            prefix = prefix4_lanes(prefix, four3b_lanes(in, e.index));
            store16(out, prefix);
            return {e.consumed, 4};
        }
        prefix = prefix2_lanes(prefix, two5b_lanes(in, e.index));
        store16(out, prefix);
        return {e.consumed, 2};
    }
};

}  // namespace

WindowResult decode_window_simd(const uint8_t* window16, uint16_t mask12, uint32_t out[12]) {
    const EntryTable::Entry e = entry_table().entries[mask12 & 0x0FFF];
    if (e.index == EntryTable::kInvalidIndex) return {DecodeStatus::malformed, 0, 0};
    const WindowStep step = SimdOps::window(window16, e, out);
    return {DecodeStatus::ok, static_cast<uint8_t>(step.consumed),
            static_cast<uint8_t>(step.produced)};
}

DecodeResult decode_stream_simd(std::span<const uint8_t> in, std::size_t count, uint32_t* out,
                                const DecodeOptions& opt) {
    return stream_decode<SimdOps, false>(in, count, 0, out, opt);
}

DecodeResult decode_delta_stream_simd(std::span<const uint8_t> in, std::size_t count,
                                      uint32_t prev, uint32_t* out, const DecodeOptions& opt) {
    return stream_decode<SimdOps, true>(in, count, prev, out, opt);
}

}  // namespace mvb::detail

#endif  // x86
