#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>

namespace mvb {

inline constexpr int kWindowBytes = 12;
inline constexpr int kMaskBits = 12;
inline constexpr int kMaskTableSize = 1 << kMaskBits;  // 4096
inline constexpr int kControlCount = 170;              // 64 + 81 + 25

/// Greedy window classification. A window of 12 input bytes decodes as
/// twelve 1-byte integers, six integers of at most 2 bytes, four of at most
/// 3 bytes, or two of at most 5 bytes; `invalid` marks masks where one of the
/// required integers would exceed 5 bytes (impossible in a canonical 32-bit
/// stream).
enum class CaseKind : uint8_t { all_single, six_2b, four_3b, two_5b, invalid };

struct DecodeCase {
    CaseKind kind = CaseKind::invalid;
    std::array<uint8_t, 12> lengths{};  // first `produced` entries are set
    uint8_t consumed = 0;
    uint8_t produced = 0;
    int index = -1;  // control index in [0,170); -1 for all_single/invalid
};

/// bit k of the result = most significant bit of block16[k].
uint16_t extract_mask(const uint8_t* block16) noexcept;

/// Classifies a 12-bit continuation mask (bit 0 = first byte). The mask must
/// begin at an integer boundary; bits beyond bit 11 are ignored.
DecodeCase classify_mask(uint16_t mask12) noexcept;

/// Mixed-radix, little-endian control index:
///   six_2b :       sum (len_k - 1) * 2^k   -> [0,64)
///   four_3b: 64  + sum (len_k - 1) * 3^k   -> [64,145)
///   two_5b : 145 + (len_0-1) + 5*(len_1-1) -> [145,170)
/// Throws std::invalid_argument for lengths outside the kind's bounds.
uint8_t case_index(CaseKind kind, std::span<const uint8_t> lengths);

/// 4096-entry dispatch table keyed by window mask. `consumed` is the byte
/// count retired by the window; `index` selects a shuffle control, or one of
/// the two sentinels.
struct EntryTable {
    static constexpr uint8_t kAllSingleIndex = 0xFF;
    static constexpr uint8_t kInvalidIndex = 0xFE;
    struct Entry {
        uint8_t consumed;
        uint8_t index;
    };
    std::array<Entry, kMaskTableSize> entries;
};

/// 16-slot byte permutation. A slot is a source offset in [0,12) or
/// kZeroSlot, which yields a zero byte (the shuffle convention for -1).
struct ShuffleControl {
    static constexpr uint8_t kZeroSlot = 0xFF;
    std::array<uint8_t, 16> permutation;
};

struct ShuffleTable {
    std::array<ShuffleControl, kControlCount> controls;
};

EntryTable build_entry_table();
ShuffleTable build_shuffle_table();

/// Shared immutable tables, built on first use; concurrent reads are safe.
const EntryTable& entry_table();
const ShuffleTable& shuffle_table();

/// One line per mask (binary mask, kind, lengths, consumed, index), suitable
/// for golden-file diffing.
void dump_entry_table(std::ostream& os);

/// Constants the lane kernels apply to a permuted block, one set per case.
/// Masks select digit bytes; shifts realign each digit to its 7-bit position.
namespace lane_constants {
inline constexpr uint16_t six2b_low_mask = 0x007F;   // per 16-bit lane
inline constexpr uint16_t six2b_high_mask = 0xFF00;  // per 16-bit lane
inline constexpr int six2b_high_shift = 1;

inline constexpr uint32_t four3b_low_mask = 0x0000007F;   // per 32-bit lane
inline constexpr uint32_t four3b_mid_mask = 0x00007F00;   // per 32-bit lane
inline constexpr uint32_t four3b_high_mask = 0x00FF0000;  // per 32-bit lane
inline constexpr int four3b_mid_shift = 1;
inline constexpr int four3b_high_shift = 2;

/// two_5b clears continuation bits up front, then multiplies the four 16-bit
/// lanes of each half by (2^7, 2^6, 2^5, 2^4).
inline constexpr uint8_t two5b_clear_mask = 0x7F;
inline constexpr std::array<uint16_t, 4> two5b_multiplier = {128, 64, 32, 16};
}  // namespace lane_constants

}  // namespace mvb
