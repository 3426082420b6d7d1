#include "mvb/mask_tables.hpp"

#include <bitset>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mvb {

namespace {

// Length of the integer starting at `bit`, by walking continuation bits.
// Returns 0 if the run of 1-bits reaches 5 (the integer would exceed the
// 5-byte maximum). Bits at and above kMaskBits read as 0.
int integer_length_at(uint16_t mask, int bit) noexcept {
    int len = 1;
    while ((mask >> bit) & 1) {
        ++len;
        ++bit;
        if (len > 5) return 0;
    }
    return len;
}

}  // namespace

uint16_t extract_mask(const uint8_t* block16) noexcept {
    uint16_t m = 0;
    for (int i = 0; i < 16; ++i) m |= static_cast<uint16_t>(block16[i] >> 7) << i;
    return m;
}

DecodeCase classify_mask(uint16_t mask12) noexcept {
    const uint16_t m = mask12 & 0x0FFF;
    DecodeCase dc;
    if (m == 0) {
        dc.kind = CaseKind::all_single;
        dc.lengths.fill(1);
        dc.consumed = 12;
        dc.produced = 12;
        return dc;
    }

    // Walk up to the first six integers; 0 marks "longer than 5 bytes" and
    // anything unwalked stays 0, which fails every per-case length test.
    std::array<int, 6> len{};
    int pos = 0;
    for (int i = 0; i < 6 && pos < kMaskBits; ++i) {
        len[i] = integer_length_at(m, pos);
        if (len[i] == 0) break;
        pos += len[i];
    }

    const auto all_within = [&len](int n, int max_len) {
        for (int i = 0; i < n; ++i)
            if (len[i] < 1 || len[i] > max_len) return false;
        return true;
    };
    const auto fill = [&](CaseKind kind, int n) {
        dc.kind = kind;
        dc.produced = static_cast<uint8_t>(n);
        int consumed = 0;
        for (int i = 0; i < n; ++i) {
            dc.lengths[i] = static_cast<uint8_t>(len[i]);
            consumed += len[i];
        }
        dc.consumed = static_cast<uint8_t>(consumed);
        dc.index = case_index(kind, std::span<const uint8_t>(dc.lengths.data(), n));
    };

    if (all_within(6, 2)) {
        fill(CaseKind::six_2b, 6);
    } else if (all_within(4, 3)) {
        fill(CaseKind::four_3b, 4);
    } else if (all_within(2, 5)) {
        fill(CaseKind::two_5b, 2);
    }
    return dc;  // default-initialized = invalid
}

uint8_t case_index(CaseKind kind, std::span<const uint8_t> lengths) {
    const auto check = [&](std::size_t n, int max_len) {
        if (lengths.size() != n)
            throw std::invalid_argument("case_index: expected " + std::to_string(n) + " lengths");
        for (uint8_t l : lengths)
            if (l < 1 || l > max_len) throw std::invalid_argument("case_index: length out of range");
    };
    switch (kind) {
        case CaseKind::six_2b: {
            check(6, 2);
            int v = 0;
            for (int k = 0; k < 6; ++k) v += (lengths[k] - 1) << k;
            return static_cast<uint8_t>(v);
        }
        case CaseKind::four_3b: {
            check(4, 3);
            int v = 0, radix = 1;
            for (int k = 0; k < 4; ++k, radix *= 3) v += (lengths[k] - 1) * radix;
            return static_cast<uint8_t>(64 + v);
        }
        case CaseKind::two_5b: {
            check(2, 5);
            return static_cast<uint8_t>(145 + (lengths[0] - 1) + 5 * (lengths[1] - 1));
        }
        default:
            throw std::invalid_argument("case_index: kind has no control index");
    }
}

EntryTable build_entry_table() {
    EntryTable table;
    for (int m = 0; m < kMaskTableSize; ++m) {
        const DecodeCase dc = classify_mask(static_cast<uint16_t>(m));
        EntryTable::Entry& e = table.entries[m];
        switch (dc.kind) {
            case CaseKind::all_single:
                e = {12, EntryTable::kAllSingleIndex};
                break;
            case CaseKind::invalid:
                e = {0, EntryTable::kInvalidIndex};
                break;
            default:
                e = {dc.consumed, static_cast<uint8_t>(dc.index)};
                break;
        }
    }
    return table;
}

namespace {

// Inverse of case_index: lengths encoded by control index i.
void lengths_for_index(int i, CaseKind& kind, std::array<uint8_t, 6>& len, int& n) {
    if (i < 64) {
        kind = CaseKind::six_2b;
        n = 6;
        for (int k = 0; k < 6; ++k) len[k] = static_cast<uint8_t>(((i >> k) & 1) + 1);
    } else if (i < 145) {
        kind = CaseKind::four_3b;
        n = 4;
        int j = i - 64;
        for (int k = 0; k < 4; ++k, j /= 3) len[k] = static_cast<uint8_t>(j % 3 + 1);
    } else {
        kind = CaseKind::two_5b;
        n = 2;
        const int j = i - 145;
        len[0] = static_cast<uint8_t>(j % 5 + 1);
        len[1] = static_cast<uint8_t>(j / 5 + 1);
    }
}

ShuffleControl control_for(CaseKind kind, std::span<const uint8_t> len) {
    ShuffleControl c;
    c.permutation.fill(ShuffleControl::kZeroSlot);
    int src = 0;
    switch (kind) {
        case CaseKind::six_2b:
            // Low bytes at even slots, high bytes (when present) at odd slots.
            for (int k = 0; k < 6; ++k) {
                c.permutation[2 * k] = static_cast<uint8_t>(src);
                if (len[k] == 2) c.permutation[2 * k + 1] = static_cast<uint8_t>(src + 1);
                src += len[k];
            }
            break;
        case CaseKind::four_3b:
            // (low, mid, high, zero) per 32-bit lane; missing bytes stay zero.
            for (int k = 0; k < 4; ++k) {
                for (int j = 0; j < len[k]; ++j)
                    c.permutation[4 * k + j] = static_cast<uint8_t>(src + j);
                src += len[k];
            }
            break;
        case CaseKind::two_5b:
            // Per half: (b, 0, c, 0, d, 0, e, a) so the 16-bit lanes read
            // (b, c, d, e + a*2^8); missing digits stay zero.
            for (int h = 0; h < 2; ++h) {
                const int base = 8 * h;
                if (len[h] > 1) c.permutation[base + 0] = static_cast<uint8_t>(src + 1);
                if (len[h] > 2) c.permutation[base + 2] = static_cast<uint8_t>(src + 2);
                if (len[h] > 3) c.permutation[base + 4] = static_cast<uint8_t>(src + 3);
                if (len[h] > 4) c.permutation[base + 6] = static_cast<uint8_t>(src + 4);
                c.permutation[base + 7] = static_cast<uint8_t>(src);
                src += len[h];
            }
            break;
        default:
            break;
    }
    return c;
}

}  // namespace

ShuffleTable build_shuffle_table() {
    ShuffleTable table;
    for (int i = 0; i < kControlCount; ++i) {
        CaseKind kind;
        std::array<uint8_t, 6> len{};
        int n = 0;
        lengths_for_index(i, kind, len, n);
        table.controls[i] = control_for(kind, std::span<const uint8_t>(len.data(), n));
    }
    return table;
}

const EntryTable& entry_table() {
    static const EntryTable table = build_entry_table();
    return table;
}

const ShuffleTable& shuffle_table() {
    static const ShuffleTable table = build_shuffle_table();
    return table;
}

void dump_entry_table(std::ostream& os) {
    static constexpr const char* kKindNames[] = {"all_single", "six_2b", "four_3b", "two_5b",
                                                 "invalid"};
    for (int m = 0; m < kMaskTableSize; ++m) {
        const DecodeCase dc = classify_mask(static_cast<uint16_t>(m));
        os << "0b" << std::bitset<kMaskBits>(static_cast<unsigned>(m)) << ' '
           << kKindNames[static_cast<int>(dc.kind)];
        if (dc.kind == CaseKind::invalid) {
            os << " lengths=- consumed=- index=-\n";
            continue;
        }
        os << " lengths=";
        for (int i = 0; i < dc.produced; ++i) {
            if (i) os << ',';
            os << static_cast<int>(dc.lengths[i]);
        }
        os << " consumed=" << static_cast<int>(dc.consumed) << " index=";
        if (dc.index < 0)
            os << '-';
        else
            os << dc.index;
        os << '\n';
    }
}

}  // namespace mvb
