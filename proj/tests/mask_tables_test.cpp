#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "mvb/decode.hpp"
#include "mvb/mask_tables.hpp"
#include "mvb/vbyte.hpp"

using namespace mvb;

namespace {

// Independent classification oracle: compute the byte length of every
// integer that terminates inside the 12-bit window (a run reaching the edge
// gets a too-long sentinel), then apply the greedy case rules verbatim.
struct OracleCase {
    CaseKind kind;
    std::vector<int> lengths;
    int consumed;
};

OracleCase oracle_classify(uint16_t mask) {
    mask &= 0x0FFF;
    if (mask == 0) return {CaseKind::all_single, std::vector<int>(12, 1), 12};

    constexpr int kTooLong = 99;
    std::vector<int> lens;
    int p = 0;
    while (p < 12 && lens.size() < 6) {
        int run = 0;
        while (p + run < 12 && ((mask >> (p + run)) & 1)) ++run;
        if (p + run >= 12) {
            lens.push_back(kTooLong);  // does not terminate inside the window
            break;
        }
        lens.push_back(run >= 5 ? kTooLong : run + 1);
        p += run + 1;
    }
    while (lens.size() < 6) lens.push_back(kTooLong);

    const auto first_within = [&](int n, int max_len) {
        for (int i = 0; i < n; ++i)
            if (lens[i] > max_len) return false;
        return true;
    };
    const auto take = [&](CaseKind kind, int n) {
        std::vector<int> taken(lens.begin(), lens.begin() + n);
        int consumed = 0;
        for (int l : taken) consumed += l;
        return OracleCase{kind, taken, consumed};
    };
    if (first_within(6, 2)) return take(CaseKind::six_2b, 6);
    if (first_within(4, 3)) return take(CaseKind::four_3b, 4);
    if (first_within(2, 5)) return take(CaseKind::two_5b, 2);
    return {CaseKind::invalid, {}, 0};
}

int oracle_index(const OracleCase& oc) {
    switch (oc.kind) {
        case CaseKind::six_2b: {
            int v = 0;
            for (int k = 0; k < 6; ++k) v += (oc.lengths[k] - 1) << k;
            return v;
        }
        case CaseKind::four_3b: {
            int v = 0, radix = 1;
            for (int k = 0; k < 4; ++k, radix *= 3) v += (oc.lengths[k] - 1) * radix;
            return 64 + v;
        }
        case CaseKind::two_5b:
            return 145 + (oc.lengths[0] - 1) + 5 * (oc.lengths[1] - 1);
        default:
            return -1;
    }
}

}  // namespace

TEST_CASE("extract_mask gathers high bits lsb-first") {
    uint8_t all_high[16];
    std::fill(std::begin(all_high), std::end(all_high), 0x80);
    CHECK(extract_mask(all_high) == 0xFFFF);

    uint8_t all_low[16] = {};
    CHECK(extract_mask(all_low) == 0x0000);

    uint8_t fig1[16] = {0x80, 0x01, 0x82, 0x03, 0x10, 0x20};
    CHECK(extract_mask(fig1) == 0b0000000101);
}

TEST_CASE("classify_mask on the documented masks") {
    const DecodeCase zero = classify_mask(0);
    CHECK(zero.kind == CaseKind::all_single);
    CHECK(zero.consumed == 12);
    CHECK(zero.produced == 12);

    const DecodeCase six = classify_mask(0b000000000101);
    CHECK(six.kind == CaseKind::six_2b);
    CHECK(six.consumed == 8);
    CHECK(six.produced == 6);
    CHECK(six.lengths[0] == 2);
    CHECK(six.lengths[1] == 2);
    CHECK(six.lengths[2] == 1);
    CHECK(six.lengths[5] == 1);
    CHECK(six.index == 3);

    const DecodeCase two = classify_mask(0b000000000111);
    CHECK(two.kind == CaseKind::two_5b);
    CHECK(two.produced == 2);
    CHECK(two.lengths[0] == 4);
    CHECK(two.lengths[1] == 1);
    CHECK(two.consumed == 5);

    CHECK(classify_mask(0b000000011111).kind == CaseKind::invalid);
}

TEST_CASE("case_index bijection endpoints and errors") {
    const uint8_t six_min[] = {1, 1, 1, 1, 1, 1};
    const uint8_t six_max[] = {2, 2, 2, 2, 2, 2};
    CHECK(case_index(CaseKind::six_2b, six_min) == 0);
    CHECK(case_index(CaseKind::six_2b, six_max) == 63);

    const uint8_t four_min[] = {1, 1, 1, 1};
    const uint8_t four_max[] = {3, 3, 3, 3};
    CHECK(case_index(CaseKind::four_3b, four_min) == 64);
    CHECK(case_index(CaseKind::four_3b, four_max) == 144);

    const uint8_t two_min[] = {1, 1};
    const uint8_t two_max[] = {5, 5};
    CHECK(case_index(CaseKind::two_5b, two_min) == 145);
    CHECK(case_index(CaseKind::two_5b, two_max) == 169);

    const uint8_t bad[] = {3, 1, 1, 1, 1, 1};
    CHECK_THROWS_AS((void)case_index(CaseKind::six_2b, bad), std::invalid_argument);
    CHECK_THROWS_AS((void)case_index(CaseKind::all_single, two_min), std::invalid_argument);
}

TEST_CASE("entry table agrees with the oracle on all 4096 masks") {
    const EntryTable table = build_entry_table();
    int populations[5] = {};
    int min_consumed = 99, max_consumed = 0;

    for (int m = 0; m < kMaskTableSize; ++m) {
        const OracleCase oc = oracle_classify(static_cast<uint16_t>(m));
        const DecodeCase dc = classify_mask(static_cast<uint16_t>(m));
        const EntryTable::Entry e = table.entries[m];
        CAPTURE(m);

        ++populations[static_cast<int>(oc.kind)];
        REQUIRE(dc.kind == oc.kind);
        switch (oc.kind) {
            case CaseKind::all_single:
                CHECK(e.index == EntryTable::kAllSingleIndex);
                CHECK(e.consumed == 12);
                break;
            case CaseKind::invalid:
                CHECK(e.index == EntryTable::kInvalidIndex);
                break;
            default: {
                REQUIRE(dc.consumed == oc.consumed);
                REQUIRE(e.consumed == oc.consumed);
                REQUIRE(e.index == oracle_index(oc));
                for (std::size_t i = 0; i < oc.lengths.size(); ++i)
                    CHECK(dc.lengths[i] == oc.lengths[i]);
                if (oc.kind != CaseKind::all_single) {
                    min_consumed = std::min(min_consumed, oc.consumed);
                    max_consumed = std::max(max_consumed, oc.consumed);
                }
                // Index range per kind.
                if (oc.kind == CaseKind::six_2b) CHECK(e.index < 64);
                if (oc.kind == CaseKind::four_3b) {
                    CHECK(e.index >= 64);
                    CHECK(e.index < 145);
                }
                if (oc.kind == CaseKind::two_5b) {
                    CHECK(e.index >= 145);
                    CHECK(e.index < 170);
                }
                break;
            }
        }
    }

    CHECK(populations[static_cast<int>(CaseKind::all_single)] == 1);
    CHECK(populations[0] + populations[1] + populations[2] + populations[3] + populations[4] ==
          kMaskTableSize);
    // Shuffled windows retire between 2 and 12 bytes.
    CHECK(min_consumed == 2);
    CHECK(max_consumed == 12);

    // Fixed spot value: mask 0b101 dispatches to six_2b control 3, 8 bytes.
    CHECK(table.entries[0b101].consumed == 8);
    CHECK(table.entries[0b101].index == 3);
}

TEST_CASE("every control index is reachable from some mask") {
    const EntryTable table = build_entry_table();
    std::set<int> seen;
    for (const EntryTable::Entry& e : table.entries)
        if (e.index < kControlCount) seen.insert(e.index);

    int six = 0, four = 0, two = 0;
    for (int i : seen) {
        if (i < 64)
            ++six;
        else if (i < 145)
            ++four;
        else
            ++two;
    }
    CHECK(six == 64);
    CHECK(four == 81);
    CHECK(two == 25);
}

TEST_CASE("shuffle controls for the documented indexes") {
    const ShuffleTable st = build_shuffle_table();
    constexpr uint8_t Z = ShuffleControl::kZeroSlot;

    // All six integers one byte: sources 0..5 at even slots, zeros elsewhere.
    const std::array<uint8_t, 16> all_one = {0, Z, 1, Z, 2, Z, 3, Z, 4, Z, 5, Z, Z, Z, Z, Z};
    CHECK(st.controls[0].permutation == all_one);

    // All six integers two bytes: identity over the 12 window bytes.
    const std::array<uint8_t, 16> all_two = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, Z, Z, Z, Z};
    CHECK(st.controls[63].permutation == all_two);

    // Every slot either zero or inside the consumed prefix.
    const EntryTable et = build_entry_table();
    std::vector<int> consumed_by_index(kControlCount, -1);
    for (const EntryTable::Entry& e : et.entries)
        if (e.index < kControlCount)
            consumed_by_index[e.index] = e.consumed;
    for (int i = 0; i < kControlCount; ++i) {
        if (consumed_by_index[i] < 0) continue;
        for (uint8_t slot : st.controls[i].permutation) {
            if (slot == Z) continue;
            CHECK(slot < consumed_by_index[i]);
        }
    }
}

TEST_CASE("table construction is deterministic") {
    const EntryTable a = build_entry_table();
    const EntryTable b = build_entry_table();
    for (int m = 0; m < kMaskTableSize; ++m) {
        CHECK(a.entries[m].consumed == b.entries[m].consumed);
        CHECK(a.entries[m].index == b.entries[m].index);
    }
    const ShuffleTable sa = build_shuffle_table();
    const ShuffleTable sb = build_shuffle_table();
    for (int i = 0; i < kControlCount; ++i) CHECK(sa.controls[i].permutation == sb.controls[i].permutation);

    std::ostringstream da, db;
    dump_entry_table(da);
    dump_entry_table(db);
    const std::string dump = da.str();
    CHECK(dump == db.str());
    CHECK(std::count(dump.begin(), dump.end(), '\n') == kMaskTableSize);
}

TEST_CASE("controls compose with kernels to match scalar decode at byte extremes") {
    const EntryTable& et = entry_table();
    const ShuffleTable& st = shuffle_table();
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coin(0, 1);

    for (int m = 1; m < kMaskTableSize; ++m) {
        const EntryTable::Entry e = et.entries[m];
        if (e.index >= kControlCount) continue;

        // Continuation positions draw from {0x80, 0xFF}, terminators from
        // {0x00, 0x7F}; a canonical fifth byte stays below 0x10.
        const DecodeCase dc = classify_mask(static_cast<uint16_t>(m));
        for (int round = 0; round < 4; ++round) {
            uint8_t window[16] = {};
            int pos = 0;
            for (int i = 0; i < dc.produced; ++i) {
                for (int j = 0; j < dc.lengths[i]; ++j, ++pos) {
                    const bool last = j == dc.lengths[i] - 1;
                    if (!last)
                        window[pos] = coin(rng) ? 0xFF : 0x80;
                    else if (dc.lengths[i] == 5)
                        window[pos] = coin(rng) ? 0x0F : 0x00;
                    else
                        window[pos] = coin(rng) ? 0x7F : 0x00;
                }
            }

            uint32_t expect[12];
            REQUIRE(decode_scalar(std::span<const uint8_t>(window, 16), dc.produced, expect)
                        .status == DecodeStatus::ok);

            uint32_t got[12];
            const WindowResult wr =
                decode_window(window, static_cast<uint16_t>(m), got, DecodePath::portable);
            REQUIRE(wr.status == DecodeStatus::ok);
            REQUIRE(wr.consumed == dc.consumed);
            REQUIRE(wr.produced == dc.produced);
            for (int i = 0; i < dc.produced; ++i) {
                CAPTURE(m);
                CAPTURE(st.controls[e.index].permutation[0]);
                REQUIRE(got[i] == expect[i]);
            }
        }
    }
}
