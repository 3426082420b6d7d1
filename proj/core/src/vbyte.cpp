#include "mvb/vbyte.hpp"

#include <stdexcept>

#include "internal.hpp"

namespace mvb {

std::size_t encoded_size(uint32_t x) noexcept {
    if (x < (1u << 7)) return 1;
    if (x < (1u << 14)) return 2;
    if (x < (1u << 21)) return 3;
    if (x < (1u << 28)) return 4;
    return 5;
}

std::size_t encode_one(uint32_t x, uint8_t* out) noexcept {
    std::size_t n = 0;
    while (x >= 0x80) {
        out[n++] = static_cast<uint8_t>(x | 0x80);
        x >>= 7;
    }
    out[n++] = static_cast<uint8_t>(x);
    return n;
}

void encode_one(uint32_t x, std::vector<uint8_t>& out) {
    uint8_t buf[kMaxEncodedBytes];
    const std::size_t n = encode_one(x, buf);
    out.insert(out.end(), buf, buf + n);
}

EncodedBuffer encode_sequence(std::span<const uint32_t> values) {
    EncodedBuffer buf;
    buf.count = static_cast<uint32_t>(values.size());
    buf.bytes.reserve(values.size());  // >= one byte per value
    for (uint32_t v : values) encode_one(v, buf.bytes);
    return buf;
}

EncodedBuffer encode_deltas(std::span<const uint32_t> sorted_values) {
    EncodedBuffer buf = encode_sequence(delta_encode(sorted_values));
    buf.delta_coded = true;
    return buf;
}

DecodeResult decode_scalar(std::span<const uint8_t> in, std::size_t count, uint32_t* out,
                           DecodeMode mode) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const detail::ScalarOne one = detail::scalar_decode_one(in.data() + pos, in.size() - pos, mode);
        if (one.status != DecodeStatus::ok) return {one.status, i, pos};
        out[i] = one.value;
        pos += one.consumed;
    }
    return {DecodeStatus::ok, count, pos};
}

DecodeResult decode_scalar(const EncodedBuffer& buf, uint32_t* out, DecodeMode mode) {
    return decode_scalar(buf.bytes, buf.count, out, mode);
}

DecodeResult decode_delta_scalar(std::span<const uint8_t> in, std::size_t count, uint32_t prev,
                                 uint32_t* out, DecodeMode mode) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const detail::ScalarOne one = detail::scalar_decode_one(in.data() + pos, in.size() - pos, mode);
        if (one.status != DecodeStatus::ok) return {one.status, i, pos};
        prev += one.value;
        out[i] = prev;
        pos += one.consumed;
    }
    return {DecodeStatus::ok, count, pos};
}

std::vector<uint32_t> delta_encode(std::span<const uint32_t> values) {
    std::vector<uint32_t> gaps(values.size());
    uint32_t prev = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < prev)
            throw std::invalid_argument("delta_encode: input decreases at index " + std::to_string(i));
        gaps[i] = values[i] - prev;
        prev = values[i];
    }
    return gaps;
}

void prefix_sum_scalar(std::span<const uint32_t> gaps, uint32_t prev, uint32_t* out) noexcept {
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        prev += gaps[i];
        out[i] = prev;
    }
}

std::vector<uint32_t> prefix_sum_scalar(std::span<const uint32_t> gaps, uint32_t prev) {
    std::vector<uint32_t> out(gaps.size());
    prefix_sum_scalar(gaps, prev, out.data());
    return out;
}

}  // namespace mvb
