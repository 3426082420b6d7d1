#include "mvb/list_file.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

namespace mvb {

namespace {

void put_u32le(std::ostream& os, uint32_t v) {
    const uint8_t b[4] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8),
                          static_cast<uint8_t>(v >> 16), static_cast<uint8_t>(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

uint32_t get_u32le(std::istream& is) {
    uint8_t b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<uint32_t>(b[0]) | static_cast<uint32_t>(b[1]) << 8 |
           static_cast<uint32_t>(b[2]) << 16 | static_cast<uint32_t>(b[3]) << 24;
}

// Exactly `count` canonical integers covering exactly the whole payload:
// every integer 1..5 bytes, minimal length, fifth byte below 0x10.
bool payload_is_canonical(const std::vector<uint8_t>& bytes, uint32_t count) {
    std::size_t pos = 0;
    for (uint32_t i = 0; i < count; ++i) {
        std::size_t len = 1;
        while (pos + len <= bytes.size() && (bytes[pos + len - 1] & 0x80)) {
            ++len;
            if (len > kMaxEncodedBytes) return false;
        }
        if (pos + len > bytes.size()) return false;  // truncated integer
        const uint8_t last = bytes[pos + len - 1];
        if (len == kMaxEncodedBytes && last >= 0x10) return false;
        if (len > 1 && last == 0) return false;  // non-minimal
        pos += len;
    }
    return pos == bytes.size();
}

}  // namespace

std::size_t write_list(std::ostream& sink, const EncodedBuffer& buf) {
    if (buf.bytes.size() > std::numeric_limits<uint32_t>::max())
        throw ListFileError("write_list: payload exceeds 32-bit length");
    sink.write(reinterpret_cast<const char*>(kListMagic.data()), kListMagic.size());
    put_u32le(sink, buf.delta_coded ? 1u : 0u);
    put_u32le(sink, buf.count);
    put_u32le(sink, static_cast<uint32_t>(buf.bytes.size()));
    sink.write(reinterpret_cast<const char*>(buf.bytes.data()),
               static_cast<std::streamsize>(buf.bytes.size()));
    if (!sink) throw ListFileError("write_list: sink write failure");
    return kListHeaderBytes + buf.bytes.size();
}

std::size_t write_list_file(const std::filesystem::path& path, const EncodedBuffer& buf) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw ListFileError("write_list: cannot open " + path.string());
    const std::size_t n = write_list(os, buf);
    os.flush();
    if (!os) throw ListFileError("write_list: write failure on " + path.string());
    return n;
}

EncodedBuffer read_list(std::istream& source, bool validate_payload) {
    std::array<uint8_t, 4> magic{};
    source.read(reinterpret_cast<char*>(magic.data()), magic.size());
    if (!source || magic != kListMagic) throw ListFileError("read_list: bad magic");

    const uint32_t flags = get_u32le(source);
    const uint32_t count = get_u32le(source);
    const uint32_t payload_len = get_u32le(source);
    if (!source) throw ListFileError("read_list: truncated header");

    EncodedBuffer buf;
    buf.delta_coded = (flags & 1u) != 0;
    buf.count = count;
    buf.bytes.resize(payload_len);
    source.read(reinterpret_cast<char*>(buf.bytes.data()),
                static_cast<std::streamsize>(payload_len));
    if (source.gcount() != static_cast<std::streamsize>(payload_len))
        throw ListFileError("read_list: truncated payload");

    if (validate_payload && !payload_is_canonical(buf.bytes, count))
        throw ListFileError("read_list: payload is not " + std::to_string(count) +
                            " canonical integers");
    return buf;
}

EncodedBuffer read_list_file(const std::filesystem::path& path, bool validate_payload) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ListFileError("read_list: cannot open " + path.string());
    return read_list(is, validate_payload);
}

}  // namespace mvb
