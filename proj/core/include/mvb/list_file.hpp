#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>

#include "mvb/vbyte.hpp"

namespace mvb {

// On-disk container for one encoded list. All header fields little-endian:
//   magic "MVB1" | flags u32 (bit 0 = delta-coded) | count u32 | payload_len u32
// followed by payload_len payload bytes.
inline constexpr std::array<uint8_t, 4> kListMagic = {'M', 'V', 'B', '1'};
inline constexpr std::size_t kListHeaderBytes = 16;

class ListFileError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Writes buf as a ListFile; returns total bytes written (header + payload).
/// Throws ListFileError on sink failure or payload over 2^32-1 bytes.
std::size_t write_list(std::ostream& sink, const EncodedBuffer& buf);
std::size_t write_list_file(const std::filesystem::path& path, const EncodedBuffer& buf);

/// Reads a ListFile back. Throws ListFileError on bad magic, short payload,
/// or (with validate_payload) payload bytes that are not exactly `count`
/// canonical integers spanning exactly payload_len bytes.
EncodedBuffer read_list(std::istream& source, bool validate_payload = true);
EncodedBuffer read_list_file(const std::filesystem::path& path, bool validate_payload = true);

}  // namespace mvb
