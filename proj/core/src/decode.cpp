#include "mvb/decode.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mvb {

namespace detail {

WindowResult decode_window_portable(const uint8_t* window16, uint16_t mask12, uint32_t out[12]);
DecodeResult decode_stream_portable(std::span<const uint8_t> in, std::size_t count, uint32_t* out,
                                    const DecodeOptions& opt);
DecodeResult decode_delta_stream_portable(std::span<const uint8_t> in, std::size_t count,
                                          uint32_t prev, uint32_t* out, const DecodeOptions& opt);

#if MVB_X86_SIMD
WindowResult decode_window_simd(const uint8_t* window16, uint16_t mask12, uint32_t out[12]);
DecodeResult decode_stream_simd(std::span<const uint8_t> in, std::size_t count, uint32_t* out,
                                const DecodeOptions& opt);
DecodeResult decode_delta_stream_simd(std::span<const uint8_t> in, std::size_t count,
                                      uint32_t prev, uint32_t* out, const DecodeOptions& opt);
#endif

}  // namespace detail

bool vector_path_available() noexcept {
#if MVB_X86_SIMD
    return __builtin_cpu_supports("ssse3") && __builtin_cpu_supports("sse4.1");
#else
    return false;
#endif
}

namespace {

DecodePath env_path() {
    static const DecodePath cached = [] {
        const char* s = std::getenv("MVB_DECODE_PATH");
        if (s == nullptr) return DecodePath::auto_select;
        std::string v(s);
        for (char& c : v) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (v == "portable") return DecodePath::portable;
        if (v == "vector") return DecodePath::vector;
        return DecodePath::auto_select;  // "auto" and anything unrecognized
    }();
    return cached;
}

DecodePath resolve_path(DecodePath requested) {
    DecodePath p = requested == DecodePath::auto_select ? env_path() : requested;
    if (p == DecodePath::auto_select)
        p = vector_path_available() ? DecodePath::vector : DecodePath::portable;
    if (p == DecodePath::vector && !vector_path_available())
        throw std::runtime_error("mvb: vector decode path forced but unavailable on this host");
    return p;
}

}  // namespace

WindowResult decode_window(const uint8_t* window16, uint16_t mask12, uint32_t out[12],
                           DecodePath path) {
#if MVB_X86_SIMD
    if (resolve_path(path) == DecodePath::vector)
        return detail::decode_window_simd(window16, mask12, out);
#else
    resolve_path(path);
#endif
    return detail::decode_window_portable(window16, mask12, out);
}

DecodeResult decode_stream(std::span<const uint8_t> in, std::size_t count, uint32_t* out,
                           const DecodeOptions& options) {
#if MVB_X86_SIMD
    if (resolve_path(options.path) == DecodePath::vector)
        return detail::decode_stream_simd(in, count, out, options);
#else
    resolve_path(options.path);
#endif
    return detail::decode_stream_portable(in, count, out, options);
}

DecodeResult decode_stream(const EncodedBuffer& buf, uint32_t* out, const DecodeOptions& options) {
    return decode_stream(buf.bytes, buf.count, out, options);
}

DecodeResult decode_delta_stream(std::span<const uint8_t> in, std::size_t count, uint32_t prev,
                                 uint32_t* out, const DecodeOptions& options) {
#if MVB_X86_SIMD
    if (resolve_path(options.path) == DecodePath::vector)
        return detail::decode_delta_stream_simd(in, count, prev, out, options);
#else
    resolve_path(options.path);
#endif
    return detail::decode_delta_stream_portable(in, count, prev, out, options);
}

DecodeResult decode_delta_stream(const EncodedBuffer& buf, uint32_t prev, uint32_t* out,
                                 const DecodeOptions& options) {
    return decode_delta_stream(buf.bytes, buf.count, prev, out, options);
}

}  // namespace mvb
