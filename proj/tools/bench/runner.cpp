#include "runner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

namespace mvb::bench {

namespace {

using Clock = std::chrono::steady_clock;

struct Scheme {
    std::string name;
    DecodeOptions options;
};

Scheme make_scheme(const std::string& name) {
    if (name == "scalar") return {name, {}};
    if (name == "masked") return {name, {}};
    if (name == "masked-portable") return {name, {.path = DecodePath::portable}};
    throw std::invalid_argument("unknown scheme: " + name);
}

// Decodes one list (gaps -> absolute values). L1 mode walks the stream in
// buffer-sized chunks, carrying the running prefix across chunks.
void decode_list(const Scheme& scheme, const EncodedBuffer& list, BufferMode mode,
                 uint32_t* buffer, std::size_t buffer_ints) {
    if (scheme.name == "scalar") {
        if (mode == BufferMode::full) {
            decode_delta_scalar(list.bytes, list.count, 0, buffer);
            return;
        }
        std::size_t done = 0, offset = 0;
        uint32_t prev = 0;
        while (done < list.count) {
            const std::size_t n = std::min<std::size_t>(buffer_ints, list.count - done);
            const DecodeResult r = decode_delta_scalar(
                std::span(list.bytes).subspan(offset), n, prev, buffer);
            offset += r.bytes_consumed;
            prev = buffer[n - 1];
            done += n;
        }
        return;
    }
    if (mode == BufferMode::full) {
        decode_delta_stream(list.bytes, list.count, 0, buffer, scheme.options);
        return;
    }
    std::size_t done = 0, offset = 0;
    uint32_t prev = 0;
    while (done < list.count) {
        const std::size_t n = std::min<std::size_t>(buffer_ints, list.count - done);
        const DecodeResult r = decode_delta_stream(std::span(list.bytes).subspan(offset), n, prev,
                                                   buffer, scheme.options);
        offset += r.bytes_consumed;
        prev = buffer[n - 1];
        done += n;
    }
}

uint64_t fnv1a(const uint32_t* data, std::size_t n, uint64_t hash) {
    for (std::size_t i = 0; i < n; ++i) {
        uint32_t v = data[i];
        for (int b = 0; b < 4; ++b, v >>= 8) {
            hash ^= v & 0xFF;
            hash *= 0x100000001B3ull;
        }
    }
    return hash;
}

// Checksum of a full decode under the given scheme and buffer mode.
uint64_t decode_checksum(const Scheme& scheme, const EncodedBuffer& list, BufferMode mode,
                         std::vector<uint32_t>& buffer, std::size_t buffer_ints) {
    uint64_t hash = 0xCBF29CE484222325ull;
    if (mode == BufferMode::full) {
        decode_list(scheme, list, mode, buffer.data(), buffer_ints);
        return fnv1a(buffer.data(), list.count, hash);
    }
    std::size_t done = 0, offset = 0;
    uint32_t prev = 0;
    while (done < list.count) {
        const std::size_t n = std::min<std::size_t>(buffer_ints, list.count - done);
        DecodeResult r;
        if (scheme.name == "scalar")
            r = decode_delta_scalar(std::span(list.bytes).subspan(offset), n, prev, buffer.data());
        else
            r = decode_delta_stream(std::span(list.bytes).subspan(offset), n, prev, buffer.data(),
                                    scheme.options);
        hash = fnv1a(buffer.data(), n, hash);
        offset += r.bytes_consumed;
        prev = buffer[n - 1];
        done += n;
    }
    return hash;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

const char* to_string(BufferMode mode) noexcept {
    return mode == BufferMode::l1 ? "l1" : "full";
}

GroupData prepare_group(int k, const std::vector<std::vector<uint32_t>>& lists) {
    GroupData group;
    group.k = k;
    group.lists.reserve(lists.size());
    for (const auto& list : lists) {
        EncodedBuffer buf = encode_deltas(list);
        group.total_ints += buf.count;
        group.total_bytes += buf.bytes.size();
        group.lists.push_back(std::move(buf));
    }
    return group;
}

std::vector<BenchResult> run_benchmark(const WorkloadSpec& spec, const BenchConfig& config) {
    std::vector<GroupData> groups;
    for (int k = spec.k_min; k <= spec.k_max; ++k)
        groups.push_back(prepare_group(k, generate_group(spec, k)));
    return run_benchmark(groups, config);
}

std::vector<BenchResult> run_benchmark(const std::vector<GroupData>& groups,
                                       const BenchConfig& config) {
    std::vector<Scheme> schemes;
    schemes.reserve(config.schemes.size());
    for (const auto& name : config.schemes) schemes.push_back(make_scheme(name));

    const int reps = std::max(config.repetitions, 3);
    std::vector<BenchResult> results;

    for (const GroupData& group : groups) {
        std::size_t max_count = config.buffer_ints;
        for (const auto& list : group.lists)
            max_count = std::max<std::size_t>(max_count, list.count);
        std::vector<uint32_t> buffer(max_count);

        // Correctness gate before any timing: every scheme must reproduce the
        // scalar reference in both buffer modes.
        std::vector<uint64_t> reference(group.lists.size());
        const Scheme scalar = make_scheme("scalar");
        for (std::size_t i = 0; i < group.lists.size(); ++i)
            reference[i] = decode_checksum(scalar, group.lists[i], BufferMode::full, buffer,
                                           config.buffer_ints);
        for (const Scheme& scheme : schemes) {
            for (std::size_t i = 0; i < group.lists.size(); ++i) {
                for (BufferMode mode : {BufferMode::l1, BufferMode::full}) {
                    const uint64_t h =
                        decode_checksum(scheme, group.lists[i], mode, buffer, config.buffer_ints);
                    if (h != reference[i])
                        throw std::runtime_error("decode mismatch: scheme " + scheme.name +
                                                 ", group K=" + std::to_string(group.k) +
                                                 ", list " + std::to_string(i));
                }
            }
        }

        for (const Scheme& scheme : schemes) {
            const auto one_pass = [&] {
                for (const auto& list : group.lists)
                    decode_list(scheme, list, config.buffer_mode, buffer.data(),
                                config.buffer_ints);
            };

            one_pass();  // warmup, untimed

            // Repeat passes until a measurement spans at least min_measure_ms.
            const double min_seconds = config.min_measure_ms / 1000.0;
            std::size_t passes = 1;
            double seconds = 0;
            for (;;) {
                const auto t0 = Clock::now();
                for (std::size_t p = 0; p < passes; ++p) one_pass();
                seconds = std::chrono::duration<double>(Clock::now() - t0).count();
                if (seconds >= min_seconds) break;
                passes *= 2;
            }

            std::vector<double> samples;
            samples.reserve(static_cast<std::size_t>(reps));
            samples.push_back(static_cast<double>(group.total_ints * passes) / seconds / 1e6);
            for (int r = 1; r < reps; ++r) {
                const auto t0 = Clock::now();
                for (std::size_t p = 0; p < passes; ++p) one_pass();
                const double s = std::chrono::duration<double>(Clock::now() - t0).count();
                samples.push_back(static_cast<double>(group.total_ints * passes) / s / 1e6);
            }

            BenchResult res;
            res.k = group.k;
            res.bits_per_int = group.bits_per_int();
            res.scheme = scheme.name;
            res.mis = median(samples);
            res.repetitions = reps;
            res.buffer_mode = to_string(config.buffer_mode);
            results.push_back(std::move(res));
        }
    }

    // Ratio column: scheme mis over the scalar mis of the same group.
    for (BenchResult& r : results) {
        for (const BenchResult& s : results) {
            if (s.k == r.k && s.buffer_mode == r.buffer_mode && s.scheme == "scalar") {
                r.ratio_vs_scalar = r.mis / s.mis;
                break;
            }
        }
    }
    return results;
}

}  // namespace mvb::bench
