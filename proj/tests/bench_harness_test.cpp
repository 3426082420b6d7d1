#include <doctest.h>

#include <stdexcept>

#include <cstdint>
#include <sstream>
#include <vector>

#include "bench/csv.hpp"
#include "bench/runner.hpp"
#include "bench/workload.hpp"

using namespace mvb::bench;

TEST_CASE("generate_group is deterministic and respects the length bracket") {
    WorkloadSpec spec;
    spec.seed = 99;
    spec.universe = 1u << 20;
    spec.lists_per_group = 4;

    const auto a = generate_group(spec, 6);
    const auto b = generate_group(spec, 6);
    CHECK(a == b);

    for (const auto& list : a) {
        CHECK(list.size() >= 64);
        CHECK(list.size() < 128);
        for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1] < list[i]);
        for (uint32_t v : list) CHECK(v < spec.universe);
    }

    // Different seeds diverge.
    spec.seed = 100;
    CHECK(generate_group(spec, 6) != a);
}

TEST_CASE("generate_group rejects groups that cannot fit the universe") {
    WorkloadSpec spec;
    spec.universe = 1u << 10;
    CHECK_THROWS_AS((void)generate_group(spec, 10), std::invalid_argument);
    CHECK_NOTHROW((void)generate_group(spec, 9));
}

TEST_CASE("mean bits per integer decreases as lists grow") {
    // Averaged across seeds; longer lists have smaller gaps, so fewer bits.
    WorkloadSpec spec;
    spec.universe = 1u << 22;
    spec.lists_per_group = 4;

    constexpr int k_lo = 5, k_hi = 12;
    double mean_bits[k_hi - k_lo + 1] = {};
    constexpr int kSeeds = 5;
    for (int s = 0; s < kSeeds; ++s) {
        spec.seed = 1000 + s;
        for (int k = k_lo; k <= k_hi; ++k) {
            const GroupData g = prepare_group(k, generate_group(spec, k));
            mean_bits[k - k_lo] += g.bits_per_int() / kSeeds;
        }
    }
    for (int k = k_lo; k < k_hi; ++k) {
        CAPTURE(k);
        CHECK(mean_bits[k - k_lo + 1] <= mean_bits[k - k_lo] + 0.05);
    }
    CHECK(mean_bits[k_hi - k_lo] >= 8.0);  // one byte per integer is the floor
}

TEST_CASE("run_benchmark produces consistent rows") {
    WorkloadSpec spec;
    spec.seed = 3;
    spec.universe = 1u << 16;
    spec.k_min = 4;
    spec.k_max = 5;
    spec.lists_per_group = 2;

    BenchConfig config;
    config.schemes = {"scalar", "masked", "masked-portable"};
    config.min_measure_ms = 5;  // keep the unit test quick

    const auto results = run_benchmark(spec, config);
    REQUIRE(results.size() == 2 * 3);

    for (const auto& r : results) {
        CAPTURE(r.scheme);
        CHECK(r.mis > 0);
        CHECK(r.bits_per_int >= 8.0);
        CHECK(r.repetitions >= 3);
        CHECK(r.buffer_mode == "l1");
        CHECK(r.ratio_vs_scalar > 0);
        if (r.scheme == "scalar") CHECK(r.ratio_vs_scalar == 1.0);
    }

    // bits_per_int must match the independent recomputation.
    for (int k = spec.k_min; k <= spec.k_max; ++k) {
        const GroupData g = prepare_group(k, generate_group(spec, k));
        for (const auto& r : results)
            if (r.k == k) CHECK(r.bits_per_int == doctest::Approx(g.bits_per_int()));
    }
}

TEST_CASE("unknown scheme is rejected") {
    WorkloadSpec spec;
    spec.k_min = spec.k_max = 4;
    spec.lists_per_group = 1;
    BenchConfig config;
    config.schemes = {"turbo"};
    CHECK_THROWS_AS((void)run_benchmark(spec, config), std::invalid_argument);
}

TEST_CASE("csv writing and parsing round-trips") {
    std::vector<BenchResult> results;
    BenchResult a;
    a.k = 4;
    a.bits_per_int = 11.73;
    a.scheme = "scalar";
    a.mis = 312.5;
    a.ratio_vs_scalar = 1.0;
    a.repetitions = 3;
    a.buffer_mode = "l1";
    BenchResult b = a;
    b.scheme = "masked";
    b.mis = 901.25;
    b.ratio_vs_scalar = b.mis / a.mis;
    results = {a, b};

    std::ostringstream os;
    write_csv(os, results);
    const std::string text = os.str();
    CHECK(text.find("K,bits_per_int,scheme,mis,ratio_vs_scalar,buffer_mode") == 0);

    std::istringstream is(text);
    const auto parsed = read_csv(is);
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].k == 4);
    CHECK(parsed[0].bits_per_int == a.bits_per_int);
    CHECK(parsed[0].mis == a.mis);
    CHECK(parsed[1].scheme == "masked");
    CHECK(parsed[1].ratio_vs_scalar == b.ratio_vs_scalar);

    std::ostringstream os2;
    write_csv(os2, parsed);
    CHECK(os2.str() == text);

    std::ostringstream table;
    write_table(table, parsed);
    CHECK(table.str().find("masked") != std::string::npos);
}

TEST_CASE("read_csv rejects malformed input") {
    std::istringstream empty("");
    CHECK_THROWS_AS((void)read_csv(empty), std::runtime_error);
    std::istringstream bad_header("a,b,c\n");
    CHECK_THROWS_AS((void)read_csv(bad_header), std::runtime_error);
    std::istringstream bad_row(std::string(kCsvHeader) + "\n1,2,3\n");
    CHECK_THROWS_AS((void)read_csv(bad_row), std::runtime_error);
}
