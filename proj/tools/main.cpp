// mvb: workload generation, decode benchmarking, and table inspection for
// the vbyte codec.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "bench/csv.hpp"
#include "bench/runner.hpp"
#include "bench/workload.hpp"
#include "mvb/decode.hpp"
#include "mvb/list_file.hpp"
#include "mvb/mask_tables.hpp"
#include "mvb/vbyte.hpp"

namespace fs = std::filesystem;
using namespace mvb;

namespace {

struct SpecFlags {
    bench::WorkloadSpec spec;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", spec.seed, "workload seed");
        cmd->add_option("--universe", spec.universe, "document-id upper bound");
        cmd->add_option("--kmin", spec.k_min, "smallest length-group exponent");
        cmd->add_option("--kmax", spec.k_max, "largest length-group exponent");
        cmd->add_option("--lists", spec.lists_per_group, "lists per group");
    }
};

int cmd_generate(const SpecFlags& flags, const std::string& out_dir) {
    fs::create_directories(out_dir);
    std::size_t files = 0;
    for (int k = flags.spec.k_min; k <= flags.spec.k_max; ++k) {
        const auto lists = bench::generate_group(flags.spec, k);
        for (std::size_t i = 0; i < lists.size(); ++i) {
            char name[64];
            std::snprintf(name, sizeof name, "k%02d_list%04zu.mvb", k, i);
            write_list_file(fs::path(out_dir) / name, encode_deltas(lists[i]));
            ++files;
        }
    }
    std::cout << "wrote " << files << " list files to " << out_dir << '\n';
    return 0;
}

// Data files are grouped by the kNN prefix generate uses.
std::vector<bench::GroupData> load_groups(const std::string& dir) {
    std::map<int, bench::GroupData> by_k;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".mvb") continue;
        const std::string name = entry.path().filename().string();
        int k = -1;
        if (std::sscanf(name.c_str(), "k%d_", &k) != 1 || k < 0)
            throw std::runtime_error("cannot parse length group from file name: " + name);
        EncodedBuffer buf = read_list_file(entry.path());
        if (!buf.delta_coded)
            throw std::runtime_error("list is not delta-coded: " + name);
        bench::GroupData& group = by_k[k];
        group.k = k;
        group.total_ints += buf.count;
        group.total_bytes += buf.bytes.size();
        group.lists.push_back(std::move(buf));
    }
    if (by_k.empty()) throw std::runtime_error("no .mvb lists found in " + dir);
    std::vector<bench::GroupData> groups;
    groups.reserve(by_k.size());
    for (auto& [k, group] : by_k) groups.push_back(std::move(group));
    return groups;
}

int cmd_bench(const SpecFlags& flags, const std::string& data_dir, bench::BenchConfig config,
              const std::string& out_path) {
    std::vector<bench::BenchResult> results;
    if (data_dir.empty()) {
        results = bench::run_benchmark(flags.spec, config);
    } else {
        results = bench::run_benchmark(load_groups(data_dir), config);
    }
    if (out_path.empty() || out_path == "-") {
        bench::write_csv(std::cout, results);
    } else {
        std::ofstream os(out_path);
        if (!os) throw std::runtime_error("cannot open " + out_path);
        bench::write_csv(os, results);
        std::cout << "wrote " << results.size() << " rows to " << out_path << '\n';
    }
    return 0;
}

int cmd_report(const std::string& in_path, bool as_csv) {
    std::ifstream is(in_path);
    if (!is) throw std::runtime_error("cannot open " + in_path);
    const auto results = bench::read_csv(is);
    if (results.empty()) throw std::runtime_error("no result rows in " + in_path);
    if (as_csv)
        bench::write_csv(std::cout, results);
    else
        bench::write_table(std::cout, results);
    return 0;
}

int cmd_tables(const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        dump_entry_table(std::cout);
    } else {
        std::ofstream os(out_path);
        if (!os) throw std::runtime_error("cannot open " + out_path);
        dump_entry_table(os);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vbyte codec workbench"};
    app.require_subcommand(1);

    SpecFlags gen_flags, bench_flags;

    auto* generate = app.add_subcommand("generate", "write synthetic posting lists to disk");
    gen_flags.attach(generate);
    std::string out_dir;
    generate->add_option("--out", out_dir, "output directory")->required();

    auto* bench_cmd = app.add_subcommand("bench", "measure decode throughput");
    bench_flags.attach(bench_cmd);
    std::string data_dir;
    bench_cmd->add_option("--data", data_dir, "read lists from this directory instead of generating");
    std::vector<std::string> schemes = {"scalar", "masked"};
    bench_cmd->add_option("--schemes", schemes, "decoders to time")->delimiter(',');
    std::string buffer_mode = "l1";
    bench_cmd->add_option("--buffer-mode", buffer_mode, "l1 | full")
        ->check(CLI::IsMember({"l1", "full"}));
    bench::BenchConfig config;
    bench_cmd->add_option("--reps", config.repetitions, "measurement repetitions (>= 3)");
    bench_cmd->add_option("--min-ms", config.min_measure_ms, "minimum milliseconds per measurement");
    bench_cmd->add_option("--buffer-ints", config.buffer_ints, "l1 buffer size in integers");
    std::string bench_out;
    bench_cmd->add_option("--out", bench_out, "CSV output path (default stdout)");

    auto* report = app.add_subcommand("report", "render a results CSV");
    std::string report_in;
    report->add_option("--in", report_in, "results CSV")->required();
    bool report_csv = false;
    report->add_flag("--csv", report_csv, "re-emit CSV instead of the aligned table");

    auto* tables = app.add_subcommand("tables", "dump the 4096-entry mask table");
    std::string tables_out;
    tables->add_option("--out", tables_out, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return cmd_generate(gen_flags, out_dir);
        if (bench_cmd->parsed()) {
            config.schemes = schemes;
            config.buffer_mode =
                buffer_mode == "full" ? bench::BufferMode::full : bench::BufferMode::l1;
            return cmd_bench(bench_flags, data_dir, config, bench_out);
        }
        if (report->parsed()) return cmd_report(report_in, report_csv);
        if (tables->parsed()) return cmd_tables(tables_out);
    } catch (const std::exception& e) {
        std::cerr << "mvb: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
