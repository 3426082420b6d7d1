#include "csv.hpp"

#include <charconv>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mvb::bench {

namespace {

std::string format_double(double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("write_csv: number formatting failed");
    return {buf, end};
}

double parse_double(const std::string& s) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::runtime_error("read_csv: bad number: " + s);
    return v;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

}  // namespace

void write_csv(std::ostream& os, std::span<const BenchResult> results) {
    os << kCsvHeader << '\n';
    for (const BenchResult& r : results) {
        os << r.k << ',' << format_double(r.bits_per_int) << ',' << r.scheme << ','
           << format_double(r.mis) << ',' << format_double(r.ratio_vs_scalar) << ','
           << r.buffer_mode << '\n';
    }
}

std::vector<BenchResult> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kCsvHeader)
        throw std::runtime_error("read_csv: missing or unexpected header");
    std::vector<BenchResult> results;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto fields = split(line);
        if (fields.size() != 6) throw std::runtime_error("read_csv: bad row: " + line);
        BenchResult r;
        r.k = std::stoi(fields[0]);
        r.bits_per_int = parse_double(fields[1]);
        r.scheme = fields[2];
        r.mis = parse_double(fields[3]);
        r.ratio_vs_scalar = parse_double(fields[4]);
        r.buffer_mode = fields[5];
        results.push_back(std::move(r));
    }
    return results;
}

void write_table(std::ostream& os, std::span<const BenchResult> results) {
    os << std::left << std::setw(4) << "K" << std::right << std::setw(14) << "bits_per_int"
       << "  " << std::left << std::setw(16) << "scheme" << std::right << std::setw(10) << "mis"
       << std::setw(10) << "ratio"
       << "  " << std::left << "mode" << '\n';
    for (const BenchResult& r : results) {
        os << std::left << std::setw(4) << r.k << std::right << std::setw(14) << std::fixed
           << std::setprecision(2) << r.bits_per_int << "  " << std::left << std::setw(16)
           << r.scheme << std::right << std::setw(10) << std::setprecision(0) << r.mis
           << std::setw(10) << std::setprecision(2) << r.ratio_vs_scalar << "  " << std::left
           << r.buffer_mode << '\n';
    }
    os.unsetf(std::ios::fixed);
}

}  // namespace mvb::bench
