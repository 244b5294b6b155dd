#include "carrymul/bench.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace carrymul {

namespace {

template <typename Run>
AlgorithmProfile profile(Run run, std::size_t reps) {
    AlgorithmProfile out;
    std::vector<std::chrono::nanoseconds> samples;
    samples.reserve(reps);
    for (std::size_t r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        const Trace trace = run();
        samples.push_back(std::chrono::steady_clock::now() - start);
        if (r == 0) {
            out.counters = trace.counters;
            out.retention = trace.retention;
            out.final_phase_adds = trace.final_phase_adds;
        }
    }
    std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
    out.median = samples[samples.size() / 2];
    return out;
}

nlohmann::json profile_json(const AlgorithmProfile& p, bool include_timing) {
    nlohmann::json j = {
        {"counters", {{"digit_mults", p.counters.digit_mults}, {"digit_adds", p.counters.digit_adds}}},
        {"final_phase_adds", p.final_phase_adds},
        {"retained",
         {{"peak_vectors", p.retention.peak_vectors},
          {"peak_rows", p.retention.peak_rows},
          {"peak_carries", p.retention.peak_carries}}},
    };
    if (include_timing) {
        j["median_ns"] = p.median.count();
    }
    return j;
}

}  // namespace

BenchReport compare_algorithms(const Natural& a, const Natural& b, std::size_t reps) {
    require_same_base(a, b);
    if (reps == 0) {
        throw std::invalid_argument("reps must be at least 1");
    }
    BenchReport report;
    report.base = a.base().value();
    report.len_a = a.size();
    report.len_b = b.size();
    report.reps = reps;
    report.incremental = profile([&] { return incremental_multiply(a, b); }, reps);
    report.schoolbook = profile([&] { return schoolbook_multiply(a, b); }, reps);
    return report;
}

std::string render_bench_json(const BenchReport& report, bool include_timing) {
    const nlohmann::json j = {
        {"schema_version", "1"},
        {"kind", "bench_report"},
        {"base", report.base},
        {"len_a", report.len_a},
        {"len_b", report.len_b},
        {"reps", report.reps},
        {"incremental", profile_json(report.incremental, include_timing)},
        {"schoolbook", profile_json(report.schoolbook, include_timing)},
    };
    return j.dump() + "\n";
}

std::string render_bench_text(const BenchReport& report) {
    std::ostringstream out;
    out << "base " << report.base << ", len(a) = " << report.len_a << ", len(b) = " << report.len_b
        << ", reps = " << report.reps << '\n';
    out << std::left << std::setw(12) << "algorithm" << std::right << std::setw(13) << "digit_mults"
        << std::setw(12) << "digit_adds" << std::setw(12) << "final_adds" << std::setw(14)
        << "peak_vectors" << std::setw(12) << "median_ns" << '\n';
    const auto row = [&out](const char* name, const AlgorithmProfile& p) {
        out << std::left << std::setw(12) << name << std::right << std::setw(13) << p.counters.digit_mults
            << std::setw(12) << p.counters.digit_adds << std::setw(12) << p.final_phase_adds
            << std::setw(14) << p.retention.peak_vectors << std::setw(12) << p.median.count() << '\n';
    };
    row("incremental", report.incremental);
    row("schoolbook", report.schoolbook);
    return out.str();
}

}  // namespace carrymul
