#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>

#include "carrymul/algorithms.hpp"

namespace carrymul {

struct AlgorithmProfile {
    OpCounters counters;
    Retention retention;
    std::uint64_t final_phase_adds = 0;
    std::chrono::nanoseconds median{0};  // informational only
};

/// Side-by-side run of both algorithms on one input. Counter and retention
/// fields are deterministic; `median` is wall clock.
///
/// retention.peak_vectors is a proxy for working memory: the largest number
/// of digit vectors held across loop iterations. Schoolbook holds every
/// shifted row plus the running sum (len(b) + 1); incremental holds the
/// carry plus the emitted digits (2).
struct BenchReport {
    int base = 10;
    std::size_t len_a = 0;
    std::size_t len_b = 0;
    std::size_t reps = 0;
    AlgorithmProfile incremental;
    AlgorithmProfile schoolbook;
};

/// Throws std::invalid_argument for reps == 0, Error(BaseMismatch) across bases.
BenchReport compare_algorithms(const Natural& a, const Natural& b, std::size_t reps);

std::string render_bench_json(const BenchReport& report, bool include_timing = true);
std::string render_bench_text(const BenchReport& report);

}  // namespace carrymul
