#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "carrymul/arith.hpp"
#include "carrymul/digits.hpp"

namespace carrymul {

enum class Algorithm { Incremental, Schoolbook };

const char* to_string(Algorithm algorithm) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

/// One iteration of the incremental method: s = a * b_k + c_k, split as
/// s = c_next * base + r.
struct StepRecord {
    std::size_t k = 0;
    Natural s;
    Digit r;
    Natural c_next;
};

/// Digit vectors kept alive across loop iterations, measured while the
/// algorithm runs. Transient per-step values are not counted.
struct Retention {
    std::size_t peak_vectors = 0;
    std::size_t peak_rows = 0;     // schoolbook partial products held at once
    std::size_t peak_carries = 0;  // incremental carries held at once
};

struct Trace {
    Algorithm algorithm;
    Natural a;
    Natural b;
    std::vector<StepRecord> steps;  // incremental only
    std::vector<Natural> rows;      // schoolbook only: a * b_j * base^j
    Natural result;
    OpCounters counters;
    /// digit_adds spent after the per-digit loop (schoolbook row summation).
    std::uint64_t final_phase_adds = 0;
    Retention retention;

    Base base() const noexcept { return a.base(); }
};

/// Carry-propagating multiplication: each step folds the whole previous
/// quotient into a * b_k and emits exactly one result digit.
///
/// A zero multiplier yields an empty step list. A zero multiplicand runs
/// every step with zero sums.
Trace incremental_multiply(const Natural& a, const Natural& b);

/// Classical long multiplication. All shifted rows are materialized, then
/// summed left to right.
Trace schoolbook_multiply(const Natural& a, const Natural& b);

/// Entry k is true iff
///   sum_{i<=k} r_i * base^i + base^(k+1) * c_{k+1} == sum_{j<=k} (a * b_j) * base^j
/// where r_i and c_{k+1} come from the trace and the right-hand side is
/// rebuilt from trace.a and trace.b using addition only.
/// Throws Error(WrongAlgorithm) for schoolbook traces.
std::vector<bool> check_invariant(const Trace& trace);

Natural multiply(const Natural& a, const Natural& b, Algorithm algorithm);

}  // namespace carrymul
