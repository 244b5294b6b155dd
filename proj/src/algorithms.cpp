#include "carrymul/algorithms.hpp"

#include <algorithm>
#include <utility>

namespace carrymul {

const char* to_string(Algorithm algorithm) noexcept {
    return algorithm == Algorithm::Incremental ? "incremental" : "schoolbook";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    if (name == "incremental") return Algorithm::Incremental;
    if (name == "schoolbook") return Algorithm::Schoolbook;
    return std::nullopt;
}

namespace {

class RetentionMeter {
public:
    void hold_vector() { bump(vectors_, stats_.peak_vectors); }
    void drop_vector() { --vectors_; }
    void hold_row() {
        hold_vector();
        bump(rows_, stats_.peak_rows);
    }
    void drop_row() {
        drop_vector();
        --rows_;
    }
    void hold_carry() {
        hold_vector();
        bump(carries_, stats_.peak_carries);
    }

    Retention stats() const { return stats_; }

private:
    static void bump(std::size_t& live, std::size_t& peak) {
        ++live;
        peak = std::max(peak, live);
    }

    std::size_t vectors_ = 0;
    std::size_t rows_ = 0;
    std::size_t carries_ = 0;
    Retention stats_;
};

}  // namespace

Trace incremental_multiply(const Natural& a, const Natural& b) {
    require_same_base(a, b);
    const Base base = a.base();
    Trace trace{Algorithm::Incremental, a, b, {}, {}, Natural(base), {}, 0, {}};
    RetentionMeter meter;

    std::vector<std::uint8_t> emitted;  // r_0 .. r_{k}
    emitted.reserve(b.size());
    meter.hold_vector();

    std::optional<Natural> carry;
    for (std::size_t k = 0; k < b.size(); ++k) {
        Natural s = mul_by_digit(a, b.digit(k), trace.counters);
        if (carry) {
            s = add(s, *carry, trace.counters);
        }
        auto [quotient, remainder] = divmod_base(s);
        emitted.push_back(remainder.value());
        if (!carry) {
            meter.hold_carry();
        }
        carry = quotient;
        trace.steps.push_back(StepRecord{k, std::move(s), remainder, std::move(quotient)});
    }

    if (carry) {
        // R = c_n * base^n + sum_{i<n} r_i * base^i. The shifted carry has n
        // zero low digits, so this addition never carries; it is placement
        // and is kept out of the instrumented counts.
        OpCounters placement;
        trace.result = add(shift(*carry, b.size()), Natural(std::move(emitted), base), placement);
    }
    trace.retention = meter.stats();
    return trace;
}

Trace schoolbook_multiply(const Natural& a, const Natural& b) {
    require_same_base(a, b);
    const Base base = a.base();
    Trace trace{Algorithm::Schoolbook, a, b, {}, {}, Natural(base), {}, 0, {}};
    RetentionMeter meter;

    trace.rows.reserve(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        trace.rows.push_back(shift(mul_by_digit(a, b.digit(j), trace.counters), j));
        meter.hold_row();
    }

    const std::uint64_t adds_before_sum = trace.counters.digit_adds;
    Natural sum(base);
    meter.hold_vector();
    for (std::size_t j = 0; j < trace.rows.size(); ++j) {
        sum = j == 0 ? trace.rows[0] : add(sum, trace.rows[j], trace.counters);
        meter.drop_row();
    }
    trace.final_phase_adds = trace.counters.digit_adds - adds_before_sum;
    trace.result = std::move(sum);
    trace.retention = meter.stats();
    return trace;
}

std::vector<bool> check_invariant(const Trace& trace) {
    if (trace.algorithm != Algorithm::Incremental) {
        throw Error(ErrorCode::WrongAlgorithm, "invariant is defined for incremental traces only");
    }
    const Base base = trace.base();
    OpCounters scratch;
    Natural expected(base);  // sum_{j<=k} (a * b_j) * base^j
    std::vector<std::uint8_t> emitted;
    bool poisoned = false;

    std::vector<bool> holds;
    holds.reserve(trace.steps.size());
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const StepRecord& step = trace.steps[k];
        const Natural row = scale_by_small(trace.a, trace.b.digit(k).value(), scratch);
        expected = add(expected, shift(row, k), scratch);

        if (step.r.value() >= base.value() || step.c_next.base() != base) {
            poisoned = true;
        }
        if (poisoned) {
            holds.push_back(false);
            continue;
        }
        emitted.push_back(step.r.value());
        const Natural observed =
            add(Natural(emitted, base), shift(step.c_next, k + 1), scratch);
        holds.push_back(observed == expected);
    }
    return holds;
}

Natural multiply(const Natural& a, const Natural& b, Algorithm algorithm) {
    return algorithm == Algorithm::Incremental ? incremental_multiply(a, b).result
                                               : schoolbook_multiply(a, b).result;
}

}  // namespace carrymul
