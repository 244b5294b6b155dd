#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "carrymul/algorithms.hpp"
#include "carrymul/oracle.hpp"

namespace carrymul {

inline constexpr const char* kSchemaVersion = "1";

/// Machine-readable form of a Trace. Every number except k, base and the
/// counters is a numeral string in the operand base.
struct TraceDocument {
    struct Step {
        std::uint64_t k = 0;
        std::string s, r, c_next;

        friend bool operator==(const Step&, const Step&) = default;
    };

    std::string schema_version = kSchemaVersion;
    std::string algorithm;
    int base = 10;
    std::string a, b;
    std::vector<Step> steps;
    std::vector<std::string> rows;
    std::string result;
    OpCounters counters;

    friend bool operator==(const TraceDocument&, const TraceDocument&) = default;
};

TraceDocument to_document(const Trace& trace);

/// Canonical JSON: sorted keys, no insignificant whitespace, trailing newline.
std::string render_document(const TraceDocument& doc);

/// Strict inverse of render_document. Throws Error(MalformedDocument) on
/// missing, mistyped or unknown fields.
TraceDocument parse_document(std::string_view json);

/// Worked-example layout, one line per step, then "R = <result>".
std::string render_trace_text(const Trace& trace);
std::string render_trace_json(const Trace& trace);

/// With include_timing = false the output depends only on the checked pairs,
/// so identical runs serialize byte-identically.
std::string render_report_json(const VerifyReport& report, bool include_timing = true);
std::string render_report_text(const VerifyReport& report);

}  // namespace carrymul
