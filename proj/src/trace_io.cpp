#include "carrymul/trace_io.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"

namespace carrymul {

using nlohmann::json;

TraceDocument to_document(const Trace& trace) {
    TraceDocument doc;
    doc.algorithm = to_string(trace.algorithm);
    doc.base = trace.base().value();
    doc.a = render_natural(trace.a);
    doc.b = render_natural(trace.b);
    for (const auto& step : trace.steps) {
        doc.steps.push_back({step.k, render_natural(step.s), std::string(1, digit_glyph(step.r)),
                             render_natural(step.c_next)});
    }
    for (const auto& row : trace.rows) {
        doc.rows.push_back(render_natural(row));
    }
    doc.result = render_natural(trace.result);
    doc.counters = trace.counters;
    return doc;
}

std::string render_document(const TraceDocument& doc) {
    json steps = json::array();
    for (const auto& step : doc.steps) {
        steps.push_back({{"k", step.k}, {"s", step.s}, {"r", step.r}, {"c_next", step.c_next}});
    }
    const json j = {
        {"schema_version", doc.schema_version},
        {"algorithm", doc.algorithm},
        {"base", doc.base},
        {"a", doc.a},
        {"b", doc.b},
        {"steps", steps},
        {"rows", doc.rows},
        {"result", doc.result},
        {"counters",
         {{"digit_mults", doc.counters.digit_mults}, {"digit_adds", doc.counters.digit_adds}}},
    };
    return j.dump() + "\n";
}

namespace {

[[noreturn]] void malformed(const std::string& why) {
    throw Error(ErrorCode::MalformedDocument, "malformed trace document: " + why);
}

void require_keys(const json& object, const std::set<std::string>& keys, const char* where) {
    if (!object.is_object()) malformed(std::string(where) + " is not an object");
    for (const auto& [key, _] : object.items()) {
        if (!keys.contains(key)) malformed("unexpected field '" + key + "' in " + where);
    }
    for (const auto& key : keys) {
        if (!object.contains(key)) malformed("missing field '" + key + "' in " + where);
    }
}

std::string string_field(const json& object, const char* key) {
    const json& v = object.at(key);
    if (!v.is_string()) malformed(std::string(key) + " must be a string");
    return v.get<std::string>();
}

std::uint64_t count_field(const json& object, const char* key) {
    const json& v = object.at(key);
    if (!v.is_number_unsigned()) malformed(std::string(key) + " must be a non-negative integer");
    return v.get<std::uint64_t>();
}

}  // namespace

TraceDocument parse_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(e.what());
    }
    require_keys(j, {"schema_version", "algorithm", "base", "a", "b", "steps", "rows", "result", "counters"},
                 "document");
    TraceDocument doc;
    doc.schema_version = string_field(j, "schema_version");
    if (doc.schema_version != kSchemaVersion) malformed("unsupported schema_version " + doc.schema_version);
    doc.algorithm = string_field(j, "algorithm");
    if (!parse_algorithm(doc.algorithm)) malformed("unknown algorithm " + doc.algorithm);
    doc.base = static_cast<int>(count_field(j, "base"));
    doc.a = string_field(j, "a");
    doc.b = string_field(j, "b");
    doc.result = string_field(j, "result");

    if (!j["steps"].is_array()) malformed("steps must be an array");
    for (const json& step : j["steps"]) {
        require_keys(step, {"k", "s", "r", "c_next"}, "step");
        doc.steps.push_back({count_field(step, "k"), string_field(step, "s"), string_field(step, "r"),
                             string_field(step, "c_next")});
    }
    if (!j["rows"].is_array()) malformed("rows must be an array");
    for (const json& row : j["rows"]) {
        if (!row.is_string()) malformed("rows must hold strings");
        doc.rows.push_back(row.get<std::string>());
    }
    const json& counters = j["counters"];
    require_keys(counters, {"digit_mults", "digit_adds"}, "counters");
    doc.counters.digit_mults = count_field(counters, "digit_mults");
    doc.counters.digit_adds = count_field(counters, "digit_adds");
    return doc;
}

std::string render_trace_json(const Trace& trace) { return render_document(to_document(trace)); }

std::string render_trace_text(const Trace& trace) {
    const std::string a = render_natural(trace.a);
    std::ostringstream out;
    if (trace.algorithm == Algorithm::Incremental) {
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            const StepRecord& step = trace.steps[i];
            out << "S_" << step.k << " = " << a << " × " << digit_glyph(trace.b.digit(step.k));
            if (i > 0) {
                out << " + " << render_natural(trace.steps[i - 1].c_next);
            }
            out << " = " << render_natural(step.s) << "; r_" << step.k << " = " << digit_glyph(step.r)
                << "; c_" << step.k + 1 << " = " << render_natural(step.c_next) << '\n';
        }
    } else {
        for (std::size_t j = 0; j < trace.rows.size(); ++j) {
            out << "P_" << j << " = " << a << " × " << digit_glyph(trace.b.digit(j));
            if (j > 0) {
                out << " × 10^" << j;
            }
            out << " = " << render_natural(trace.rows[j]) << '\n';
        }
    }
    out << "R = " << render_natural(trace.result) << '\n';
    return out.str();
}

namespace {

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

std::string render_report_json(const VerifyReport& report, bool include_timing) {
    json mismatches = json::array();
    for (const auto& m : report.mismatches) {
        mismatches.push_back({{"base", m.base},
                              {"a", m.a},
                              {"b", m.b},
                              {"expected", m.expected},
                              {"incremental", m.incremental},
                              {"schoolbook", m.schoolbook},
                              {"oracle", m.oracle}});
    }
    json failures = json::array();
    for (const auto& f : report.invariant_failures) {
        failures.push_back({{"base", f.base}, {"a", f.a}, {"b", f.b}, {"step", f.step}});
    }
    json j = {
        {"schema_version", kSchemaVersion},
        {"kind", "verify_report"},
        {"passed", report.passed()},
        {"pairs_checked", report.pairs_checked},
        {"pair_digest", hex64(report.pair_digest())},
        {"mismatches", mismatches},
        {"invariant_failures", failures},
    };
    if (include_timing) {
        j["elapsed_ms"] = std::chrono::duration<double, std::milli>(report.elapsed).count();
    }
    return j.dump() + "\n";
}

std::string render_report_text(const VerifyReport& report) {
    std::ostringstream out;
    out << "pairs_checked: " << report.pairs_checked << '\n'
        << "mismatches: " << report.mismatches.size() << '\n'
        << "invariant_failures: " << report.invariant_failures.size() << '\n';
    if (!report.pairs.empty()) {
        out << "pair_digest: " << hex64(report.pair_digest()) << '\n';
    }
    for (const auto& m : report.mismatches) {
        out << "mismatch base " << m.base << ": " << m.a << " x " << m.b << " expected " << m.expected
            << " incremental " << m.incremental << " schoolbook " << m.schoolbook << " oracle "
            << m.oracle << '\n';
    }
    for (const auto& f : report.invariant_failures) {
        out << "invariant fails base " << f.base << ": " << f.a << " x " << f.b << " at step "
            << f.step << '\n';
    }
    out << "elapsed_ms: " << std::chrono::duration<double, std::milli>(report.elapsed).count() << '\n'
        << (report.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}  // namespace carrymul
