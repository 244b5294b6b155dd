#include "carrymul/cli.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "carrymul/bench.hpp"
#include "carrymul/trace_io.hpp"

namespace carrymul::cli {

namespace {

enum class Format { Text, Json };

const std::map<std::string, Algorithm> kAlgorithms{{"incremental", Algorithm::Incremental},
                                                   {"schoolbook", Algorithm::Schoolbook}};
const std::map<std::string, Format> kFormats{{"text", Format::Text}, {"json", Format::Json}};

struct Operands {
    std::string a;
    std::string b;
    int base = 10;
};

void add_operands(CLI::App* cmd, Operands& ops) {
    cmd->add_option("A", ops.a, "Multiplicand numeral")->required();
    cmd->add_option("B", ops.b, "Multiplier numeral")->required();
    cmd->add_option("--base", ops.base, "Radix of the operands")->check(CLI::Range(2, 36));
}

std::pair<Natural, Natural> parse_operands(const Operands& ops) {
    const Base base(ops.base);
    return {parse_natural(ops.a, base), parse_natural(ops.b, base)};
}

}  // namespace

int verify_exit_code(const VerifyReport& report) noexcept {
    return report.passed() ? kExitOk : kExitMismatch;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact base-b multiplication: incremental carry method vs schoolbook", "carrymul"};
    app.require_subcommand(1);

    Operands ops;
    Algorithm algorithm = Algorithm::Incremental;
    Format format = Format::Text;

    auto* mul = app.add_subcommand("mul", "Print A * B");
    add_operands(mul, ops);
    mul->add_option("--algo", algorithm, "incremental | schoolbook")
        ->transform(CLI::CheckedTransformer(kAlgorithms));

    auto* trace = app.add_subcommand("trace", "Print every step of A * B");
    add_operands(trace, ops);
    trace->add_option("--algo", algorithm, "incremental | schoolbook")
        ->transform(CLI::CheckedTransformer(kAlgorithms));
    trace->add_option("--format", format, "text | json")->transform(CLI::CheckedTransformer(kFormats));

    std::optional<std::uint64_t> limit;
    bool random = false;
    std::uint64_t trials = 10000;
    std::size_t max_digits = 64;
    std::uint64_t seed = 1;
    std::optional<int> verify_base;
    auto* verify = app.add_subcommand("verify", "Check both algorithms against the oracle");
    auto* limit_opt = verify->add_option("--limit", limit, "Exhaustive: all pairs below N")
                          ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 32));
    auto* random_flag = verify->add_flag("--random", random, "Seeded random operands");
    limit_opt->excludes(random_flag);
    verify->add_option("--base", verify_base, "Radix (random default: every base 2..36)")
        ->check(CLI::Range(2, 36));
    verify->add_option("--trials", trials, "Random trial count")->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
    verify->add_option("--max-digits", max_digits, "Longest random operand")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--format", format, "text | json")->transform(CLI::CheckedTransformer(kFormats));

    std::size_t reps = 5;
    auto* bench = app.add_subcommand("bench", "Compare operation counts and timings");
    add_operands(bench, ops);
    bench->add_option("--reps", reps, "Timed repetitions")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 24));
    bench->add_option("--format", format, "text | json")->transform(CLI::CheckedTransformer(kFormats));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (mul->parsed()) {
            const auto [a, b] = parse_operands(ops);
            out << render_natural(multiply(a, b, algorithm)) << '\n';
            return kExitOk;
        }
        if (trace->parsed()) {
            const auto [a, b] = parse_operands(ops);
            const Trace t = algorithm == Algorithm::Incremental ? incremental_multiply(a, b)
                                                                : schoolbook_multiply(a, b);
            out << (format == Format::Json ? render_trace_json(t) : render_trace_text(t));
            return kExitOk;
        }
        if (verify->parsed()) {
            VerifyReport report;
            if (random) {
                std::vector<Base> bases;
                if (verify_base) {
                    bases.emplace_back(*verify_base);
                } else {
                    for (int b = Base::kMin; b <= Base::kMax; ++b) bases.emplace_back(b);
                }
                report = random_check(trials, max_digits, bases, seed);
            } else if (limit) {
                report = exhaustive_check(*limit, Base(verify_base.value_or(10)));
            } else {
                err << "verify: pass --limit N or --random\n";
                return kExitUsage;
            }
            out << (format == Format::Json ? render_report_json(report) : render_report_text(report));
            return verify_exit_code(report);
        }
        if (bench->parsed()) {
            const auto [a, b] = parse_operands(ops);
            const BenchReport report = compare_algorithms(a, b, reps);
            out << (format == Format::Json ? render_bench_json(report) : render_bench_text(report));
            return kExitOk;
        }
    } catch (const Error& e) {
        err << "carrymul: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "carrymul: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace carrymul::cli
