#include <algorithm>
#include <stdexcept>
#include <thread>
#include <utility>

#include "carrymul/algorithms.hpp"
#include "carrymul/oracle.hpp"

namespace carrymul {

std::uint64_t VerifyReport::pair_digest() const noexcept {
    if (pairs.empty()) return 0;
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](const std::string& s) {
        for (const char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
    };
    for (const auto& p : pairs) {
        feed(std::to_string(p.base) + ":" + p.a + ":" + p.b + "\n");
    }
    return h;
}

namespace {

// Canonical numerals order by length, then lexicographically.
bool numeral_less(const std::string& x, const std::string& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
}

struct Findings {
    std::uint64_t checked = 0;
    std::vector<Mismatch> mismatches;
    std::vector<InvariantFailure> invariant_failures;

    void merge(Findings&& other) {
        checked += other.checked;
        std::move(other.mismatches.begin(), other.mismatches.end(), std::back_inserter(mismatches));
        std::move(other.invariant_failures.begin(), other.invariant_failures.end(),
                  std::back_inserter(invariant_failures));
    }
};

void check_pair(const Natural& a, const Natural& b, const Natural& expected, Findings& out) {
    ++out.checked;
    const Trace inc = incremental_multiply(a, b);
    const Natural school = schoolbook_multiply(a, b).result;
    const Natural oracle = oracle_multiply(a, b);
    if (inc.result != expected || school != expected || oracle != expected) {
        out.mismatches.push_back(Mismatch{a.base().value(), render_natural(a), render_natural(b),
                                          render_natural(expected), render_natural(inc.result),
                                          render_natural(school), render_natural(oracle)});
    }
    const auto holds = check_invariant(inc);
    const auto bad = std::find(holds.begin(), holds.end(), false);
    if (bad != holds.end() || holds.size() != b.size()) {
        out.invariant_failures.push_back(
            InvariantFailure{a.base().value(), render_natural(a), render_natural(b),
                             static_cast<std::size_t>(bad - holds.begin())});
    }
}

// Runs task(begin, end, findings) over [0, count) split across `threads`
// workers (0: hardware threads) and merges the per-worker findings.
template <typename Task>
Findings run_chunks(std::size_t count, unsigned threads, Task task) {
    const std::size_t wanted = threads != 0 ? threads : std::thread::hardware_concurrency();
    const std::size_t workers = std::clamp<std::size_t>(wanted, 1, std::max<std::size_t>(count, 1));
    std::vector<Findings> partial(workers);
    if (workers == 1) {
        task(std::size_t{0}, count, partial[0]);
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = count * w / workers;
            const std::size_t end = count * (w + 1) / workers;
            threads.emplace_back([&, w, begin, end] { task(begin, end, partial[w]); });
        }
    }
    Findings merged;
    for (auto& p : partial) merged.merge(std::move(p));
    return merged;
}

void finish(VerifyReport& report, Findings&& findings) {
    report.pairs_checked = findings.checked;
    report.mismatches = std::move(findings.mismatches);
    report.invariant_failures = std::move(findings.invariant_failures);
    const auto key_less = [](const auto& x, const auto& y) {
        if (x.base != y.base) return x.base < y.base;
        if (x.a != y.a) return numeral_less(x.a, y.a);
        return numeral_less(x.b, y.b);
    };
    std::sort(report.mismatches.begin(), report.mismatches.end(), key_less);
    std::sort(report.invariant_failures.begin(), report.invariant_failures.end(), key_less);
}

}  // namespace

VerifyReport exhaustive_check(std::uint64_t limit, Base base, unsigned threads) {
    if (limit == 0 || limit > (std::uint64_t{1} << 32)) {
        throw std::invalid_argument("exhaustive limit must be in 1..2^32");
    }
    const auto started = std::chrono::steady_clock::now();
    std::vector<Natural> operands;
    operands.reserve(limit);
    for (std::uint64_t x = 0; x < limit; ++x) {
        operands.push_back(from_machine_integer(x, base));
    }

    Findings findings = run_chunks(limit, threads, [&](std::size_t begin, std::size_t end, Findings& out) {
        for (std::size_t x = begin; x < end; ++x) {
            for (std::uint64_t y = 0; y < limit; ++y) {
                check_pair(operands[x], operands[y], from_machine_integer(x * y, base), out);
            }
        }
    });

    VerifyReport report;
    finish(report, std::move(findings));
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

std::vector<std::pair<Natural, Natural>> sample_pairs(std::uint64_t trials, std::size_t max_digits,
                                                      const std::vector<Base>& bases,
                                                      std::uint64_t seed) {
    if (trials == 0 || max_digits == 0 || bases.empty()) {
        throw std::invalid_argument("random check needs trials >= 1, max_digits >= 1 and a base");
    }
    SplitMix64 rng(seed);
    auto draw = [&](Base base) {
        const std::size_t len = 1 + rng.below(max_digits);
        const auto radix = static_cast<std::uint64_t>(base.value());
        std::vector<std::uint8_t> digits(len);
        for (std::size_t i = 0; i + 1 < len; ++i) {
            digits[i] = static_cast<std::uint8_t>(rng.below(radix));
        }
        digits[len - 1] = static_cast<std::uint8_t>(1 + rng.below(radix - 1));
        return Natural(std::move(digits), base);
    };
    std::vector<std::pair<Natural, Natural>> pairs;
    pairs.reserve(trials);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Base base = bases[rng.below(bases.size())];
        Natural a = draw(base);
        Natural b = draw(base);
        pairs.emplace_back(std::move(a), std::move(b));
    }
    return pairs;
}

VerifyReport random_check(std::uint64_t trials, std::size_t max_digits,
                          const std::vector<Base>& bases, std::uint64_t seed, unsigned threads) {
    const auto started = std::chrono::steady_clock::now();
    const auto pairs = sample_pairs(trials, max_digits, bases, seed);

    Findings findings = run_chunks(pairs.size(), threads, [&](std::size_t begin, std::size_t end, Findings& out) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto& [a, b] = pairs[i];
            check_pair(a, b, oracle_multiply(a, b), out);
        }
    });

    VerifyReport report;
    report.pairs.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        report.pairs.push_back(SampledPair{a.base().value(), render_natural(a), render_natural(b)});
    }
    finish(report, std::move(findings));
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

}  // namespace carrymul
