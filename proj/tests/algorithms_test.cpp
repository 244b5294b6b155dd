#include <gtest/gtest.h>

#include <random>
#include <tuple>
#include <vector>

#include "carrymul/algorithms.hpp"

namespace carrymul {
namespace {

const Base kTen{10};

Natural dec(const char* s) { return parse_natural(s, kTen); }

using StepTuple = std::tuple<std::size_t, std::string, int, std::string>;

std::vector<StepTuple> steps_of(const Trace& t) {
    std::vector<StepTuple> out;
    for (const auto& s : t.steps) {
        out.emplace_back(s.k, render_natural(s.s), s.r.value(), render_natural(s.c_next));
    }
    return out;
}

TEST(IncrementalMultiply, WorkedExample) {
    const Trace t = incremental_multiply(dec("1234"), dec("567"));
    EXPECT_EQ(render_natural(t.result), "699678");
    EXPECT_EQ(steps_of(t), (std::vector<StepTuple>{{0, "8638", 8, "863"}, {1, "8267", 7, "826"}, {2, "6996", 6, "699"}}));
    EXPECT_EQ(t.counters.digit_mults, 12u);
    EXPECT_EQ(t.counters.digit_adds, 17u);
    EXPECT_EQ(t.final_phase_adds, 0u);
}

TEST(IncrementalMultiply, OneSixtyTwoSquared) {
    const Trace t = incremental_multiply(dec("162"), dec("162"));
    EXPECT_EQ(render_natural(t.result), "26244");
    EXPECT_EQ(steps_of(t), (std::vector<StepTuple>{{0, "324", 4, "32"}, {1, "1004", 4, "100"}, {2, "262", 2, "26"}}));
}

TEST(IncrementalMultiply, ZeroMultiplierHasNoSteps) {
    const Trace t = incremental_multiply(dec("1234"), Natural(kTen));
    EXPECT_TRUE(t.steps.empty());
    EXPECT_TRUE(t.result.is_zero());
    EXPECT_EQ(t.counters, OpCounters{});
}

TEST(IncrementalMultiply, ZeroMultiplicandRunsEveryStep) {
    const Trace t = incremental_multiply(Natural(kTen), dec("507"));
    ASSERT_EQ(t.steps.size(), 3u);
    for (const auto& s : t.steps) {
        EXPECT_TRUE(s.s.is_zero());
        EXPECT_EQ(s.r, Digit(0));
        EXPECT_TRUE(s.c_next.is_zero());
    }
    EXPECT_TRUE(t.result.is_zero());
    EXPECT_EQ(t.result.size(), 0u);
}

TEST(IncrementalMultiply, SingleDigitMultiplier) {
    const Trace t = incremental_multiply(dec("1234"), dec("7"));
    ASSERT_EQ(t.steps.size(), 1u);
    EXPECT_EQ(render_natural(t.result), "8638");
}

TEST(IncrementalMultiply, ZeroFinalCarryLeavesNoLeadingZero) {
    const Trace t = incremental_multiply(dec("1"), dec("123"));
    EXPECT_TRUE(t.steps.back().c_next.is_zero());
    EXPECT_EQ(render_natural(t.result), "123");
}

TEST(IncrementalMultiply, BaseMismatch) {
    try {
        incremental_multiply(dec("1"), parse_natural("1", Base(3)));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BaseMismatch);
    }
}

TEST(SchoolbookMultiply, WorkedExampleRows) {
    const Trace t = schoolbook_multiply(dec("1234"), dec("567"));
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_EQ(render_natural(t.rows[0]), "8638");
    EXPECT_EQ(render_natural(t.rows[1]), "74040");
    EXPECT_EQ(render_natural(t.rows[2]), "617000");
    EXPECT_EQ(render_natural(t.result), "699678");
    EXPECT_EQ(t.counters.digit_mults, 12u);
    EXPECT_EQ(t.counters.digit_adds, 20u);
    EXPECT_EQ(t.final_phase_adds, 11u);
    EXPECT_TRUE(t.steps.empty());
}

TEST(SchoolbookMultiply, IdentityAndZero) {
    const Trace one_row = schoolbook_multiply(dec("4096"), dec("1"));
    ASSERT_EQ(one_row.rows.size(), 1u);
    EXPECT_EQ(one_row.rows[0], dec("4096"));
    EXPECT_EQ(one_row.result, dec("4096"));

    const Trace single = schoolbook_multiply(dec("1"), dec("7"));
    ASSERT_EQ(single.rows.size(), 1u);
    EXPECT_EQ(single.rows[0], dec("7"));

    const Trace zero = schoolbook_multiply(Natural(kTen), Natural(kTen));
    EXPECT_TRUE(zero.result.is_zero());
    EXPECT_TRUE(zero.rows.empty());
}

TEST(CheckInvariant, HoldsOnWorkedExample) {
    const Trace t = incremental_multiply(dec("1234"), dec("567"));
    EXPECT_EQ(check_invariant(t), (std::vector<bool>{true, true, true}));
}

TEST(CheckInvariant, VacuousOnEmptyTrace) {
    EXPECT_TRUE(check_invariant(incremental_multiply(dec("1234"), Natural(kTen))).empty());
}

TEST(CheckInvariant, CatchesPerturbedDigit) {
    Trace t = incremental_multiply(dec("1234"), dec("567"));
    t.steps[1].r = Digit(8);
    // k = 1: 8 + 80 + 100 * 826 = 82688 against 8638 + 74040 = 82678.
    EXPECT_EQ(check_invariant(t), (std::vector<bool>{true, false, false}));
}

TEST(CheckInvariant, CatchesPerturbedCarry) {
    Trace t = incremental_multiply(dec("1234"), dec("567"));
    t.steps[2].c_next = dec("700");
    EXPECT_EQ(check_invariant(t), (std::vector<bool>{true, true, false}));
}

TEST(CheckInvariant, CatchesDigitOutsideBase) {
    Trace t = incremental_multiply(dec("12"), dec("34"));
    t.steps[0].r = Digit(10);
    EXPECT_EQ(check_invariant(t), (std::vector<bool>{false, false}));
}

TEST(CheckInvariant, RejectsSchoolbookTrace) {
    try {
        check_invariant(schoolbook_multiply(dec("12"), dec("34")));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::WrongAlgorithm);
    }
}

TEST(Multiply, Facade) {
    EXPECT_EQ(render_natural(multiply(dec("1234"), dec("567"), Algorithm::Incremental)), "699678");
    EXPECT_EQ(render_natural(multiply(dec("567"), dec("1234"), Algorithm::Incremental)), "699678");
    EXPECT_EQ(multiply(dec("31337"), dec("1"), Algorithm::Schoolbook), dec("31337"));
    EXPECT_EQ(multiply(dec("31337"), dec("1"), Algorithm::Incremental), dec("31337"));
}

TEST(AlgorithmName, RoundTrip) {
    EXPECT_EQ(parse_algorithm(to_string(Algorithm::Incremental)), Algorithm::Incremental);
    EXPECT_EQ(parse_algorithm(to_string(Algorithm::Schoolbook)), Algorithm::Schoolbook);
    EXPECT_FALSE(parse_algorithm("karatsuba"));
}

Natural random_natural(std::mt19937_64& rng, Base base, std::size_t max_len) {
    std::vector<std::uint8_t> d(rng() % (max_len + 1));
    for (auto& x : d) x = static_cast<std::uint8_t>(rng() % base.value());
    return Natural(std::move(d), base);
}

TEST(AlgorithmsProperty, TheoremAndCrossChecks) {
    std::mt19937_64 rng(1234567);
    for (int trial = 0; trial < 3000; ++trial) {
        const Base base(2 + static_cast<int>(rng() % 35));
        const Natural a = random_natural(rng, base, 30);
        const Natural b = random_natural(rng, base, 30);
        const Trace inc = incremental_multiply(a, b);
        const Trace school = schoolbook_multiply(a, b);

        ASSERT_EQ(inc.steps.size(), b.size());
        for (bool ok : check_invariant(inc)) ASSERT_TRUE(ok);
        ASSERT_EQ(inc.result, school.result);
        ASSERT_EQ(multiply(b, a, Algorithm::Incremental), inc.result);
        ASSERT_EQ(multiply(b, a, Algorithm::Schoolbook), inc.result);
        ASSERT_EQ(inc.counters.digit_mults, a.size() * b.size());
        ASSERT_EQ(school.counters.digit_mults, a.size() * b.size());

        for (const auto& s : inc.steps) {
            ASSERT_TRUE(s.s.is_zero() || s.s.digits().back() != 0);
            ASSERT_TRUE(s.c_next.is_zero() || s.c_next.digits().back() != 0);
            auto [q, r] = divmod_base(s.s);
            ASSERT_EQ(q, s.c_next);
            ASSERT_EQ(r, s.r);
        }

        // The final carry written above r_{n-1} .. r_0 spells the product.
        if (!inc.steps.empty()) {
            std::string spelled = render_natural(inc.steps.back().c_next);
            if (spelled == "0") spelled.clear();
            for (auto it = inc.steps.rbegin(); it != inc.steps.rend(); ++it) spelled += digit_glyph(it->r);
            const auto first = spelled.find_first_not_of('0');
            spelled = first == std::string::npos ? "0" : spelled.substr(first);
            ASSERT_EQ(spelled, render_natural(inc.result));
        }
    }
}

TEST(AlgorithmsProperty, IdentityAndAnnihilator) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const Base base(2 + static_cast<int>(rng() % 35));
        const Natural a = random_natural(rng, base, 20);
        const Natural one({1}, base);
        for (auto alg : {Algorithm::Incremental, Algorithm::Schoolbook}) {
            ASSERT_EQ(multiply(a, one, alg), a);
            ASSERT_EQ(multiply(one, a, alg), a);
            ASSERT_TRUE(multiply(a, Natural(base), alg).is_zero());
            ASSERT_TRUE(multiply(Natural(base), a, alg).is_zero());
        }
    }
}

TEST(AlgorithmsProperty, ValueIndependentOfBase) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint64_t x = rng() >> 33;
        const std::uint64_t y = rng() >> 33;
        const Base b1(2 + static_cast<int>(rng() % 35));
        const Base b2(2 + static_cast<int>(rng() % 35));
        const auto in_b1 = multiply(from_machine_integer(x, b1), from_machine_integer(y, b1), Algorithm::Incremental);
        const auto in_b2 = multiply(from_machine_integer(x, b2), from_machine_integer(y, b2), Algorithm::Incremental);
        ASSERT_EQ(to_machine_integer(in_b1), to_machine_integer(in_b2));
        ASSERT_EQ(to_machine_integer(in_b1), x * y);
    }
}

TEST(Retention, IncrementalHoldsTwoSchoolbookHoldsAllRows) {
    const Trace inc = incremental_multiply(dec("1234"), dec("567"));
    const Trace school = schoolbook_multiply(dec("1234"), dec("567"));
    EXPECT_EQ(inc.retention.peak_vectors, 2u);
    EXPECT_EQ(inc.retention.peak_carries, 1u);
    EXPECT_EQ(school.retention.peak_vectors, 4u);
    EXPECT_EQ(school.retention.peak_rows, 3u);
}

}  // namespace
}  // namespace carrymul
