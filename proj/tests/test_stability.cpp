#include "oracles.hpp"

#include "slopepanel/errors.hpp"
#include "slopepanel/stability.hpp"

#include <doctest.h>

using namespace slopepanel;

namespace {

template <class Fn>
std::string error_text(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return std::string(e.name()) + ": " + e.what();
    }
    return "no error";
}

}  // namespace

TEST_CASE("balance step examples") {
    CHECK(balance_step({2, 1, 0}) == SplittingType{2, 2, 2});
    CHECK(balance_step({1, 1}) == SplittingType{2, 2});
    CHECK(balance_step({2, 1, 0, -1, -2}) == SplittingType{1, 1, 0, -1, -1});
    CHECK(balance_step({2, 1, 0, -1, -2}, SmoothingPolicy::Best) == SplittingType{0, 0, 0, 0, 0});
}

TEST_CASE("balance step preconditions") {
    CHECK(error_text([] { balance_step({1, 0}); }).starts_with("NonIntegerSlope"));
    CHECK(error_text([] { balance_step({1, 0}); }).find("glue 2 copies") != std::string::npos);
    CHECK(error_text([] { balance_step({0, 0, 0, 0, 0, 0}); }).starts_with("RankTooLarge"));
    CHECK(error_text([] { balance_step({2, 0, -2}); }).starts_with("NotSequential"));
    CHECK(integer_slope_copy_factor({2, 1, 1, 0}) == 1);
    CHECK(integer_slope_copy_factor({1, 1, 0, 0}) == 2);
    CHECK(integer_slope_copy_factor({1, 0, 0}) == 3);
}

TEST_CASE("balance traces") {
    const auto a = balance({2, 1, 0}, 8);
    CHECK(a.steps == 1);
    CHECK(a.copies == 2);
    CHECK(a.converged);
    CHECK(a.final_state() == SplittingType{2, 2, 2});

    const auto b = balance({1, 1, 1, 1, 1}, 8);
    CHECK(b.steps == 0);
    CHECK(b.copies == 1);
    CHECK(b.states.size() == 1);

    const auto c = balance({2, 1, 0, -1, -2}, 8);
    CHECK(c.steps == 2);
    CHECK(c.copies == 4);
    CHECK(c.final_state() == SplittingType{0, 0, 0, 0, 0});

    const auto capped = balance({2, 1, 0, -1, -2}, 1);
    CHECK(capped.steps == 1);
    CHECK_FALSE(capped.converged);
}

TEST_CASE("balancing laws over every sequential slope-0 type up to rank 5") {
    for (std::size_t r = 1; r <= kMaxBalanceRank; ++r) {
        for (const auto& t : oracle::sequential_slope_zero(r)) {
            const auto next = balance_step(t);
            CHECK(balance_width(next) <= balance_width(t));
            CHECK(next.total_degree() == 2 * t.total_degree());
            if (balance_width(t) == 0) CHECK(balance(t, 4).steps == 0);

            const auto trace = balance(t, 8);
            CHECK(trace.converged);
            CHECK(trace.steps <= (r <= 4 ? 1u : 2u));

            // shifting by c shifts state k by 2^k c
            for (std::int64_t shift : {-3, 2, 5}) {
                const auto moved = balance(t.shifted(shift), 8);
                REQUIRE(moved.steps == trace.steps);
                for (std::size_t k = 0; k < trace.states.size(); ++k) {
                    CHECK(moved.states[k] == trace.states[k].shifted(shift << k));
                }
            }
        }
    }
}

TEST_CASE("filtration data") {
    CHECK(error_text([] { FiltrationData({{2, 1}, {1, 1}}); }).starts_with("InvalidFiltration"));
    CHECK(error_text([] { FiltrationData({{2, 1}, {1, 2}}); }).starts_with("InvalidFiltration"));
    CHECK(error_text([] { FiltrationData({{0, 1}}); }).starts_with("InvalidFiltration"));
    CHECK(error_text([] { FiltrationData({}); }).starts_with("InvalidFiltration"));
}

TEST_CASE("restriction bounds") {
    const auto single = hn_restriction_bounds(FiltrationData({{4, Rational(7, 3)}}));
    CHECK(single.expected == std::vector<Rational>(4, Rational(7, 3)));
    CHECK(single.bound == 2);

    const auto two = hn_restriction_bounds(FiltrationData({{2, 3}, {3, Rational(4, 3)}}));
    const std::vector<Rational> expected{3, 3, Rational(4, 3), Rational(4, 3), Rational(4, 3)};
    CHECK(two.expected == expected);
    CHECK(two.bound == Rational(3, 2));

    const FiltrationData f({{2, 3}, {3, Rational(4, 3)}});
    CHECK(sp_feasible({3, 3, 2, 1, 1}, f));
    CHECK_FALSE(sp_feasible({5, 1, 1, 1, 1}, f));
    CHECK_THROWS_AS(sp_feasible({1, 1}, f), Error);
}

TEST_CASE("single-piece feasibility is the width condition around the slope") {
    for (std::size_t r = 1; r <= 5; ++r) {
        for (std::int64_t d = -6; d <= 6; ++d) {
            const auto mu = Rational(d, static_cast<std::int64_t>(r));
            const FiltrationData f({{static_cast<std::int64_t>(r), mu}});
            const Rational half(static_cast<std::int64_t>(r), 2);
            for (const auto& t : enumerate_types(r, d, -8, 8)) {
                const bool expected = Rational(t.largest()) - mu < half && mu - Rational(t.smallest()) < half;
                CHECK(sp_feasible(t, f) == expected);
                if (is_sequential(t)) CHECK(sp_feasible(t, f));
            }
        }
    }
}

TEST_CASE("minimal slope ratio lower bound") {
    CHECK(minimal_slope_ratio_lower_bound(3, 9) == Rational(1, 2));
    CHECK(minimal_slope_ratio_lower_bound(5, 25) == Rational(1, 2));
    Rational previous = minimal_slope_ratio_lower_bound(3, 1);
    for (std::int64_t deg = 2; deg < 200; ++deg) {
        const auto v = minimal_slope_ratio_lower_bound(3, deg);
        CHECK(v > previous);
        CHECK(v < 1);
        previous = v;
    }
    CHECK_THROWS_AS(minimal_slope_ratio_lower_bound(3, 0), Error);
}
