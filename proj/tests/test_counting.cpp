#include "oracles.hpp"

#include "slopepanel/counting.hpp"
#include "slopepanel/errors.hpp"

#include <doctest.h>

using namespace slopepanel;

namespace {

CountingConfig config(const VarietyModel& model, std::int64_t br = 1, std::int64_t outside = 0) {
    CountingConfig cfg;
    cfg.q = 2;
    cfg.br = br;
    cfg.m_cap = std::max<std::int64_t>(1, std::max(br, outside));
    cfg.beta = IntVector(model.rho, 0);
    cfg.outside_xi = outside;
    cfg.eps = EpsSchedule::power(1, Rational(1, 2));
    cfg.delta = Rational(1, 10);
    return cfg;
}

VarietyModel with_minus_k(IntVector minus_k) {
    auto model = toy_rho2();
    model.minus_k = std::move(minus_k);
    model.rho = model.minus_k.size();
    return model;
}

}  // namespace

TEST_CASE("r_min is the gcd of -K") {
    CHECK(r_min(with_minus_k({2, 4})) == 2);
    CHECK(r_min(with_minus_k({1, 1})) == 1);
    CHECK(r_min(with_minus_k({6, 10, 15})) == 1);
    CHECK(r_min(toy_rho1(3)) == 3);
    CHECK_THROWS_AS(r_min(with_minus_k({0, 0})), Error);
}

TEST_CASE("lattice slices agree with a box scan") {
    const std::vector<std::vector<IntVector>> cones{
        {{1, 0}, {0, 1}},
        {{1, -1}, {0, 1}},
        {{2, -1}, {-1, 2}},
        {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
        {{1, 0, 0}, {0, 1, 0}, {-1, -1, 3}},
    };
    const std::vector<IntVector> functionals{{1, 1}, {2, 1}, {1, 3}, {1, 1, 1}, {1, 2, 3}};
    for (const auto& facets : cones) {
        const std::size_t dim = facets.front().size();
        for (const auto& f : functionals) {
            if (f.size() != dim) continue;
            for (std::int64_t bound = 0; bound <= 7; ++bound) {
                CHECK(lattice_points_in_slice(facets, f, bound) == oracle::slice(facets, f, bound, 8));
            }
        }
    }
    CHECK(lattice_slice(toy_rho2(), 2).size() == 5);
    for (std::int64_t c = 1; c <= 4; ++c) {
        for (std::int64_t bound = 0; bound <= 20; ++bound) {
            CHECK(lattice_slice(toy_rho1(c), bound).size() == static_cast<std::size_t>(bound / c));
        }
    }
}

TEST_CASE("unbounded slices are rejected") {
    CHECK_THROWS_AS(lattice_points_in_slice({{1, 0}, {0, 1}}, {1, -1}, 3), Error);
    CHECK_THROWS_AS(lattice_points_in_slice({{1, 0}}, {1, 0}, 3), Error);
}

TEST_CASE("count examples") {
    const auto rho1 = toy_rho1(1);
    CHECK(count_N(rho1, config(rho1), 3) == 14);
    const auto rho2 = toy_rho2();
    CHECK(count_N(rho2, config(rho2), 2) == 16);
    CHECK(count_N(rho2, config(rho2, 0), 5) == 0);

    // moving beta off the origin puts the axis classes outside the translate
    auto cfg = config(rho2, 1, 0);
    cfg.beta = {1, 1};
    CHECK(count_N(rho2, cfg, 2) == 4);
    CHECK(xi(rho2, cfg, {1, 1}) == 1);
    CHECK(xi(rho2, cfg, {2, 0}) == 0);
    CHECK_THROWS_AS(count_N(rho2, cfg, 0), Error);
}

TEST_CASE("rank-one closed form") {
    for (std::int64_t c = 1; c <= 3; ++c) {
        const auto model = toy_rho1(c);
        for (std::int64_t br = 0; br <= 2; ++br) {
            auto cfg = config(model, br);
            cfg.q = Rational(3, 2);
            for (std::int64_t d = 1; d <= 8; ++d) {
                // degrees k c for k = 1..d
                Rational expected = 0;
                for (std::int64_t k = 1; k <= d; ++k) expected += br * pow(cfg.q, static_cast<unsigned>(k * c));
                CHECK(count_N(model, cfg, d) == expected);
            }
        }
    }
}

TEST_CASE("liberated counts") {
    const auto model = toy_rho1(1);
    auto cfg = config(model);
    // 1 - 2/k never exceeds 1
    cfg.eps = EpsSchedule::table({{1, 1}});
    for (std::int64_t d = 1; d <= 10; ++d) CHECK(count_N_liberated(model, cfg, d) == 0);

    // 1 - 2/k > 1/2 exactly when k > 4
    cfg.eps = EpsSchedule::table({{1, Rational(1, 2)}});
    for (std::int64_t d = 1; d <= 10; ++d) {
        Rational expected = 0;
        for (std::int64_t k = 5; k <= d; ++k) expected += pow(Rational(2), static_cast<unsigned>(k));
        CHECK(count_N_liberated(model, cfg, d) == expected);
    }
}

TEST_CASE("eps schedules") {
    const auto root = EpsSchedule::power(1, Rational(1, 2));
    CHECK(root.exceeded_by(Rational(1, 2), 5));
    CHECK_FALSE(root.exceeded_by(Rational(1, 2), 4));
    CHECK_FALSE(root.exceeded_by(Rational(1, 2), 3));
    CHECK_FALSE(root.exceeded_by(-1, 100));
    CHECK(root.describe(4) == "1*4^(-1/2)");
    CHECK(EpsSchedule::power(3, 2).describe(3) == "1/3");

    const auto table = EpsSchedule::table({{5, Rational(1, 4)}, {1, Rational(1, 2)}});
    CHECK(table.describe(4) == "1/2");
    CHECK(table.describe(9) == "1/4");
    CHECK_THROWS_AS(table.describe(0), Error);
    CHECK_THROWS_AS(EpsSchedule::table({{1, 1}, {2, 2}}), Error);
    CHECK_THROWS_AS(EpsSchedule::power(0, 1), Error);
    CHECK_THROWS_AS(EpsSchedule::power(1, 0), Error);
}

TEST_CASE("config checks") {
    const auto model = toy_rho2();
    auto cfg = config(model);
    cfg.q = 1;
    CHECK_THROWS_AS(check_config(model, cfg), Error);
    cfg = config(model);
    cfg.br = 2;
    CHECK_THROWS_AS(check_config(model, cfg), Error);
    cfg = config(model);
    cfg.beta = {0};
    CHECK_THROWS_AS(check_config(model, cfg), Error);
    cfg = config(model);
    cfg.delta = 1;
    CHECK_THROWS_AS(check_config(model, cfg), Error);
}

TEST_CASE("ratio check") {
    const auto model = toy_rho2();
    const auto cfg = config(model);
    const auto report = ratio_check(model, cfg, 1, 12);
    REQUIRE(report.rows.size() == 12);
    REQUIRE(report.d0);
    CHECK(*report.d0 == 8);
    for (const auto& row : report.rows) {
        CHECK(row.n == count_N(model, cfg, row.d));
        CHECK(row.n_liberated == count_N_liberated(model, cfg, row.d));
        CHECK(row.n_liberated <= row.n);
        CHECK(row.points == lattice_slice(model, row.d).size());
        if (row.d >= *report.d0) CHECK(*row.ratio > Rational(9, 10));
    }
    CHECK_FALSE(*report.rows[6].ratio > Rational(9, 10));

    const auto empty = ratio_check(model, config(model, 0), 1, 3);
    CHECK_FALSE(empty.d0);
    CHECK_FALSE(empty.rows[0].ratio);
    const auto tsv = format_report_tsv(empty);
    CHECK(tsv.find("1\t2\t0\t0\t0\tNA\n") != std::string::npos);
    CHECK(tsv.ends_with("# d0\tnone\n"));
}

TEST_CASE("slice growth is quadratic on the quadrant") {
    const auto model = toy_rho2();
    for (std::int64_t d = 1; d <= 30; ++d) {
        CHECK(lattice_slice(model, d).size() == static_cast<std::size_t>(d * (d + 3) / 2));
    }
}
