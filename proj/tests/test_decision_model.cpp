#include <doctest.h>

#include "greyrank/decision_model.hpp"
#include "greyrank/errors.hpp"
#include "test_support.hpp"

#include <cmath>
#include <numeric>
#include <random>

using greyrank::AttributeKind;
using greyrank::GreyInterval;

namespace {

constexpr double kTol = 1e-12;

bool close(const GreyInterval& a, const GreyInterval& b, double tol = kTol) {
    return std::abs(a.lo() - b.lo()) <= tol && std::abs(a.hi() - b.hi()) <= tol;
}

} // namespace

TEST_CASE("effect column normalization") {
    SUBCASE("Table 1 column G1") {
        // lows 6,7,5,6,7 sum to 31; highs 8,9,7,7,8 sum to 39
        const std::vector<GreyInterval> g1{{6, 8}, {7, 9}, {5, 7}, {6, 7}, {7, 8}};
        const auto x = greyrank::normalize_effect_column(g1, "G1");
        REQUIRE(x.size() == 5);
        CHECK(close(x[0], {6.0 / 39.0, 8.0 / 31.0}));
        CHECK(std::abs(x[0].lo() - 0.15385) < 5e-6);
        CHECK(std::abs(x[0].hi() - 0.25806) < 5e-6);
    }
    SUBCASE("singleton degenerate") {
        const std::vector<GreyInterval> c{{4, 4}};
        CHECK(close(greyrank::normalize_effect_column(c)[0], {1, 1}));
    }
    SUBCASE("two identical degenerate entries") {
        const std::vector<GreyInterval> c{{3, 3}, {3, 3}};
        const auto x = greyrank::normalize_effect_column(c);
        CHECK(close(x[0], {0.5, 0.5}));
        CHECK(close(x[1], {0.5, 0.5}));
    }
    SUBCASE("zero lower-bound sum names the attribute") {
        const std::vector<GreyInterval> c{{0, 1}, {0, 2}};
        CHECK_THROWS_WITH_AS(greyrank::normalize_effect_column(c, "speed"),
                             doctest::Contains("'speed'"), greyrank::ComputationError);
    }
}

TEST_CASE("cost column normalization") {
    SUBCASE("single plan [2,4]") {
        const std::vector<GreyInterval> c{{2, 4}};
        CHECK(close(greyrank::normalize_cost_column(c)[0], {0.5, 2.0}));
    }
    SUBCASE("two identical degenerate entries") {
        const std::vector<GreyInterval> c{{5, 5}, {5, 5}};
        const auto x = greyrank::normalize_cost_column(c);
        CHECK(close(x[0], {0.5, 0.5}));
        CHECK(close(x[1], {0.5, 0.5}));
    }
    SUBCASE("single degenerate plan") {
        const std::vector<GreyInterval> c{{7, 7}};
        CHECK(close(greyrank::normalize_cost_column(c)[0], {1, 1}));
    }
    SUBCASE("zero lower bound names the cell") {
        const std::vector<GreyInterval> c{{1, 2}, {0, 3}};
        const std::vector<std::string> plans{"A1", "A2"};
        CHECK_THROWS_WITH_AS(greyrank::normalize_cost_column(c, "price", plans), doctest::Contains("A2.price"),
                             greyrank::ComputationError);
    }
}

TEST_CASE("normalize whole problems") {
    SUBCASE("Table 1 G1 column matches the column operation") {
        const auto p = test_support::table1();
        const auto x = greyrank::normalize(p);
        REQUIRE(x.rows() == 5);
        REQUIRE(x.cols() == 5);
        const auto col = greyrank::normalize_effect_column(p.matrix.column(0));
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(x(i, 0) == col[i]);
    }
    SUBCASE("1x1 effect problem") {
        greyrank::DecisionProblem p;
        p.plans = {"A"};
        p.attributes = {{"G", AttributeKind::Effect}};
        p.matrix = greyrank::IntervalMatrix(1, 1, GreyInterval(3, 3));
        p.expert_weights = {{1.0}};
        CHECK(close(greyrank::normalize(p)(0, 0), {1, 1}));
        CHECK_THROWS_AS(p.validate(), greyrank::ValidationError);  // ranking needs two plans
    }
    SUBCASE("permuting columns permutes the output") {
        std::mt19937_64 rng(3);
        auto p = test_support::random_problem(rng, 4, 3);
        const auto x = greyrank::normalize(p);
        auto q = p;
        const std::size_t perm[3] = {2, 0, 1};
        for (std::size_t j = 0; j < 3; ++j) {
            q.attributes[j] = p.attributes[perm[j]];
            for (std::size_t i = 0; i < 4; ++i)
                q.matrix(i, j) = p.matrix(i, perm[j]);
        }
        const auto y = greyrank::normalize(q);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(y(i, j) == x(i, perm[j]));
    }
}

TEST_CASE("normalization properties on random problems") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> plans(2, 8), attrs(1, 6);
    std::uniform_real_distribution<double> factor(0.1, 50.0);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = test_support::random_problem(rng, plans(rng), attrs(rng));
        const auto x = greyrank::normalize(p);
        const double c = factor(rng);
        auto scaled = p;
        for (std::size_t i = 0; i < p.plan_count(); ++i)
            for (std::size_t j = 0; j < p.attribute_count(); ++j)
                scaled.matrix(i, j) = greyrank::scale(c, p.matrix(i, j));
        const auto xs = greyrank::normalize(scaled);
        for (std::size_t j = 0; j < x.cols(); ++j) {
            double sum_lo = 0.0, sum_hi = 0.0;
            for (std::size_t i = 0; i < x.rows(); ++i) {
                sum_lo += x(i, j).lo();
                sum_hi += x(i, j).hi();
                CHECK(x(i, j).lo() >= 0.0);
                CHECK(close(x(i, j), xs(i, j)));
            }
            CHECK(sum_lo <= 1.0 + kTol);
            CHECK(sum_hi >= 1.0 - kTol);
        }
    }
}

TEST_CASE("degenerate effect normalization is classical sum normalization") {
    const std::vector<double> a{2.0, 3.0, 5.0, 10.0};
    std::vector<GreyInterval> col;
    for (double v : a)
        col.push_back(GreyInterval::point(v));
    const auto x = greyrank::normalize_effect_column(col);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(close(x[i], GreyInterval::point(a[i] / 20.0)));
}

TEST_CASE("problem validation") {
    auto p = test_support::table1();
    CHECK_NOTHROW(p.validate());

    SUBCASE("negative lower bound names the cell") {
        p.matrix(1, 2) = {-1, 2};
        CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("A2.G3"), greyrank::ValidationError);
    }
    SUBCASE("expert weights must sum to one") {
        p.expert_weights = {{0.2, 0.2, 0.2, 0.2, 0.3}};
        CHECK_THROWS_AS(p.validate(), greyrank::ValidationError);
    }
    SUBCASE("ragged expert weights") {
        p.expert_weights = {{0.5, 0.5}};
        CHECK_THROWS_AS(p.validate(), greyrank::ValidationError);
    }
    SUBCASE("preferences must lie in [0,1]") {
        (*p.preferences)[0] = {6, 8};
        CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("A1"), greyrank::ValidationError);
    }
    SUBCASE("theta coefficients") {
        p.params.theta_plus = 0.7;
        p.params.theta_minus = 0.2;
        CHECK_THROWS_AS(p.validate(), greyrank::ValidationError);
        p.params.theta_plus = 0.6;
        p.params.theta_minus = 0.0;
        CHECK_THROWS_AS(p.validate(), greyrank::ValidationError);
        p.params.theta_plus = 1.0;
        CHECK_NOTHROW(p.validate());
    }
    SUBCASE("rho in (0,1)") {
        p.params.rho = 1.0;
        CHECK_THROWS_AS(p.validate(), greyrank::ValidationError);
    }
    SUBCASE("duplicate names") {
        p.plans[1] = "A1";
        CHECK_THROWS_AS(p.validate(), greyrank::ValidationError);
    }
}
