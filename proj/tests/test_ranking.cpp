#include <doctest.h>

#include "greyrank/errors.hpp"
#include "greyrank/ranking.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using greyrank::GreyInterval;
using greyrank::IntervalMatrix;

namespace {

constexpr double kTol = 1e-12;

IntervalMatrix from_rows(std::initializer_list<std::initializer_list<GreyInterval>> rows) {
    IntervalMatrix x(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (const auto& v : r)
            x(i, j++) = v;
        ++i;
    }
    return x;
}

IntervalMatrix random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    IntervalMatrix y(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double a = u(rng), b = u(rng);
            y(i, j) = {std::min(a, b), std::max(a, b)};
        }
    return y;
}

const std::vector<double> kPaperTopsis{0.9938, 0.0461, 0.0298, 0.0273, 0.9663};
const std::vector<double> kPaperIncidence{0.6802, 0.3305, 0.3289, 0.3263, 0.6760};
const std::vector<double> kPaperEntropy{0.9435, 0.5210, 0.5215, 0.5199, 0.9294};

} // namespace

TEST_CASE("preference blend") {
    const auto x = from_rows({{{0.2, 0.4}}});
    const std::optional<std::vector<GreyInterval>> q = std::vector<GreyInterval>{{0.4, 0.6}};
    const auto z = greyrank::blend_preference(x, q);
    CHECK(std::abs(z(0, 0).lo() - 0.3) < kTol);
    CHECK(std::abs(z(0, 0).hi() - 0.5) < kTol);

    const std::optional<std::vector<GreyInterval>> same = std::vector<GreyInterval>{{0.2, 0.4}};
    CHECK(greyrank::blend_preference(x, same)(0, 0) == x(0, 0));
    CHECK(greyrank::blend_preference(x, std::nullopt) == x);

    const std::optional<std::vector<GreyInterval>> wrong = std::vector<GreyInterval>{{0.2, 0.4}, {0.1, 0.1}};
    CHECK_THROWS_AS(greyrank::blend_preference(x, wrong), greyrank::ValidationError);
}

TEST_CASE("weighted matrix") {
    const auto z = from_rows({{{0.2, 0.3}, {0.4, 0.5}}, {{0.1, 0.6}, {0.0, 0.2}}});
    const std::vector<GreyInterval> w{{1, 1}, {0, 0}};
    const auto y = greyrank::weighted_matrix(z, w);
    CHECK(y.blended == z);
    CHECK(y.weighted(0, 0) == z(0, 0));
    CHECK(y.weighted(1, 0) == z(1, 0));
    CHECK(y.weighted(0, 1) == GreyInterval(0, 0));
    CHECK(y.weighted(1, 1) == GreyInterval(0, 0));

    const std::vector<GreyInterval> w2{{0.5, 0.6}, {0.5, 0.6}};
    const auto y2 = greyrank::weighted_matrix(z, w2);
    CHECK(std::abs(y2.weighted(0, 0).lo() - 0.10) < kTol);
    CHECK(std::abs(y2.weighted(0, 0).hi() - 0.18) < kTol);

    const std::vector<GreyInterval> w3{{0.5, 0.6}};
    CHECK_THROWS_AS(greyrank::weighted_matrix(z, w3), greyrank::ValidationError);
}

TEST_CASE("ideal vectors") {
    const auto ideals = greyrank::ideal_vectors(from_rows({{{1, 2}}, {{0, 3}}}));
    CHECK(ideals.positive[0] == GreyInterval(1, 3));
    CHECK(ideals.negative[0] == GreyInterval(0, 2));

    const auto single = from_rows({{{1, 2}, {3, 4}}});
    const auto s = greyrank::ideal_vectors(single);
    CHECK(s.positive == std::vector<GreyInterval>{{1, 2}, {3, 4}});
    CHECK(s.negative == s.positive);

    const auto dup = greyrank::ideal_vectors(from_rows({{{1, 2}, {3, 4}}, {{1, 2}, {3, 4}}}));
    CHECK(dup.positive == s.positive);
    CHECK(dup.negative == s.positive);
}

TEST_CASE("ideal vectors bound every row") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const auto y = random_matrix(rng, 4, 3);
        const auto id = greyrank::ideal_vectors(y);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK(id.negative[j].lo() <= y(i, j).lo());
                CHECK(y(i, j).lo() <= id.positive[j].lo());
                CHECK(id.negative[j].hi() <= y(i, j).hi());
                CHECK(y(i, j).hi() <= id.positive[j].hi());
            }
    }
}

TEST_CASE("grey TOPSIS") {
    SUBCASE("ideal rows") {
        const auto y = from_rows({{{0.3, 0.5}, {0.2, 0.4}}, {{0.1, 0.2}, {0.1, 0.1}}, {{0.2, 0.3}, {0.15, 0.3}}});
        const auto r = greyrank::topsis_scores(y, greyrank::ideal_vectors(y));
        CHECK(r.scores[0] == 1.0);
        CHECK(r.scores[1] == 0.0);
        CHECK(r.ranks == std::vector<int>{1, 3, 2});
    }
    SUBCASE("identical plans score 0.5 with a flag") {
        const auto y = from_rows({{{0.3, 0.5}}, {{0.3, 0.5}}});
        const auto r = greyrank::topsis_scores(y, greyrank::ideal_vectors(y));
        CHECK(r.scores == std::vector<double>{0.5, 0.5});
        CHECK(r.tied);
        CHECK(std::any_of(r.flags.begin(), r.flags.end(),
                          [](const std::string& f) { return f.find("degenerate") != std::string::npos; }));
    }
    SUBCASE("published scores rank A1 > A5 > A2 > A3 > A4") {
        CHECK(greyrank::scores_to_ranks(kPaperTopsis).ranks == std::vector<int>{1, 3, 4, 5, 2});
    }
}

TEST_CASE("grey TOPSIS properties") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> factor(0.01, 100.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto y = random_matrix(rng, 2 + trial % 6, 1 + trial % 4);
        const auto r = greyrank::topsis_scores(y, greyrank::ideal_vectors(y));
        for (double c : r.scores) {
            CHECK(c >= 0.0);
            CHECK(c <= 1.0);
        }
        const double k = factor(rng);
        IntervalMatrix scaled(y.rows(), y.cols());
        for (std::size_t i = 0; i < y.rows(); ++i)
            for (std::size_t j = 0; j < y.cols(); ++j)
                scaled(i, j) = greyrank::scale(k, y(i, j));
        const auto rs = greyrank::topsis_scores(scaled, greyrank::ideal_vectors(scaled));
        for (std::size_t i = 0; i < y.rows(); ++i)
            CHECK(std::abs(rs.scores[i] - r.scores[i]) < 1e-12);
    }
}

TEST_CASE("incidence coefficients") {
    SUBCASE("global minimum and maximum cells") {
        // distances to the positive ideal: 0 for A1 and sqrt(0.02) for A2
        const auto y = from_rows({{{0.3, 0.5}}, {{0.2, 0.4}}});
        const auto r = greyrank::incidence_coefficients(y, greyrank::ideal_vectors(y), 0.5);
        CHECK(r.r_plus(0, 0) == 1.0);
        CHECK(std::abs(r.r_plus(1, 0) - 1.0 / 3.0) < kTol);
        CHECK(r.r_minus(1, 0) == 1.0);
        CHECK(std::abs(r.r_minus(0, 0) - 1.0 / 3.0) < kTol);
    }
    SUBCASE("constant distance field") {
        greyrank::IdealVectors ideals{{{1, 1}, {1, 1}}, {{0, 0}, {0, 0}}};
        const auto y = from_rows({{{0.5, 0.5}, {0.5, 0.5}}, {{0.5, 0.5}, {0.5, 0.5}}});
        const auto r = greyrank::incidence_coefficients(y, ideals, 0.5);
        for (double v : r.r_plus.data())
            CHECK(v == 1.0);
        CHECK_FALSE(r.degenerate_plus);
    }
    SUBCASE("all distances zero") {
        const auto y = from_rows({{{0.5, 0.6}}, {{0.5, 0.6}}});
        const auto r = greyrank::incidence_coefficients(y, greyrank::ideal_vectors(y), 0.5);
        CHECK(r.degenerate_plus);
        CHECK(r.degenerate_minus);
        for (double v : r.r_plus.data())
            CHECK(v == 1.0);
    }
    SUBCASE("rho outside (0,1)") {
        const auto y = from_rows({{{0.3, 0.5}}, {{0.2, 0.4}}});
        CHECK_THROWS_AS(greyrank::incidence_coefficients(y, greyrank::ideal_vectors(y), 1.0),
                        greyrank::ValidationError);
    }
}

TEST_CASE("incidence coefficients: range, normality and scale invariance") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> factor(0.01, 100.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto y = random_matrix(rng, 2 + trial % 6, 1 + trial % 4);
        const auto ideals = greyrank::ideal_vectors(y);
        const auto r = greyrank::incidence_coefficients(y, ideals, 0.5);
        for (const auto* field : {&r.r_plus, &r.r_minus}) {
            bool has_one = false;
            for (double v : field->data()) {
                CHECK(v > 0.0);
                CHECK(v <= 1.0);
                has_one = has_one || v == 1.0;
            }
            CHECK(has_one);
        }
        const auto g = greyrank::incidence_degrees(r);
        for (std::size_t i = 0; i < y.rows(); ++i) {
            CHECK(g.plus[i] > 0.0);
            CHECK(g.plus[i] <= 1.0);
            CHECK(g.minus[i] > 0.0);
            CHECK(g.minus[i] <= 1.0);
        }

        const double k = factor(rng);
        IntervalMatrix scaled(y.rows(), y.cols());
        for (std::size_t i = 0; i < y.rows(); ++i)
            for (std::size_t j = 0; j < y.cols(); ++j)
                scaled(i, j) = greyrank::scale(k, y(i, j));
        const auto rs = greyrank::incidence_coefficients(scaled, greyrank::ideal_vectors(scaled), 0.5);
        for (std::size_t c = 0; c < r.r_plus.data().size(); ++c) {
            CHECK(std::abs(rs.r_plus.data()[c] - r.r_plus.data()[c]) < 1e-12);
            CHECK(std::abs(rs.r_minus.data()[c] - r.r_minus.data()[c]) < 1e-12);
        }
    }
}

TEST_CASE("incidence degrees") {
    greyrank::IncidenceMatrices r;
    r.r_plus = greyrank::Grid<double>(2, 2, 1.0);
    r.r_minus = greyrank::Grid<double>(2, 2, 1.0);
    r.r_plus(1, 0) = 1.0 / 3.0;
    const auto g = greyrank::incidence_degrees(r);
    CHECK(g.plus[0] == 1.0);
    CHECK(std::abs(g.plus[1] - 2.0 / 3.0) < kTol);

    greyrank::IncidenceMatrices single;
    single.r_plus = greyrank::Grid<double>(1, 1, 0.4);
    single.r_minus = greyrank::Grid<double>(1, 1, 0.7);
    const auto gs = greyrank::incidence_degrees(single);
    CHECK(gs.plus[0] == 0.4);
    CHECK(gs.minus[0] == 0.7);
}

TEST_CASE("incidence relative approach degree") {
    const std::vector<double> gp{0.6, 0.8}, gm{0.6, 0.4};
    const auto r = greyrank::incidence_scores(gp, gm, 0.5, 0.5);
    CHECK(std::abs(r.scores[0] - 0.5) < kTol);
    CHECK(std::abs(r.scores[1] - 0.8 / 1.2) < kTol);

    const auto pure = greyrank::incidence_scores(gp, gm, 1.0, 0.0);
    CHECK(pure.scores == gp);

    CHECK_THROWS_AS(greyrank::incidence_scores(gp, gm, 0.6, 0.6), greyrank::ValidationError);
    CHECK(greyrank::scores_to_ranks(kPaperIncidence).ranks == std::vector<int>{1, 3, 4, 5, 2});
}

TEST_CASE("max-entropy weights") {
    const auto zero = greyrank::logistic_weights(0.0);
    CHECK(zero.beta1 == 0.5);
    CHECK(zero.beta2 == 0.5);

    const std::vector<double> gp{1.0}, gm{0.5};
    const auto w = greyrank::max_entropy_weights(gp, gm);
    CHECK(w.exponent == 0.5);
    CHECK(std::abs(w.beta1 - std::exp(0.5) / (1.0 + std::exp(0.5))) < 1e-15);
    CHECK(std::abs(w.beta1 - 0.62246) < 5e-6);

    const auto big = greyrank::logistic_weights(1e4);
    CHECK(big.beta1 == 1.0);
    CHECK(big.beta2 == 0.0);
    const auto small = greyrank::logistic_weights(-1e4);
    CHECK(small.beta1 == 0.0);
    CHECK(small.beta2 == 1.0);

    for (double s = -50.0; s <= 50.0; s += 0.37) {
        const auto l = greyrank::logistic_weights(s);
        CHECK(std::abs(l.beta1 + l.beta2 - 1.0) <= 1e-15);
        CHECK(std::abs(l.beta1 - 1.0 / (1.0 + std::exp(-s))) < 1e-15);
    }
}

TEST_CASE("comprehensive incidence degree") {
    const std::vector<double> gp{1.0, 1.0, 0.5}, gm{1.0 / 3.0, 0.5, 0.2};
    const auto r = greyrank::entropy_incidence_scores(gp, gm, 0.5, 0.5);
    CHECK(std::abs(r.scores[0] - 5.0 / 6.0) < kTol);
    CHECK(std::abs(r.scores[0] - 0.83333) < 5e-6);
    // equal G+: the plan with the smaller G- wins
    CHECK(r.scores[0] > r.scores[1]);
    CHECK_THROWS_AS(greyrank::entropy_incidence_scores(gp, gm, 0.7, 0.7), greyrank::ValidationError);
    CHECK(greyrank::scores_to_ranks(kPaperEntropy).ranks == std::vector<int>{1, 4, 3, 5, 2});
}

TEST_CASE("scores to ranks") {
    const auto ties = greyrank::scores_to_ranks(std::vector<double>{0.3, 0.3, 0.3, 0.3});
    CHECK(ties.ranks == std::vector<int>{1, 2, 3, 4});
    CHECK(ties.tied);
    const auto partial = greyrank::scores_to_ranks(std::vector<double>{0.1, 0.5, 0.1});
    CHECK(partial.ranks == std::vector<int>{2, 1, 3});
    CHECK(partial.order == std::vector<std::size_t>{1, 0, 2});
    CHECK(partial.tied);
    CHECK_FALSE(greyrank::scores_to_ranks(kPaperTopsis).tied);
    CHECK_THROWS_AS(greyrank::scores_to_ranks(std::vector<double>{0.1, NAN}), greyrank::ValidationError);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> s(6), t(6);
        for (std::size_t i = 0; i < 6; ++i) {
            s[i] = u(rng);
            t[i] = std::exp(2.0 * s[i]) + 1.0;
        }
        CHECK(greyrank::scores_to_ranks(s).ranks == greyrank::scores_to_ranks(t).ranks);
    }
}

TEST_CASE("weighted Borda") {
    const std::vector<std::vector<int>> paper{{1, 3, 4, 5, 2}, {1, 3, 4, 5, 2}, {1, 4, 3, 5, 2}};
    const std::vector<double> uniform{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    const auto b = greyrank::weighted_borda(paper, uniform);
    const std::vector<double> expected{4.0, 5.0 / 3.0, 4.0 / 3.0, 0.0, 3.0};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(std::abs(b.scores[i] - expected[i]) < kTol);
    CHECK(b.order.ranks == std::vector<int>{1, 3, 4, 5, 2});

    const std::vector<std::vector<int>> same{{2, 1, 3}, {2, 1, 3}};
    CHECK(greyrank::weighted_borda(same, std::vector<double>{0.5, 0.5}).order.ranks == same[0]);

    const auto dictator = greyrank::weighted_borda(paper, std::vector<double>{1.0, 0.0, 0.0});
    CHECK(dictator.order.ranks == paper[0]);
    const auto last = greyrank::weighted_borda(paper, std::vector<double>{0.0, 0.0, 1.0});
    CHECK(last.order.ranks == paper[2]);

    // swapped ranks with equal weights tie in the fused score
    const std::vector<std::vector<int>> split{{1, 2}, {2, 1}};
    const auto t = greyrank::weighted_borda(split, std::vector<double>{0.5, 0.5});
    CHECK(t.order.tied);
    CHECK(t.order.ranks == std::vector<int>{1, 2});

    const std::vector<std::vector<int>> ragged{{1, 2}, {1, 2, 3}};
    CHECK_THROWS_AS(greyrank::weighted_borda(ragged, std::vector<double>{0.5, 0.5}), greyrank::ValidationError);
    const std::vector<std::vector<int>> not_perm{{1, 1}};
    CHECK_THROWS_AS(greyrank::weighted_borda(not_perm, std::vector<double>{1.0}), greyrank::ValidationError);
    CHECK_THROWS_AS(greyrank::weighted_borda(paper, std::vector<double>{0.5, 0.5}), greyrank::ValidationError);
}

TEST_CASE("weighted Borda with equal weights is anonymous in methods") {
    std::mt19937_64 rng(21);
    const std::vector<double> uniform{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 6;
        std::vector<std::vector<int>> ranks(3, std::vector<int>(n));
        for (auto& r : ranks) {
            std::iota(r.begin(), r.end(), 1);
            std::shuffle(r.begin(), r.end(), rng);
        }
        const auto base = greyrank::weighted_borda(ranks, uniform).order;
        std::vector<std::vector<int>> permuted{ranks[2], ranks[0], ranks[1]};
        const auto other = greyrank::weighted_borda(permuted, uniform).order;
        CHECK(base.ranks == other.ranks);
        CHECK(base.tied == other.tied);
    }
}
