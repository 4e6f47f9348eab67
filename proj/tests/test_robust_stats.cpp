#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "skewbox/robust_stats.hpp"
#include "support/oracles.hpp"

using namespace skewbox;

namespace {

Sample make(std::vector<double> v) { return Sample(std::move(v)); }

}  // namespace

TEST_SUITE("robust_stats") {

TEST_CASE("quantile: type-7 interpolation") {
    CHECK(quantile(make({1, 2, 3, 4, 5}), 0.5) == 3.0);
    CHECK(quantile(make({23, 24, 25, 26, 26}), 0.25) == 24.0);
    CHECK(quantile(make({23, 24, 25, 26, 26}), 0.75) == 26.0);
    CHECK(quantile(make({7}), 0.0) == 7.0);
    CHECK(quantile(make({7}), 1.0) == 7.0);
    // interior interpolation: {1,2,3,4}, h = 3*0.25 = 0.75
    CHECK(quantile(make({1, 2, 3, 4}), 0.25) == doctest::Approx(1.75).epsilon(1e-15));
    // explicit estimator selection matches the default
    CHECK(quantile(make({1, 2, 3, 4}), 0.25, QuantileEstimator::linear_interpolation) ==
          quantile(make({1, 2, 3, 4}), 0.25));
}

TEST_CASE("quantile: errors") {
    CHECK_THROWS_WITH_AS(Sample(std::vector<double>{}), "empty sample", std::invalid_argument);
    CHECK_THROWS_WITH_AS(quantile(make({1, 2}), -0.1), "probability out of range",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(quantile(make({1, 2}), 1.5), "probability out of range",
                         std::invalid_argument);
    CHECK_THROWS_AS(Sample(std::vector<double>{1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("quantile: monotone in prob") {
    std::mt19937_64 gen(7);
    for (int rep = 0; rep < 50; ++rep) {
        Sample s(oracles::random_sample(gen, 1 + gen() % 40, rep % 3 == 0));
        double prev = quantile(s, 0.0);
        for (int i = 1; i <= 20; ++i) {
            const double cur = quantile(s, i / 20.0);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("sample: sorted view is a permutation") {
    Sample s(std::vector<double>{3.0, 1.0, 2.0, 1.0});
    REQUIRE(s.order().size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(s.sorted()[k] == s.values()[s.order()[k]]);
        if (k > 0) CHECK(s.sorted()[k] >= s.sorted()[k - 1]);
    }
}

TEST_CASE("quartiles: examples and derived fields") {
    const QuartileSet a = quartiles(make({1, 2, 3, 4, 5}));
    CHECK(a.q1 == 2.0);
    CHECK(a.q2 == 3.0);
    CHECK(a.q3 == 4.0);
    CHECK(a.iqr == 2.0);

    const QuartileSet b = quartiles(make({23, 24, 25, 26, 26}));
    CHECK(b.q1 == 24.0);
    CHECK(b.q2 == 25.0);
    CHECK(b.q3 == 26.0);
    CHECK(b.iqr == 2.0);
    CHECK(b.siqr_lower == 1.0);
    CHECK(b.siqr_upper == 1.0);

    const QuartileSet c = quartiles(make({5, 5, 5, 5}));
    CHECK(c.q1 == 5.0);
    CHECK(c.q2 == 5.0);
    CHECK(c.q3 == 5.0);
    CHECK(c.iqr == 0.0);
}

TEST_CASE("quartiles: location-scale equivariance") {
    std::mt19937_64 gen(11);
    for (int rep = 0; rep < 30; ++rep) {
        const auto base = oracles::random_sample(gen, 5 + gen() % 30, false);
        const double a = 0.25 + 3.0 * std::uniform_real_distribution<>(0, 1)(gen);
        const double b = std::uniform_real_distribution<>(-5, 5)(gen);
        std::vector<double> scaled(base);
        for (double& x : scaled) x = a * x + b;
        const QuartileSet q0 = quartiles(Sample(base));
        const QuartileSet q1 = quartiles(Sample(scaled));
        CHECK(q1.q1 == doctest::Approx(a * q0.q1 + b).epsilon(1e-12));
        CHECK(q1.q2 == doctest::Approx(a * q0.q2 + b).epsilon(1e-12));
        CHECK(q1.q3 == doctest::Approx(a * q0.q3 + b).epsilon(1e-12));
    }
}

TEST_CASE("medcouple: frozen reference values") {
    // Values certified by an independent implementation (and, for the first
    // two, by hand enumeration of the kernel multiset).
    CHECK(medcouple(make({1, 2, 3, 4, 5})) == 0.0);
    CHECK(medcouple(make({1, 2, 3, 4, 10})) == 0.0);
    CHECK(medcouple(make({23, 24, 25, 26, 26})) == 0.0);
    CHECK(medcouple(make({1, 2, 2, 2, 3})) == 0.0);
    CHECK(medcouple(make({1, 2, 2, 3, 7})) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(medcouple(make({1, 1, 2, 2, 4, 6, 9, 14})) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("medcouple: errors") {
    CHECK_THROWS_WITH_AS(medcouple(make({1, 2})), "too few observations",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(medcouple(make({3, 3, 3, 3})), "degenerate sample: zero spread",
                         std::invalid_argument);
}

TEST_CASE("medcouple: antisymmetry under negation") {
    std::mt19937_64 gen(23);
    for (int rep = 0; rep < 40; ++rep) {
        const auto x = oracles::random_sample(gen, 50, rep % 2 == 0);
        if (*std::max_element(x.begin(), x.end()) == *std::min_element(x.begin(), x.end()))
            continue;
        std::vector<double> neg(x);
        for (double& v : neg) v = -v;
        CHECK(medcouple(Sample(neg)) == -medcouple(Sample(x)));
    }
}

TEST_CASE("medcouple: exact zero on exactly symmetric multisets") {
    std::mt19937_64 gen(31);
    for (int rep = 0; rep < 40; ++rep) {
        const auto v = oracles::symmetric_sample(gen, 3 + gen() % 30, rep % 2 == 0);
        CHECK(medcouple(Sample(v)) == 0.0);
        const QuartileSet q = quartiles(Sample(v));
        if (q.iqr > 0) CHECK(std::fabs(bowley(q)) <= 1e-13);
    }
}

TEST_CASE("medcouple: matches independent pair-enumeration oracle") {
    std::mt19937_64 gen(1234);
    int checked = 0;
    for (int rep = 0; rep < 300; ++rep) {
        const bool lattice = rep % 5 == 0;  // ~20% with median ties
        const std::size_t n = 3 + gen() % 48;
        const auto x = oracles::random_sample(gen, n, lattice);
        if (*std::max_element(x.begin(), x.end()) == *std::min_element(x.begin(), x.end()))
            continue;
        CHECK(medcouple(Sample(x)) == oracles::medcouple(x));
        ++checked;
    }
    CHECK(checked > 250);
}

TEST_CASE("bowley: direct substitutions") {
    QuartileSet q;
    q.q1 = 2; q.q2 = 3; q.q3 = 4; q.iqr = 2;
    CHECK(bowley(q) == 0.0);
    q.q1 = 1; q.q2 = 2; q.q3 = 4; q.iqr = 3;
    CHECK(bowley(q) == doctest::Approx(1.0 / 3).epsilon(1e-15));
    q.q1 = 1; q.q2 = 3; q.q3 = 4; q.iqr = 3;
    CHECK(bowley(q) == doctest::Approx(-1.0 / 3).epsilon(1e-15));
    q.q1 = 5; q.q2 = 5; q.q3 = 5; q.iqr = 0;
    CHECK_THROWS_WITH_AS(bowley(q), "degenerate sample: zero IQR", std::invalid_argument);
}

TEST_CASE("capped moment skewness: fixtures and clamping") {
    CHECK(capped_moment_skewness(make({-2, -1, 0, 1, 2})) == 0.0);
    // m2 = 16, m3 = 96, g1 = 1.5, G1 = 1.5*sqrt(20)/3 = sqrt(5)
    CHECK(capped_moment_skewness(make({0, 0, 0, 0, 10})) ==
          doctest::Approx(std::sqrt(5.0)).epsilon(1e-14));
    CHECK(capped_moment_skewness(make({1, 2, 3, 4, 10})) ==
          doctest::Approx(1.6970562748477143).epsilon(1e-13));
    CHECK(capped_moment_skewness(make({1, 1, 2, 2, 4, 6, 9, 14})) ==
          doctest::Approx(1.2950280641411336).epsilon(1e-13));

    // one extreme point pushes raw G1 past the cap
    std::vector<double> spike(20, 0.0);
    spike[19] = 1000.0;
    CHECK(capped_moment_skewness(Sample(spike)) == 3.5);
    for (double& v : spike) v = -v;
    CHECK(capped_moment_skewness(Sample(spike)) == -3.5);

    CHECK_THROWS_WITH_AS(capped_moment_skewness(make({1, 2})), "too few observations",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(capped_moment_skewness(make({4, 4, 4})),
                         "degenerate sample: zero spread", std::invalid_argument);
}

TEST_CASE("skewness measures: invariance under positive affine maps") {
    std::mt19937_64 gen(47);
    for (int rep = 0; rep < 25; ++rep) {
        const auto base = oracles::random_sample(gen, 30, false);
        const double a = 0.5 + 2.0 * std::uniform_real_distribution<>(0, 1)(gen);
        const double b = std::uniform_real_distribution<>(-3, 3)(gen);
        std::vector<double> mapped(base);
        for (double& x : mapped) x = a * x + b;
        CHECK(medcouple(Sample(mapped)) ==
              doctest::Approx(medcouple(Sample(base))).epsilon(1e-11));
        CHECK(bowley(quartiles(Sample(mapped))) ==
              doctest::Approx(bowley(quartiles(Sample(base)))).epsilon(1e-10));
        CHECK(capped_moment_skewness(Sample(mapped)) ==
              doctest::Approx(capped_moment_skewness(Sample(base))).epsilon(1e-10));
    }
}

TEST_CASE("skewness measures: bounds hold on random samples") {
    std::mt19937_64 gen(77);
    for (int rep = 0; rep < 2000; ++rep) {
        const std::size_t n = 5 + gen() % 196;
        const auto x = oracles::random_sample(gen, n, rep % 4 == 0);
        Sample s(x);
        const QuartileSet q = quartiles(s);
        if (q.iqr <= 0) continue;
        const SkewnessMeasures m = skewness_measures(s);
        CHECK(m.medcouple >= -1.0);
        CHECK(m.medcouple <= 1.0);
        CHECK(m.bowley >= -1.0);
        CHECK(m.bowley <= 1.0);
        CHECK(m.capped_moment_skew >= -3.5);
        CHECK(m.capped_moment_skew <= 3.5);
    }
}

}  // TEST_SUITE
