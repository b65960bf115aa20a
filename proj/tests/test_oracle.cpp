#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "nsolve/oracle.hpp"

using namespace nsolve;

namespace {

CycleType cycles(std::vector<std::pair<Int, Int>> parts) {
    CycleType c;
    for (auto [len, count] : parts) c.add(len, count);
    return c;
}

UnivariateFamily pure_power(Int d) {
    UnivariateFamily f;
    f.exponents = {0, d};
    f.coefficients = {-1.0, 1.0};
    f.moving = 0;
    f.center = 0.0;
    f.radius = 1.0;
    return f;
}

UnivariateFamily two_terms(Int a, Int b, double radius = 1e-3) {
    UnivariateFamily f;
    f.exponents = {0, a, b};
    f.coefficients = {0.0, 1.0, 1.0};
    f.moving = 0;
    f.center = 0.0;
    f.radius = radius;
    return f;
}

std::vector<Complex> sorted(std::vector<Complex> v) {
    std::sort(v.begin(), v.end(), [](Complex x, Complex y) {
        return std::make_pair(std::round(x.real() * 1e6), x.imag()) < std::make_pair(std::round(y.real() * 1e6), y.imag());
    });
    return v;
}

}  // namespace

TEST_CASE("polynomial roots") {
    auto r = sorted(roots({-1.0, 0.0, 1.0}));
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] + 1.0) < 1e-12);
    CHECK(std::abs(r[1] - 1.0) < 1e-12);

    auto z = roots({0.0, 0.0, 0.0, 1.0});
    CHECK(z.size() == 3);
    for (auto x : z) CHECK(std::abs(x) < 1e-8);

    std::vector<Complex> p{1.0, 1.0, 0.0, 0.0, 0.0, 1.0};
    auto q = roots(p);
    CHECK(q.size() == 5);
    CHECK(relative_residual(p, q) < 1e-8);

    CHECK_THROWS_AS(roots({1.0, 2.0, 0.0}), std::invalid_argument);
    CHECK(roots({3.0}).empty());

    std::mt19937 rng(3);
    std::normal_distribution<double> g;
    for (int t = 0; t < 50; ++t) {
        std::vector<Complex> c(2 + rng() % 9);
        for (auto& x : c) x = Complex(g(rng), g(rng));
        CHECK(relative_residual(c, roots(c)) < 1e-8);
    }
}

TEST_CASE("pure powers give one full cycle") {
    for (Int d = 1; d <= 7; ++d) {
        LoopTrack t = track_loop(pure_power(d));
        CHECK(t.permutation.degree() == static_cast<std::size_t>(d));
        CHECK(cycle_type_of(t.permutation) == cycles({{d, 1}}));
        // At theta = 0 the constant term is +1.
        for (auto x : t.start) CHECK(std::abs(std::pow(x, static_cast<double>(d)) + 1.0) < 1e-9);
    }
}

TEST_CASE("two-term degenerations") {
    for (auto [a, b] : std::vector<std::pair<Int, Int>>{{1, 4}, {2, 5}, {3, 7}, {2, 3}}) {
        PredictionReport r = compare_prediction(two_terms(a, b));
        CHECK(r.source == "degeneration");
        CHECK(r.predicted == cycles({{a, 1}, {1, b - a}}));
        CHECK(r.match);
        CHECK(r.track.max_residual < 1e-8);
    }
    // Roots escaping to infinity: the leading coefficient shrinks to 0.
    UnivariateFamily f;
    f.exponents = {0, 2, 5};
    f.coefficients = {1.0, 1.0, 0.0};
    f.moving = 2;
    f.center = 0.0;
    f.radius = 1e-3;
    PredictionReport r = compare_prediction(f);
    CHECK(r.predicted == cycles({{3, 1}, {1, 2}}));
    CHECK(r.match);
}

TEST_CASE("discriminant loop of a cubic") {
    UnivariateFamily f;
    f.exponents = {0, 1, 3};
    f.coefficients = {2.0, -3.0, 1.0};  // (x - 1)^2 (x + 2) at the center
    f.moving = 0;
    f.center = 2.0;
    f.radius = 0.1;
    PredictionReport r = compare_prediction(f);
    CHECK(r.source == "discriminant");
    CHECK(r.predicted == cycles({{2, 1}, {1, 1}}));
    CHECK(r.match);

    f.center = 5.0;
    CHECK_THROWS_AS(compare_prediction(f), std::invalid_argument);
    CHECK(cycle_type_of(track_loop(f).permutation) == cycles({{1, 3}}));
}

TEST_CASE("wrong prediction is reported") {
    PredictionReport r = compare_prediction(two_terms(2, 5), cycles({{5, 1}}));
    CHECK(r.source == "given");
    CHECK_FALSE(r.match);
    CHECK(r.observed == cycles({{2, 1}, {1, 3}}));
}

TEST_CASE("cycle type is stable under refinement") {
    for (auto [a, b] : std::vector<std::pair<Int, Int>>{{2, 5}, {3, 7}}) {
        UnivariateFamily f = two_terms(a, b, 1e-2);
        CycleType coarse = cycle_type_of(track_loop(f).permutation);
        f.radius /= 2;
        f.samples *= 2;
        CHECK(cycle_type_of(track_loop(f).permutation) == coarse);
    }
}

TEST_CASE("loops around every branch point compose to the loop at infinity") {
    // x^3 - 3x + c: branch points c = +-2; a large loop encloses both.
    UnivariateFamily f;
    f.exponents = {0, 1, 3};
    f.coefficients = {0.0, -3.0, 1.0};
    f.moving = 0;
    f.center = 0.0;
    f.radius = 10.0;
    LoopTrack big = track_loop(f);
    CHECK(cycle_type_of(big.permutation) == cycles({{3, 1}}));
    std::size_t moved = 0;
    for (double c : {2.0, -2.0}) {
        f.center = c;
        f.radius = 0.1;
        moved += track_loop(f).permutation.support().size();
    }
    CHECK(moved == 4);
}

TEST_CASE("family validation") {
    UnivariateFamily f = pure_power(3);
    f.samples = 10;
    CHECK_THROWS_AS(track_loop(f), std::invalid_argument);
    f = pure_power(3);
    f.exponents = {3, 0};
    CHECK_THROWS_AS(track_loop(f), std::invalid_argument);
    f = pure_power(3);
    f.radius = 0;
    CHECK_THROWS_AS(track_loop(f), std::invalid_argument);
}
