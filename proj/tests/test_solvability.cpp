#include <numeric>
#include <random>

#include "doctest.h"
#include "nsolve/solvability.hpp"
#include "random_tuples.hpp"

using namespace nsolve;
using O = SolvabilityVerdict::Outcome;

namespace {

LatticeSet line(std::vector<Int> xs) {
    std::vector<Point> pts;
    for (Int x : xs) pts.push_back({x});
    return LatticeSet(1, pts);
}

LatticeSet range(Int lo, Int hi) {
    std::vector<Int> xs;
    for (Int x = lo; x <= hi; ++x) xs.push_back(x);
    return line(xs);
}

LatticeSet simplex(std::size_t n, Int d) {
    std::vector<Point> pts{Point(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
        Point e(n, 0);
        e[i] = d;
        pts.push_back(e);
    }
    return LatticeSet(n, pts);
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
    IntMatrix m = IntMatrix::identity(n);
    if (n < 2) return m;
    for (int k = 0; k < 6; ++k) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        m.add_row_multiple(i, j, static_cast<Int>(rng() % 3) - 1);
        if (rng() % 3 == 0) m.swap_rows(i, j);
    }
    return m;
}

LatticeSet transform(const LatticeSet& a, const IntMatrix& m, const IntVector& shift) {
    std::vector<Point> pts;
    for (const auto& x : a) pts.push_back(add(x * m, shift));
    return LatticeSet(a.dim(), pts);
}

bool segment_is_interior(const LatticeSet& a, const std::pair<Point, Point>& s) {
    for (const auto& f : convex_hull(a).facets)
        if (dot(f.normal, s.first) == f.value && dot(f.normal, s.second) == f.value) return false;
    return a.contains(s.first) && a.contains(s.second) && s.first != s.second;
}

// Re-check the witness recorded for a reduced tuple.
void check_evidence(const SolvabilityVerdict& v) {
    const SupportTuple& u = v.normalization.tuple;
    if (v.segment) CHECK(segment_is_interior(u[*v.first_support], *v.segment));
    if (v.lucky_point) {
        SupportTuple r = move_to_front(u, *v.first_support);
        if (v.shrunk_support) {
            Int mv = mixed_volume(r);
            r[1] = v.shrunk_support->contains(Point(r[1].dim(), 0))
                       ? *v.shrunk_support
                       : translate(*v.shrunk_support, scale(lex_min(*v.shrunk_support), -1));
            if (r.size() == 2) CHECK(mixed_volume(r) == mv);
        }
        CHECK(is_lucky(r, *v.lucky_point));
    }
}

}  // namespace

TEST_CASE("univariate verdicts") {
    CHECK(verdict({range(0, 4)}).outcome == O::SolvableByRadicals);
    SolvabilityVerdict five = verdict({range(0, 5)});
    CHECK(five.outcome == O::NotSolvableByNMinus1Radicals);
    CHECK(five.radicals == 5);
    for (Int d = 1; d <= 9; ++d) {
        SolvabilityVerdict v = verdict({range(0, d)});
        CHECK(v.outcome == (d <= 4 ? O::SolvableByRadicals : O::NotSolvableByNMinus1Radicals));
        if (d > 4) CHECK(v.radicals == d);
    }
    CHECK(verdict({line({3})}).outcome == O::Inconsistent);
}

TEST_CASE("univariate gcd criterion") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> xs;
        Int base = static_cast<Int>(rng() % 7) - 3;
        xs.push_back(base);
        Int step = 1 + rng() % 3;
        for (Int k = 1; k <= 8; ++k)
            if (rng() % 3 == 0) xs.push_back(base + step * k);
        if (xs.size() < 2) xs.push_back(base + step * (1 + rng() % 8));
        Int g = 0;
        for (Int x : xs) g = std::gcd(g, x - xs.front());
        Int span = (xs.back() - xs.front()) / g;
        SolvabilityVerdict v = verdict({line(xs)});
        CHECK(is_solvable_outcome(v.outcome) == (span <= 4));
    }
}

TEST_CASE("non-reduced pair with 16 solutions") {
    std::vector<Point> a1, a2;
    for (Int i = 0; i <= 4; ++i) {
        a1.push_back({i, 0});
        a2.push_back({0, i});
    }
    SupportTuple t{LatticeSet(2, a1), LatticeSet(2, a2)};
    CHECK(is_reduced(t).witness == IndexSet{0});
    SolvabilityVerdict v = verdict(t);
    CHECK(v.mixed_volume == 16);
    CHECK(v.outcome == O::SolvableByRadicals);
    REQUIRE(v.stages.size() == 2);
    for (const auto& s : v.stages) {
        CHECK(s.mixed_volume == 4);
        CHECK(s.outcome == O::SolvableByRadicals);
    }
    CHECK(v.normalization.kind == NormalizationReport::Kind::ReducedCascade);
}

TEST_CASE("equal supports") {
    LatticeSet s6 = simplex(6, 1);
    std::vector<Point> pts(s6.begin(), s6.end());
    pts.push_back({-1, -1, -1, 1, 1, 1});
    LatticeSet a(6, pts);
    CHECK(full_volume(a) == 4);
    CHECK(equal_supports_verdict(a, 6).outcome == O::SolvableByRadicals);
    CHECK(equal_supports_verdict(lattice_points(simplex(2, 2)), 2).outcome == O::SolvableByRadicals);
    LatticeSet five(2, {{0, 0}, {1, 0}, {5, 0}, {0, 1}});
    SolvabilityVerdict v = equal_supports_verdict(five, 2);
    CHECK(v.outcome == O::NotSolvableByGeneralizedQuadratures);
    CHECK(v.lucky_point.has_value());
    LatticeSet big3 = lattice_points(simplex(3, 2));
    CHECK(equal_supports_verdict(big3, 3).outcome == O::NotSolvableByGeneralizedQuadratures);
    CHECK(equal_supports_verdict(LatticeSet(2, {{0, 0}, {5, 0}, {0, 1}}), 2).outcome == O::SolvableByRadicals);
    CHECK(equal_supports_verdict(LatticeSet(2, {{0, 0}, {1, 1}}), 2).outcome == O::Inconsistent);
}

TEST_CASE("homothetic supports") {
    CHECK(homothetic_verdict(simplex(2, 1), {2, 2}).outcome == O::SolvableByRadicals);
    SolvabilityVerdict v = homothetic_verdict(simplex(2, 1), {2, 3});
    CHECK(v.outcome == O::NotSolvableByGeneralizedQuadratures);
    CHECK(v.mixed_volume == 6);
    CHECK(homothetic_verdict(simplex(3, 1), {1, 1, 1}).outcome == O::SolvableByRadicals);
    // Dense degrees: the general verdict agrees with the product criterion.
    for (Int d1 = 1; d1 <= 3; ++d1)
        for (Int d2 = 1; d2 <= 3; ++d2) {
            SupportTuple t{lattice_points(simplex(2, d1)), lattice_points(simplex(2, d2))};
            CHECK(is_solvable_outcome(verdict(t).outcome) == (d1 * d2 <= 4));
        }
}

TEST_CASE("verdicts on random reduced tuples") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + trial % 2;
        SupportTuple t = testing_support::random_reduced(rng, n, 2, 2 + static_cast<int>(n));
        SolvabilityVerdict v = verdict(t);
        CHECK(is_solvable_outcome(v.outcome) == (v.mixed_volume <= 4));
        check_evidence(v);

        // Invariance under a unimodular map with independent shifts, and under reordering.
        IntMatrix m = random_unimodular(rng, n);
        SupportTuple moved;
        for (const auto& a : t) {
            IntVector shift(n);
            for (auto& c : shift) c = static_cast<Int>(rng() % 5) - 2;
            moved.push_back(transform(a, m, shift));
        }
        CHECK(is_solvable_outcome(verdict(moved).outcome) == is_solvable_outcome(v.outcome));
        SupportTuple swapped = move_to_front(t, n - 1);
        CHECK(verdict(swapped).outcome == v.outcome);
    }
}

TEST_CASE("monotonicity under shrinking") {
    std::mt19937 rng(4);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        SupportTuple t = testing_support::random_reduced(rng, 2, 2, 3);
        if (!is_solvable_outcome(verdict(t).outcome)) continue;
        for (int k = 0; k < 4; ++k) {
            SupportTuple s;
            for (const auto& a : t) {
                std::vector<Point> keep;
                for (const auto& x : a)
                    if (rng() % 3 != 0) keep.push_back(x);
                if (keep.empty()) keep.push_back(a[0]);
                s.push_back(LatticeSet(2, keep));
            }
            SolvabilityVerdict sv = verdict(s);
            CHECK((is_solvable_outcome(sv.outcome) || sv.outcome == O::Inconsistent));
            ++checked;
        }
    }
    CHECK(checked > 20);
}
