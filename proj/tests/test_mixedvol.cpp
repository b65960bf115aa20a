#include <random>

#include "doctest.h"
#include "nsolve/mixedvol.hpp"

using namespace nsolve;

namespace {

LatticeSet simplex(std::size_t n, Int d = 1) {
    std::vector<Point> pts{Point(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
        Point e(n, 0);
        e[i] = d;
        pts.push_back(e);
    }
    return LatticeSet(n, pts);
}

// Lattice points of d times the standard simplex.
LatticeSet dense(std::size_t n, Int d) {
    std::vector<Point> pts;
    Point p(n, 0);
    auto rec = [&](auto&& self, std::size_t i, Int left) -> void {
        if (i == n) {
            pts.push_back(p);
            return;
        }
        for (Int v = 0; v <= left; ++v) {
            p[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, d);
    return LatticeSet(n, pts);
}

LatticeSet random_set(std::mt19937& rng, std::size_t dim, std::size_t count) {
    std::uniform_int_distribution<Int> d(-2, 2);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < count; ++i) {
        Point p(dim);
        for (auto& x : p) x = d(rng);
        pts.push_back(p);
    }
    return LatticeSet(dim, pts);
}

}  // namespace

TEST_CASE("mixed volume examples") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(mixed_volume(SupportTuple(n, simplex(n))) == 1);
    LatticeSet a1(2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
    LatticeSet a2(2, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(mixed_volume({a1, a2}) == 16);
    CHECK(mixed_volume({dense(2, 2), dense(2, 3)}) == 6);
    CHECK(mixed_volume_recursive({LatticeSet(1, {{0}, {1}, {2}, {3}, {4}, {5}, {6}})}) == 6);
    CHECK(mixed_volume_recursive({a1, a2}) == 16);
    CHECK(mixed_volume({LatticeSet(2, {{0, 0}}), simplex(2)}) == 0);
}

TEST_CASE("dense supports give the Bezout product") {
    for (Int d1 = 1; d1 <= 3; ++d1)
        for (Int d2 = 1; d2 <= 3; ++d2) {
            CHECK(mixed_volume({dense(2, d1), dense(2, d2)}) == d1 * d2);
            for (Int d3 = 1; d3 <= 3; ++d3) CHECK(mixed_volume({dense(3, d1), dense(3, d2), dense(3, d3)}) == d1 * d2 * d3);
        }
}

TEST_CASE("inclusion-exclusion agrees with the recursive formula") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + trial % 3;
        SupportTuple t;
        for (std::size_t j = 0; j < n; ++j) t.push_back(random_set(rng, n, 1 + (trial + j) % 5));
        CHECK(mixed_volume_inclusion_exclusion(t) == mixed_volume_recursive(t));
    }
}

TEST_CASE("mixed volume properties") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 3;
        SupportTuple t;
        for (std::size_t j = 0; j < n; ++j) t.push_back(random_set(rng, n, 2 + (trial + j) % 4));
        Int mv = mixed_volume(t);

        SupportTuple rev(t.rbegin(), t.rend());
        CHECK(mixed_volume(rev) == mv);

        LatticeSet a = t[0];
        CHECK(mixed_volume(SupportTuple(n, a)) == full_volume(a));

        SupportTuple moved = t;
        moved[n - 1] = translate(moved[n - 1], Point(n, 3));
        CHECK(mixed_volume(moved) == mv);

        LatticeSet extra = random_set(rng, n, 2);
        SupportTuple sum = t, other = t, bigger = t;
        sum[0] = minkowski_sum(t[0], extra);
        other[0] = extra;
        CHECK(mixed_volume(sum) == mv + mixed_volume(other));
        bigger[0] = set_union(t[0], extra);
        CHECK(mixed_volume(bigger) >= mv);

        if (n == 2) CHECK(mv * mv >= full_volume(t[0]) * full_volume(t[1]));
    }
}

TEST_CASE("codimension and witnesses") {
    LatticeSet tri(2, {{0, 0}, {1, 0}, {0, 1}});
    LatticeSet seg(2, {{0, 0}, {1, 0}});
    CHECK(codimension({LatticeSet(1, {{0}})}, {0}) == 1);
    CHECK(codimension({tri, tri}, {0, 1}) == 0);
    CHECK(codimension({seg, seg}, {0, 1}) == 1);

    SubtupleWitness w = max_codim_subtuple({tri, tri});
    CHECK(w.codim == 0);
    CHECK(w.indices == IndexSet{0, 1});
    w = max_codim_subtuple({seg, seg});
    CHECK(w.codim == 1);
    CHECK(w.indices == IndexSet{0, 1});
    w = max_codim_subtuple({tri});
    CHECK(w.codim == -1);
    CHECK(w.indices == IndexSet{0});
}

TEST_CASE("connectivity") {
    LatticeSet tri(2, {{0, 0}, {1, 0}, {0, 1}});
    CHECK(connectivity({tri}).kind == Connectivity::Kind::Connected);
    Connectivity c = connectivity({dense(2, 2), dense(2, 3)});
    CHECK(c.kind == Connectivity::Kind::Components);
    CHECK(c.components == 6);
    CHECK(connectivity({LatticeSet(1, {{0}})}).kind == Connectivity::Kind::Empty);
}

TEST_CASE("relative mixed volume of lower-dimensional tuples") {
    LatticeSet s1(3, {{0, 0, 5}, {2, 2, 5}});
    CHECK(relative_mixed_volume({s1}) == 2);
    LatticeSet p(3, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
    LatticeSet q(3, {{0, 0, 1}, {2, 0, 1}, {0, 2, 1}});
    CHECK(relative_mixed_volume({p, q}) == 2);
    CHECK(relative_mixed_volume({p}) == 0);
}
