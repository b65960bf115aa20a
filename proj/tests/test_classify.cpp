#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "nsolve/classify.hpp"
#include "nsolve/mixedvol.hpp"

using namespace nsolve;

namespace {

LatticeSet line(std::vector<Int> xs) {
    std::vector<Point> pts;
    for (Int x : xs) pts.push_back({x});
    return LatticeSet(1, pts);
}

LatticeSet simplex_with(std::size_t n, Point p) { return with_point(standard_simplex(n), p); }

const LatticeSet diamond(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
const LatticeSet unit_square = product(standard_simplex(1), standard_simplex(1));

bool irreducible(const LatticeSet& a) {
    std::vector<IntVector> diffs;
    for (const auto& x : a) diffs.push_back(sub(x, a[0]));
    auto idx = lattice_index(diffs, full_lattice(a.dim()));
    return idx && *idx == 1;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
    IntMatrix m = IntMatrix::identity(n);
    if (n < 2) return m;
    for (int k = 0; k < 6; ++k) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        Int c = static_cast<Int>(rng() % 5) - 2;
        for (std::size_t r = 0; r < n; ++r) m(r, i) = checked_add(m(r, i), checked_mul(c, m(r, j)));
    }
    if (rng() % 2) m.negate_col(0);
    return m;
}

LatticeSet random_image(std::mt19937& rng, const LatticeSet& a) {
    const std::size_t n = a.dim();
    IntMatrix g = random_unimodular(rng, n);
    Point shift(n);
    for (auto& c : shift) c = static_cast<Int>(rng() % 7) - 3;
    std::vector<Point> pts;
    for (const auto& x : a) pts.push_back(add(x * g, shift));
    return LatticeSet(n, pts);
}

LatticeSet random_set(std::mt19937& rng, std::size_t n, Int box, int size) {
    std::uniform_int_distribution<Int> coord(-box, box);
    std::vector<Point> pts{Point(n, 0)};
    for (int i = 1; i < size; ++i) {
        Point p(n);
        for (auto& c : p) c = coord(rng);
        pts.push_back(p);
    }
    return LatticeSet(n, pts);
}

// Irreducible, saturated, volume <= 4, not a standard cone (segments kept).
std::set<LatticeSet> maximal_up_to(std::size_t dim) {
    std::set<LatticeSet> out;
    for (std::size_t n = 1; n <= dim; ++n)
        for (const auto& c : enumerate_polytopes(n, 4))
            if (irreducible(c.representative) && (n == 1 || cone_peel(c.representative).cone_count == 0))
                out.insert(c.representative);
    return out;
}

}  // namespace

TEST_CASE("circuit decomposition") {
    auto c = circuit_decompose(line({0, 2, 4}));
    REQUIRE(c);
    CHECK(c->positive == line({0, 4}));
    CHECK(c->negative == line({2}));

    auto d = circuit_decompose(diamond);
    REQUIRE(d);
    CHECK(d->positive == LatticeSet(2, {{-1, 0}, {1, 0}}));
    CHECK(d->negative == LatticeSet(2, {{0, -1}, {0, 1}}));

    CHECK_FALSE(circuit_decompose(standard_simplex(2)));
    CHECK_FALSE(circuit_decompose(with_point(unit_square, {2, 0})));
    CHECK_FALSE(circuit_decompose(LatticeSet(2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}})));

    // Signs must follow the points: 2(1,1) + (0,0) = 2(0,1) + (2,0).
    auto e = circuit_decompose(LatticeSet(2, {{0, 0}, {2, 0}, {0, 1}, {1, 1}}));
    REQUIRE(e);
    CHECK(e->positive == LatticeSet(2, {{0, 0}, {1, 1}}));
    CHECK(e->negative == LatticeSet(2, {{0, 1}, {2, 0}}));
}

TEST_CASE("circuit volume product") {
    CHECK(circuit_volume(*circuit_decompose(line({0, 2, 4}))) == 4);
    CHECK(circuit_volume(*circuit_decompose(simplex_with(6, {-1, -1, -1, 1, 1, 1}))) == 4);
    CHECK(circuit_volume(*circuit_decompose(diamond)) == lattice_volume(diamond));
    CHECK(circuit_volume(*circuit_decompose(unit_square)) == 2);

    std::mt19937 rng(11);
    int seen = 0;
    for (int t = 0; t < 400; ++t) {
        std::size_t n = 1 + rng() % 3;
        LatticeSet a = random_set(rng, n, 3, static_cast<int>(n) + 2);
        auto c = circuit_decompose(a);
        if (!c) continue;
        ++seen;
        CHECK(circuit_volume(*c) == lattice_volume(a));
    }
    CHECK(seen > 50);
}

TEST_CASE("circuits of volume at most 4") {
    auto circuits = enumerate_circuits(4);
    std::set<LatticeSet> reps;
    for (const auto& c : circuits) {
        reps.insert(c.representative);
        auto split = circuit_decompose(c.representative);
        REQUIRE(split);
        CHECK(c.volume <= 4);
        CHECK(circuit_volume(*split) == lattice_volume(c.representative));
    }
    CHECK(reps.size() == circuits.size());

    const std::vector<LatticeSet> named = {
        simplex_with(6, {-1, -1, -1, 1, 1, 1}), simplex_with(5, {-2, -1, 1, 1, 1}),
        simplex_with(4, {-2, -1, 1, 1}),        simplex_with(4, {-1, -1, -1, 1}),
        simplex_with(4, {-1, -1, -1, 2}),       simplex_with(4, {-1, -1, 1, 1}),
        simplex_with(3, {-1, -1, -1}),          simplex_with(3, {1, 1, -3}),
        simplex_with(3, {1, 1, -2}),            diamond,
        line({0, 2, 4})};
    for (const auto& a : named) CHECK(reps.count(canonical_form(a)) == 1);
    CHECK(make_class(simplex_with(4, {-1, -1, 1, 1})).volume == 3);

    const std::set<LatticeSet> reducible = {canonical_form(line({0, 2, 4})), canonical_form(diamond),
                                            canonical_form(LatticeSet(2, {{0, 0}, {2, 0}, {0, 1}, {2, 1}}))};
    const auto maximal = maximal_up_to(4);
    for (const auto& c : circuits) {
        if (!irreducible(c.representative)) {
            CHECK(reducible.count(c.representative) == 1);
            continue;
        }
        if (c.dim > 4) continue;
        LatticeSet core = canonical_form(cone_peel(lattice_points(c.representative)).core);
        CHECK(maximal.count(core) == 1);
    }
}

TEST_CASE("cone peeling") {
    auto p = cone_peel(standard_cone(unit_square));
    CHECK(p.cone_count == 1);
    CHECK(canonical_form(p.core) == canonical_form(unit_square));

    auto s = cone_peel(standard_simplex(3));
    CHECK(s.cone_count == 2);
    CHECK(canonical_form(s.core) == canonical_form(standard_simplex(1)));

    CHECK(cone_peel(line({0, 2, 4})).cone_count == 0);
    CHECK(cone_peel(unit_square).cone_count == 0);

    LatticeSet base = lattice_points(LatticeSet(2, {{0, 0}, {2, 0}, {0, 2}}));
    auto q = cone_peel(standard_cone(standard_cone(base)));
    CHECK(q.cone_count == 2);
    CHECK(canonical_form(q.core) == canonical_form(base));
    CHECK(lattice_volume(q.core) == lattice_volume(standard_cone(standard_cone(base))));
}

TEST_CASE("canonical form is an orbit invariant") {
    std::mt19937 rng(5);
    for (int t = 0; t < 150; ++t) {
        std::size_t n = 1 + rng() % 4;
        LatticeSet a = random_set(rng, n, 2, 2 + static_cast<int>(rng() % 5));
        if (full_volume(a) == 0 || lattice_volume(a) > 12) continue;
        LatticeSet c = canonical_form(a);
        CHECK(canonical_form(random_image(rng, a)) == c);
        CHECK(lattice_volume(c) == lattice_volume(a));
        CHECK(c.size() == a.size());
    }
    CHECK(canonical_form(line({3, 5, 7})) == canonical_form(line({0, 2, 4})));
    CHECK(canonical_form(line({3, 4, 5})) == canonical_form(line({0, 1, 2})));
    CHECK(canonical_form(line({0, 1, 3})) != canonical_form(line({0, 1, 2, 3})));
}

TEST_CASE("planar polygons of area at most 4 against a box search") {
    // Lattice width is at most 2 at this area, so every class has a
    // representative in x in [-2,6], y in [0,2] with at most four vertices.
    std::vector<Point> box;
    for (Int y = 0; y <= 2; ++y)
        for (Int x = -2; x <= 6; ++x) box.push_back({x, y});
    std::vector<LatticeSet> classes;
    std::set<LatticeSet> tried;
    const std::size_t m = box.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k)
                for (std::size_t l = k; l < m; ++l) {
                    std::vector<Point> v{box[i], box[j], box[k], box[l]};
                    LatticeSet a(2, v);
                    if (full_volume(a) == 0 || full_volume(a) > 4) continue;
                    LatticeSet sat = lattice_points(a);
                    if (!tried.insert(sat).second) continue;
                    bool known = false;
                    for (const auto& c : classes)
                        if (c.size() == sat.size() && full_volume(c) == full_volume(sat) && embeds(sat, c)) known = true;
                    if (!known) classes.push_back(sat);
                }
    auto found = enumerate_polytopes(2, 4);
    CHECK(classes.size() == 13);
    CHECK(found.size() == classes.size());
    std::set<LatticeSet> reps;
    for (const auto& c : found) reps.insert(c.representative);
    for (const auto& c : classes) CHECK(reps.count(canonical_form(c)) == 1);

    std::size_t cones = 0;
    for (const auto& c : found) cones += cone_peel(c.representative).cone_count > 0;
    CHECK(cones == 4);
}

TEST_CASE("named maximal sets") {
    const auto maximal = maximal_up_to(5);
    auto has = [&](const LatticeSet& a) { return maximal.count(canonical_form(lattice_points(a))) == 1; };
    LatticeSet s1 = standard_simplex(1);
    LatticeSet sq = product(s1, s1);
    LatticeSet prism = product(standard_simplex(2), s1);
    LatticeSet pyramid = simplex_with(3, {1, 1, 0});
    LatticeSet m101 = line({-1, 0, 1});

    CHECK(has(simplex_with(5, {-2, -1, 1, 1, 1})));
    CHECK(has(join(sq, sq)));
    CHECK(has(simplex_with(4, {-2, -1, 1, 1})));
    CHECK(has(simplex_with(4, {-1, -1, -1, 1})));
    CHECK(has(simplex_with(4, {-1, -1, -1, 2})));
    CHECK(has(product(s1, standard_simplex(3))));
    CHECK(has(join(dilate(s1, 2), sq)));
    CHECK(has(direct_sum(sq, sq)));
    CHECK(has(simplex_with(4, {-1, -1, 1, 1})));
    CHECK(has(simplex_with(3, {-1, -1, -1})));
    CHECK(has(simplex_with(3, {1, 1, -3})));
    CHECK(has(simplex_with(3, {1, 1, -2})));
    CHECK(has(prism));
    CHECK(has(with_point(prism, {0, 0, 2})));
    CHECK(has(join(m101, m101)));
    CHECK(has(with_point(pyramid, {0, 0, -1})));
    CHECK(has(with_point(pyramid, {0, 0, 2})));
    CHECK(has(with_point(pyramid, {1, 1, 1})));
    CHECK(has(with_point(pyramid, {1, 1, -1})));

    // Standard cones are peeled, not listed.
    CHECK_FALSE(has(standard_cone(sq)));
    CHECK(embeds(standard_simplex(3), lattice_points(prism)));
    CHECK_FALSE(embeds(lattice_points(with_point(prism, {0, 0, 2})), lattice_points(prism)));
}

TEST_CASE("maximal list is closed downward") {
    const auto maximal = maximal_up_to(4);
    std::mt19937 rng(23);
    int tested = 0;
    for (int t = 0; t < 3000 && tested < 150; ++t) {
        std::size_t n = 1 + rng() % 4;
        LatticeSet a = random_set(rng, n, 2, static_cast<int>(n) + 1 + static_cast<int>(rng() % 3));
        if (full_volume(a) == 0 || full_volume(a) > 4 || !irreducible(a)) continue;
        ++tested;
        ConePeel p = cone_peel(lattice_points(a));
        LatticeSet core = canonical_form(p.core);
        CHECK(maximal.count(core) == 1);
        CHECK(lattice_volume(core) == full_volume(a));
    }
    CHECK(tested >= 100);
}

TEST_CASE("mixed area through edges") {
    CHECK(mixed_area_edges(unit_square, unit_square) == 2);
    LatticeSet seg(2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
    CHECK(mixed_area_edges(standard_simplex(2), seg) == 4);
    CHECK(mixed_area_edges(standard_simplex(2), LatticeSet(2, {{5, -3}})) == 0);
    CHECK_THROWS_AS(mixed_area_edges(seg, unit_square), std::invalid_argument);

    std::mt19937 rng(31);
    int tested = 0;
    for (int t = 0; t < 300; ++t) {
        LatticeSet a = random_set(rng, 2, 3, 3 + static_cast<int>(rng() % 3));
        LatticeSet b = random_set(rng, 2, 3, 1 + static_cast<int>(rng() % 4));
        if (full_volume(a) == 0) continue;
        ++tested;
        CHECK(mixed_area_edges(a, b) == mixed_volume({a, b}));
    }
    CHECK(tested > 200);
}

TEST_CASE("planar pairs of mixed area at most 4") {
    for (bool swap : {true, false}) {
        PairConvention conv{swap, false};
        auto all = enumerate_pairs_2d(conv);
        auto maximal = enumerate_maximal_pairs_2d(conv);
        CHECK(maximal.size() == (swap ? 13u : 19u));
        for (const auto& p : all) {
            CHECK(p.mixed_volume <= 4);
            CHECK(p.mixed_volume == mixed_volume({p.first, p.second}));
            CHECK(full_volume(p.second) > 0);
            CHECK(canonical_pair(p.first, p.second, conv) == p);
        }
        for (const auto& p : maximal) CHECK(std::find(all.begin(), all.end(), p) != all.end());

        // Dense degrees 1 and 4.
        CanonicalPair dense = canonical_pair(standard_simplex(2), lattice_points(dilate(standard_simplex(2), 4)), conv);
        CHECK(dense.mixed_volume == 4);
        CHECK(std::any_of(maximal.begin(), maximal.end(), [&](const auto& q) { return pair_embeds(dense, q, conv); }));
    }

    std::mt19937 rng(41);
    auto maximal = enumerate_maximal_pairs_2d();
    for (int t = 0; t < 100; ++t) {
        LatticeSet a = lattice_points(random_set(rng, 2, 2, 3));
        LatticeSet b = lattice_points(random_set(rng, 2, 2, 3));
        if (full_volume(a) == 0 || full_volume(b) == 0 || mixed_volume({a, b}) > 4) continue;
        CanonicalPair p = canonical_pair(a, b);
        IntMatrix g = random_unimodular(rng, 2);
        std::vector<Point> ga, gb;
        for (const auto& x : a) ga.push_back(x * g);
        for (const auto& y : b) gb.push_back(add(y * g, Point{1, -2}));
        CHECK(canonical_pair(LatticeSet(2, gb), LatticeSet(2, ga)) == p);
    }
}

TEST_CASE("projection cases are exclusive") {
    std::mt19937 rng(53);
    int tested = 0;
    std::set<int> fired;
    for (int t = 0; t < 4000 && tested < 200; ++t) {
        std::size_t n = 1 + rng() % 3;
        LatticeSet m = random_set(rng, n, 2, static_cast<int>(n) + 1 + static_cast<int>(rng() % 3));
        if (full_volume(m) == 0 || !irreducible(m)) continue;
        ++tested;
        ProjectionCases pc = projection_cases(m);
        int count = pc.large_simplices + pc.cone_over_two + pc.unit_simplex;
        CHECK(count == 1);
        if (pc.large_simplices) fired.insert(0);
        if (pc.cone_over_two) fired.insert(1);
        if (pc.unit_simplex) fired.insert(2);
    }
    CHECK(tested >= 150);
    CHECK(fired.size() == 3);
    CHECK(projection_cases(standard_simplex(3)).unit_simplex);
    CHECK(projection_cases(line({0, 1, 2})).cone_over_two);
    CHECK(projection_cases(standard_cone(unit_square)).cone_over_two);
    CHECK(projection_cases(line({-1, 0, 2})).large_simplices);
}
