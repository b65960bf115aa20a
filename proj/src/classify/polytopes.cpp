#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "nsolve/classify.hpp"
#include "simplices.hpp"

namespace nsolve {

namespace {

bool inside(const Polytope& P, const Point& x) {
    for (const auto& f : P.facets)
        if (dot(f.normal, x) > f.value) return false;
    return true;
}

// Vertex simplex of largest volume, as points and determinant.
std::pair<std::vector<Point>, Int> widest_simplex(const Polytope& P, std::size_t n) {
    const auto& v = P.vertices;
    std::vector<std::size_t> cur, best;
    Int best_det = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == n + 1) {
            IntMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = checked_sub(v[cur[i + 1]][j], v[cur[0]][j]);
            Int d = determinant(m);
            d = d < 0 ? -d : d;
            if (d > best_det) best_det = d, best = cur;
            return;
        }
        for (std::size_t i = start; i < v.size(); ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::vector<Point> s;
    for (std::size_t i : best) s.push_back(v[i]);
    return {s, best_det};
}

bool is_irreducible_set(const LatticeSet& a) {
    std::vector<IntVector> diffs;
    for (const auto& x : a) diffs.push_back(sub(x, a[0]));
    auto idx = lattice_index(diffs, full_lattice(a.dim()));
    return idx && *idx == 1;
}

}  // namespace

std::vector<CanonicalClass> enumerate_polytopes(std::size_t n, Int max_vol) {
    if (n == 0) return {make_class(LatticeSet(0, {Point{}}))};
    std::set<LatticeSet> seen;
    std::vector<LatticeSet> queue;
    auto visit = [&](const LatticeSet& a) {
        LatticeSet rep = canonical_form(a);
        if (seen.insert(rep).second) queue.push_back(std::move(rep));
    };

    // Removing vertices one at a time ends at an empty simplex, so growing
    // from all simplices by single points reaches every saturated set.
    std::map<std::pair<Int, Int>, std::vector<std::vector<Int>>> nums;
    auto numerators_for = [&](Int det, Int budget, bool nonneg) -> const std::vector<std::vector<Int>>& {
        auto key = std::make_pair(nonneg ? -det : det, budget);
        auto it = nums.find(key);
        if (it == nums.end()) {
            auto all = detail::numerators(n + 1, det, budget, false);
            if (nonneg) std::erase_if(all, [](const auto& c) { return std::any_of(c.begin(), c.end(), [](Int x) { return x < 0; }); });
            it = nums.emplace(key, std::move(all)).first;
        }
        return it->second;
    };
    for (Int det = 1; det <= max_vol; ++det)
        detail::for_each_hermite(n, det, [&](const IntMatrix& h) {
            std::vector<Point> s{Point(n, 0)};
            for (std::size_t i = 0; i < n; ++i) s.push_back(h.row(i));
            visit(LatticeSet(n, detail::barycentric_points(s, det, numerators_for(det, det, true))));
        });

    for (std::size_t q = 0; q < queue.size(); ++q) {
        const LatticeSet b = queue[q];
        Polytope P = convex_hull(b);
        const Int room = max_vol - P.volume;
        if (room == 0) continue;
        std::vector<Int> facet_vol;
        for (const auto& f : P.facets) {
            std::vector<Point> on;
            for (std::size_t i : f.on) on.push_back(b[i]);
            facet_vol.push_back(lattice_volume(LatticeSet(n, std::move(on))));
        }
        auto [s, det] = widest_simplex(P, n);
        // Every lattice point of a volume <= max_vol polytope containing s.
        std::vector<Point> cands = detail::barycentric_points(s, det, numerators_for(det, max_vol, false));
        std::set<LatticeSet> children;
        for (const auto& x : cands) {
            if (b.contains(x)) continue;
            Int grow = 0;
            for (std::size_t i = 0; i < P.facets.size() && grow <= room; ++i) {
                Int h = dot(P.facets[i].normal, x) - P.facets[i].value;
                if (h > 0) grow += h * facet_vol[i];
            }
            if (grow > room) continue;
            LatticeSet bx = with_point(b, x);
            Polytope Q = convex_hull(bx);
            if (Q.volume > max_vol) continue;
            std::vector<Point> pts;
            for (const auto& y : cands)
                if (inside(Q, y)) pts.push_back(y);
            children.insert(LatticeSet(n, std::move(pts)));
        }
        for (const auto& c : children) visit(c);
    }

    std::vector<CanonicalClass> out;
    for (const auto& rep : queue) out.push_back({rep, n, lattice_volume(rep)});
    std::sort(out.begin(), out.end(), [](const CanonicalClass& x, const CanonicalClass& y) {
        return std::tie(x.volume, x.representative) < std::tie(y.volume, y.representative);
    });
    return out;
}

std::vector<CanonicalClass> enumerate_maximal_sets_vol4() {
    std::vector<CanonicalClass> out;
    for (std::size_t n = 1; n <= 6; ++n)
        for (auto& c : enumerate_polytopes(n, 4)) {
            if (!is_irreducible_set(c.representative)) continue;
            if (n > 1 && cone_peel(c.representative).cone_count > 0) continue;
            out.push_back(std::move(c));
        }
    return out;
}

ProjectionCases projection_cases(const LatticeSet& m) {
    const std::size_t k = m.dim();
    Point origin(k, 0);
    if (!m.contains(origin)) throw std::invalid_argument("set must contain the origin");
    if (!is_irreducible_set(m) || full_volume(m) == 0) throw std::invalid_argument("set must be irreducible");
    ProjectionCases out;
    Polytope P = convex_hull(m);
    // Coning the facets away from 0 triangulates conv M by simplices at 0.
    for (const auto& f : P.facets) {
        if (f.value == 0) continue;
        std::vector<Point> on;
        for (std::size_t i : f.on) on.push_back(m[i]);
        out.cone_total += f.value * lattice_volume(LatticeSet(k, std::move(on)));
    }
    out.large_simplices = out.cone_total >= 3;
    LatticeSet core = canonical_form(cone_peel(lattice_points(m)).core);
    out.cone_over_two = core == canonical_form(LatticeSet(1, {{0}, {1}, {2}})) ||
                        core == canonical_form(product(standard_simplex(1), standard_simplex(1)));
    out.unit_simplex = m.size() == k + 1 && P.volume == 1;
    return out;
}

}  // namespace nsolve
