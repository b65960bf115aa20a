#include <array>
#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "nsolve/classify.hpp"
#include "nsolve/mixedvol.hpp"

namespace nsolve {

namespace {

struct Edge {
    Covector normal;
    Int value;
    Int length;
};

std::vector<Edge> polygon_edges(const LatticeSet& a) {
    Polytope P = convex_hull(a);
    if (a.dim() != 2 || P.dim != 2) throw std::invalid_argument("expected a two-dimensional polygon");
    std::vector<Edge> out;
    for (const auto& f : P.facets) {
        Point lo = a[f.on.front()], hi = lo;
        for (std::size_t i : f.on) {
            lo = std::min(lo, a[i]);
            hi = std::max(hi, a[i]);
        }
        out.push_back({f.normal, f.value, content(sub(hi, lo))});
    }
    return out;
}

Int det2(const Point& x, const Point& y) { return checked_sub(checked_mul(x[0], y[1]), checked_mul(x[1], y[0])); }

// Lattice points of {x : u_i . x <= b_i}, assumed bounded.
LatticeSet halfplane_points(const std::vector<Edge>& edges, const std::vector<Int>& b) {
    Int lo[2] = {0, 0}, hi[2] = {0, 0};
    bool any = false;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& u = edges[i].normal;
            const auto& w = edges[j].normal;
            Int d = det2(u, w);
            if (d == 0) continue;
            Int nx = checked_sub(b[i] * w[1], b[j] * u[1]);
            Int ny = checked_sub(u[0] * b[j], w[0] * b[i]);
            if (d < 0) d = -d, nx = -nx, ny = -ny;
            bool feasible = true;
            for (std::size_t k = 0; k < edges.size() && feasible; ++k)
                if (edges[k].normal[0] * nx + edges[k].normal[1] * ny > b[k] * d) feasible = false;
            if (!feasible) continue;
            Int fx = floor_div(nx, d), fy = floor_div(ny, d);
            Int cx = -floor_div(-nx, d), cy = -floor_div(-ny, d);
            if (!any) lo[0] = fx, lo[1] = fy, hi[0] = cx, hi[1] = cy;
            lo[0] = std::min(lo[0], fx), lo[1] = std::min(lo[1], fy);
            hi[0] = std::max(hi[0], cx), hi[1] = std::max(hi[1], cy);
            any = true;
        }
    std::vector<Point> pts;
    for (Int x = lo[0]; any && x <= hi[0]; ++x)
        for (Int y = lo[1]; y <= hi[1]; ++y) {
            bool ok = true;
            for (std::size_t k = 0; k < edges.size() && ok; ++k)
                if (edges[k].normal[0] * x + edges[k].normal[1] * y > b[k]) ok = false;
            if (ok) pts.push_back({x, y});
        }
    return LatticeSet(2, std::move(pts));
}

bool generates_plane(const LatticeSet& a, const LatticeSet& b) {
    std::vector<IntVector> diffs;
    for (const auto& x : a) diffs.push_back(sub(x, a[0]));
    for (const auto& y : b) diffs.push_back(sub(y, b[0]));
    auto idx = lattice_index(diffs, full_lattice(2));
    return idx && *idx == 1;
}

std::pair<LatticeSet, LatticeSet> pair_key(const LatticeSet& a, const LatticeSet& b, bool sl) {
    Polytope P = convex_hull(a);
    const auto& v = P.vertices;
    Int best_det = 0;
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (i == j || j == k || i == k) continue;
                Int d = det2(sub(v[j], v[i]), sub(v[k], v[i]));
                d = d < 0 ? -d : d;
                if (d == 0 || (best_det && d > best_det)) continue;
                if (d < best_det || !best_det) triples.clear(), best_det = d;
                triples.push_back({i, j, k});
            }
    std::optional<std::pair<LatticeSet, LatticeSet>> best;
    for (const auto& [i, j, k] : triples) {
        IntMatrix mt(2, 2);
        Point e1 = sub(v[j], v[i]), e2 = sub(v[k], v[i]);
        mt(0, 0) = e1[0], mt(1, 0) = e1[1], mt(0, 1) = e2[0], mt(1, 1) = e2[1];
        IntMatrix left;
        hermite_form(mt, &left);
        IntMatrix g = left.transposed();
        if (sl && determinant(g) < 0) g.negate_col(1);
        std::vector<Point> ia, ib;
        for (const auto& x : a) ia.push_back(sub(x, v[i]) * g);
        for (const auto& y : b) ib.push_back(y * g);
        LatticeSet sb(2, ib);
        std::pair<LatticeSet, LatticeSet> key{LatticeSet(2, ia), translate(sb, scale(lex_min(sb), -1))};
        if (!best || key < *best) best = std::move(key);
    }
    return *best;
}

bool embeds_pair(const LatticeSet& a, const LatticeSet& b, const LatticeSet& a2, const LatticeSet& b2, bool sl) {
    if (a.size() > a2.size() || b.size() > b2.size()) return false;
    Polytope P = convex_hull(a);
    const auto& v = P.vertices;
    std::size_t i1 = 1, i2 = 2;
    for (std::size_t k = 2; k < v.size(); ++k)
        if (det2(sub(v[1], v[0]), sub(v[k], v[0])) != 0) {
            i2 = k;
            break;
        }
    IntMatrix ma{{v[i1][0] - v[0][0], v[i1][1] - v[0][1]}, {v[i2][0] - v[0][0], v[i2][1] - v[0][1]}};
    const Int da = determinant(ma);
    const IntMatrix adj = adjugate(ma);
    for (const auto& c0 : a2)
        for (const auto& c1 : a2)
            for (const auto& c2 : a2) {
                IntMatrix mc{{c1[0] - c0[0], c1[1] - c0[1]}, {c2[0] - c0[0], c2[1] - c0[1]}};
                Int dc = determinant(mc);
                if (dc != da && (sl || dc != -da)) continue;
                IntMatrix g = adj * mc;
                bool integral = true;
                for (std::size_t r = 0; r < 2; ++r)
                    for (std::size_t s = 0; s < 2; ++s) {
                        if (g(r, s) % da) integral = false;
                        g(r, s) /= da;
                    }
                if (!integral) continue;
                bool ok = true;
                for (const auto& x : a)
                    if (!a2.contains(add(sub(x, v[0]) * g, c0))) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                const Point gb0 = b[0] * g;
                for (const auto& t0 : b2) {
                    Point t = sub(t0, gb0);
                    bool inner = true;
                    for (const auto& y : b)
                        if (!b2.contains(add(y * g, t))) {
                            inner = false;
                            break;
                        }
                    if (inner) return true;
                }
            }
    return false;
}

}  // namespace

Int mixed_area_edges(const LatticeSet& a, const LatticeSet& b) {
    if (b.dim() != 2) throw std::invalid_argument("expected a set in Z^2");
    std::vector<Edge> edges = polygon_edges(a);
    // With lex_min(b) at the origin every support value is non-negative.
    LatticeSet bt = translate(b, scale(lex_min(b), -1));
    Int total = 0;
    for (const auto& e : edges) total = checked_add(total, checked_mul(e.length, support_value(bt, e.normal)));
    if (total != mixed_volume({a, b})) throw std::logic_error("edge formula disagrees with the mixed volume");
    return total;
}

CanonicalPair canonical_pair(const LatticeSet& a, const LatticeSet& b, const PairConvention& conv) {
    auto key = pair_key(a, b, conv.orientation_preserving);
    if (conv.allow_swap) {
        auto other = pair_key(b, a, conv.orientation_preserving);
        if (other < key) key = std::move(other);
    }
    return {key.first, key.second, mixed_volume({a, b})};
}

bool pair_embeds(const CanonicalPair& p, const CanonicalPair& q, const PairConvention& conv) {
    const bool sl = conv.orientation_preserving;
    if (embeds_pair(p.first, p.second, q.first, q.second, sl)) return true;
    return conv.allow_swap && embeds_pair(p.first, p.second, q.second, q.first, sl);
}

std::vector<CanonicalPair> enumerate_pairs_2d(const PairConvention& conv) {
    std::set<CanonicalPair> seen;
    for (const auto& cls : enumerate_polytopes(2, 4)) {
        const LatticeSet& a = cls.representative;
        std::vector<Edge> edges = polygon_edges(a);
        // Translate B to contain 0: then b_i = max of L_i on B is >= 0 and sum a_i b_i = MV <= 4.
        std::vector<Int> b(edges.size(), 0);
        std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int used) {
            if (i == edges.size()) {
                LatticeSet q = halfplane_points(edges, b);
                if (q.empty() || full_volume(q) == 0 || !generates_plane(a, q)) return;
                if (mixed_volume({a, q}) > 4) return;
                seen.insert(canonical_pair(a, q, conv));
                if (!conv.allow_swap) seen.insert(canonical_pair(q, a, conv));
                return;
            }
            for (Int x = 0; used + x * edges[i].length <= 4; ++x) {
                b[i] = x;
                rec(i + 1, used + x * edges[i].length);
            }
            b[i] = 0;
        };
        rec(0, 0);
    }
    return {seen.begin(), seen.end()};
}

std::vector<CanonicalPair> enumerate_maximal_pairs_2d(const PairConvention& conv) {
    std::vector<CanonicalPair> all = enumerate_pairs_2d(conv);
    std::vector<CanonicalPair> out;
    for (const auto& p : all) {
        bool dominated = false;
        for (const auto& q : all) {
            if (q == p || q.first.size() + q.second.size() <= p.first.size() + p.second.size()) continue;
            if (pair_embeds(p, q, conv)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(p);
    }
    return out;
}

}  // namespace nsolve
