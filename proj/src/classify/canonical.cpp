#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "nsolve/classify.hpp"

namespace nsolve {

namespace {

using Invariant = std::vector<Int>;

// Facet count and incident facet sizes; preserved by every automorphism.
std::vector<Invariant> vertex_invariants(const Polytope& P) {
    std::vector<Invariant> out;
    for (const auto& v : P.vertices) {
        std::vector<Int> sizes;
        for (const auto& f : P.facets)
            if (dot(f.normal, v) == f.value) sizes.push_back(static_cast<Int>(f.on.size()));
        std::sort(sizes.begin(), sizes.end());
        Invariant inv{static_cast<Int>(sizes.size())};
        inv.insert(inv.end(), sizes.begin(), sizes.end());
        out.push_back(std::move(inv));
    }
    return out;
}

Int simplex_det(const std::vector<Point>& v, const std::vector<std::size_t>& ids, std::size_t k) {
    IntMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = checked_sub(v[ids[i + 1]][j], v[ids[0]][j]);
    Int d = determinant(m);
    return d < 0 ? -d : d;
}

void for_each_subset(std::size_t n, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == r) {
            f(cur);
            return;
        }
        for (std::size_t i = start; i + (r - cur.size()) <= n; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

LatticeSet canonical_form(const LatticeSet& a) {
    if (a.empty()) throw std::invalid_argument("canonical form of empty set");
    LatticeFrame frame = affine_frame(a);
    const std::size_t k = frame.rank;
    if (k == 0) return LatticeSet(0, {Point{}});
    LatticeSet s = to_span_coords(a, frame);
    Polytope P = convex_hull(s);
    const std::vector<Point>& v = P.vertices;
    std::vector<Invariant> inv = vertex_invariants(P);

    // Simplices of least volume, then least sorted invariant sequence.
    Int best_det = 0;
    std::vector<Invariant> best_seq;
    std::vector<std::vector<std::size_t>> chosen;
    for_each_subset(v.size(), k + 1, [&](const std::vector<std::size_t>& ids) {
        Int d = simplex_det(v, ids, k);
        if (d == 0 || (best_det && d > best_det)) return;
        std::vector<std::size_t> sorted = ids;
        std::sort(sorted.begin(), sorted.end(), [&](std::size_t x, std::size_t y) { return inv[x] < inv[y]; });
        std::vector<Invariant> seq;
        for (std::size_t i : sorted) seq.push_back(inv[i]);
        if (d < best_det || best_det == 0 || seq < best_seq) {
            best_det = d;
            best_seq = seq;
            chosen.clear();
        }
        if (seq == best_seq) chosen.push_back(sorted);
    });

    std::optional<std::vector<Point>> best;
    for (auto ids : chosen) {
        // Every ordering that keeps the invariant sequence sorted.
        std::sort(ids.begin(), ids.end());
        do {
            bool sorted = true;
            for (std::size_t i = 0; i + 1 < ids.size(); ++i)
                if (inv[ids[i + 1]] < inv[ids[i]]) sorted = false;
            if (!sorted) continue;
            IntMatrix mt(k, k);  // transpose of the edge matrix
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) mt(j, i) = checked_sub(v[ids[i + 1]][j], v[ids[0]][j]);
            IntMatrix left;
            hermite_form(mt, &left);
            IntMatrix g = left.transposed();
            std::vector<Point> img;
            img.reserve(s.size());
            for (const auto& x : s) img.push_back(sub(x, v[ids[0]]) * g);
            std::sort(img.begin(), img.end());
            if (!best || img < *best) best = std::move(img);
        } while (std::next_permutation(ids.begin(), ids.end()));
    }
    return LatticeSet(k, std::move(*best));
}

CanonicalClass make_class(const LatticeSet& a) {
    CanonicalClass c;
    c.representative = canonical_form(a);
    c.dim = c.representative.dim();
    c.volume = lattice_volume(c.representative);
    return c;
}

LatticeSet standard_simplex(std::size_t n) {
    std::vector<Point> pts{Point(n, 0)};
    for (std::size_t i = 0; i < n; ++i) {
        Point e(n, 0);
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    return LatticeSet(n, std::move(pts));
}

LatticeSet dilate(const LatticeSet& a, Int d) {
    std::vector<Point> pts;
    for (const auto& x : a) pts.push_back(scale(x, d));
    return LatticeSet(a.dim(), std::move(pts));
}

LatticeSet product(const LatticeSet& a, const LatticeSet& b) {
    std::vector<Point> pts;
    for (const auto& x : a)
        for (const auto& y : b) {
            Point p = x;
            p.insert(p.end(), y.begin(), y.end());
            pts.push_back(std::move(p));
        }
    return LatticeSet(a.dim() + b.dim(), std::move(pts));
}

LatticeSet standard_cone(const LatticeSet& b) {
    const std::size_t m = b.dim();
    std::vector<Point> pts;
    for (const auto& x : b) {
        Point p = x;
        p.push_back(0);
        pts.push_back(std::move(p));
    }
    Point apex(m + 1, 0);
    apex[m] = 1;
    pts.push_back(std::move(apex));
    return LatticeSet(m + 1, std::move(pts));
}

LatticeSet join(const LatticeSet& a, const LatticeSet& b) {
    const std::size_t m = a.dim(), n = b.dim();
    std::vector<Point> pts;
    for (const auto& x : a) {
        Point p = x;
        p.resize(m + n + 1, 0);
        pts.push_back(std::move(p));
    }
    for (const auto& y : b) {
        Point p(m, 0);
        p.insert(p.end(), y.begin(), y.end());
        p.push_back(1);
        pts.push_back(std::move(p));
    }
    return LatticeSet(m + n + 1, std::move(pts));
}

LatticeSet direct_sum(const LatticeSet& a, const LatticeSet& b) {
    const std::size_t m = a.dim(), n = b.dim();
    std::vector<Point> pts;
    for (const auto& x : a) {
        Point p = x;
        p.resize(m + n, 0);
        pts.push_back(std::move(p));
    }
    for (const auto& y : b) {
        Point p(m, 0);
        p.insert(p.end(), y.begin(), y.end());
        pts.push_back(std::move(p));
    }
    return LatticeSet(m + n, std::move(pts));
}

LatticeSet with_point(const LatticeSet& a, const Point& p) {
    std::vector<Point> pts = a.points();
    pts.push_back(p);
    return LatticeSet(a.dim(), std::move(pts));
}

bool embeds(const LatticeSet& a, const LatticeSet& b) {
    if (a.dim() != b.dim() || a.empty() || a.size() > b.size()) return false;
    const std::size_t n = a.dim();
    if (full_volume(a) == 0 || full_volume(b) == 0) throw std::invalid_argument("embeds expects full-dimensional sets");
    if (n == 0) return true;
    Polytope pa = convex_hull(a);
    std::vector<std::size_t> basis;
    Int da = 0;
    for_each_subset(pa.vertices.size(), n + 1, [&](const std::vector<std::size_t>& ids) {
        if (da) return;
        Int d = simplex_det(pa.vertices, ids, n);
        if (d) {
            da = d;
            basis = ids;
        }
    });
    IntMatrix ma(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ma(i, j) = checked_sub(pa.vertices[basis[i + 1]][j], pa.vertices[basis[0]][j]);
    const Int det_a = determinant(ma);
    const IntMatrix adj = adjugate(ma);
    const Point& a0 = pa.vertices[basis[0]];

    std::vector<std::size_t> pick(n + 1);
    std::function<bool(std::size_t)> rec = [&](std::size_t depth) -> bool {
        if (depth == n + 1) {
            IntMatrix mb(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) mb(i, j) = checked_sub(b[pick[i + 1]][j], b[pick[0]][j]);
            Int db = determinant(mb);
            if (db != det_a && db != -det_a) return false;
            IntMatrix g = adj * mb;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (g(i, j) % det_a) return false;
                    g(i, j) /= det_a;
                }
            for (const auto& x : a)
                if (!b.contains(add(sub(x, a0) * g, b[pick[0]]))) return false;
            return true;
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (std::find(pick.begin(), pick.begin() + depth, i) != pick.begin() + depth) continue;
            pick[depth] = i;
            if (rec(depth + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

ConePeel cone_peel(const LatticeSet& a) {
    ConePeel out;
    out.core = to_span_coords(a, affine_frame(a));
    for (;;) {
        if (out.core.dim() < 2) return out;
        Polytope P = convex_hull(out.core);
        std::optional<LatticeSet> base;
        for (const auto& f : P.facets) {
            if (f.on.size() + 1 != out.core.size()) continue;
            for (const auto& x : out.core)
                if (dot(f.normal, x) == f.value - 1) {
                    std::vector<Point> pts;
                    for (std::size_t i : f.on) pts.push_back(out.core[i]);
                    base = LatticeSet(out.core.dim(), std::move(pts));
                }
            if (base) break;
        }
        if (!base) return out;
        out.core = to_span_coords(*base, affine_frame(*base));
        ++out.cone_count;
    }
}

}  // namespace nsolve
