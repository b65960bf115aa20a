#include <map>
#include <stdexcept>

#include "nsolve/lattice.hpp"

namespace nsolve {

namespace {

struct Simplex {
    std::vector<std::size_t> ids;  // k boundary points
    IntVector normal;              // raw cofactor normal, outward
    Int c = 0;
    bool alive = true;
};

IntVector cofactor_normal(const std::vector<IntVector>& q, const std::vector<std::size_t>& ids, std::size_t k) {
    IntMatrix rows(k - 1, k);
    for (std::size_t i = 1; i < ids.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) rows(i - 1, j) = checked_sub(q[ids[i]][j], q[ids[0]][j]);
    IntVector n(k);
    for (std::size_t j = 0; j < k; ++j) {
        IntMatrix minor(k - 1, k - 1);
        for (std::size_t r = 0; r + 1 < k; ++r)
            for (std::size_t c = 0, cc = 0; c < k; ++c)
                if (c != j) minor(r, cc++) = rows(r, c);
        Int d = determinant(minor);
        n[j] = (j % 2 == 0) ? d : checked_sub(0, d);
    }
    return n;
}

// Oriented so that the interior reference point `ref / weight` lies beneath.
Simplex make_simplex(const std::vector<IntVector>& q, std::vector<std::size_t> ids, std::size_t k,
                     const IntVector& ref, Int weight) {
    Simplex s;
    s.normal = cofactor_normal(q, ids, k);
    s.c = dot(s.normal, q[ids[0]]);
    if (dot(s.normal, ref) > checked_mul(weight, s.c)) {
        s.normal = scale(s.normal, -1);
        s.c = checked_sub(0, s.c);
    }
    s.ids = std::move(ids);
    std::sort(s.ids.begin(), s.ids.end());
    return s;
}

struct SpanHull {
    std::vector<std::pair<Covector, Int>> facets;  // primitive normal, value
    Int volume = 0;
};

// Full-dimensional hull of points in Z^k, k >= 1.
SpanHull span_hull(const std::vector<IntVector>& q, std::size_t k) {
    SpanHull out;
    if (k == 1) {
        Int lo = q[0][0], hi = q[0][0];
        for (const auto& p : q) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        out.facets = {{{-1}, checked_sub(0, lo)}, {{1}, hi}};
        out.volume = checked_sub(hi, lo);
        return out;
    }
    std::vector<std::size_t> base{0};
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < q.size() && base.size() < k + 1; ++i) {
        diffs.push_back(sub(q[i], q[0]));
        if (rank(IntMatrix::from_rows(diffs, k)) == diffs.size())
            base.push_back(i);
        else
            diffs.pop_back();
    }
    if (base.size() != k + 1) throw std::logic_error("points do not span");
    IntVector ref(k, 0);
    for (std::size_t i : base) ref = add(ref, q[i]);
    const Int weight = static_cast<Int>(k + 1);

    Int vol = determinant(IntMatrix::from_rows(diffs, k));
    vol = vol < 0 ? -vol : vol;
    std::vector<Simplex> bd;
    for (std::size_t skip = 0; skip <= k; ++skip) {
        std::vector<std::size_t> ids;
        for (std::size_t j = 0; j <= k; ++j)
            if (j != skip) ids.push_back(base[j]);
        bd.push_back(make_simplex(q, ids, k, ref, weight));
    }
    std::vector<bool> used(q.size(), false);
    for (std::size_t i : base) used[i] = true;

    for (std::size_t p = 0; p < q.size(); ++p) {
        if (used[p]) continue;
        std::map<std::vector<std::size_t>, int> ridges;
        bool any = false;
        for (auto& s : bd) {
            if (!s.alive) continue;
            Int h = checked_sub(dot(s.normal, q[p]), s.c);
            if (h <= 0) continue;
            any = true;
            vol = checked_add(vol, h);
            s.alive = false;
            for (std::size_t drop = 0; drop < s.ids.size(); ++drop) {
                std::vector<std::size_t> r;
                for (std::size_t j = 0; j < s.ids.size(); ++j)
                    if (j != drop) r.push_back(s.ids[j]);
                ++ridges[r];
            }
        }
        if (!any) continue;
        for (const auto& [r, cnt] : ridges) {
            if (cnt != 1) continue;
            std::vector<std::size_t> ids = r;
            ids.push_back(p);
            bd.push_back(make_simplex(q, ids, k, ref, weight));
        }
        std::erase_if(bd, [](const Simplex& s) { return !s.alive; });
    }

    std::map<Covector, Int> grouped;
    for (const auto& s : bd) {
        Int g = content(s.normal);
        grouped.emplace(primitive_part(s.normal), s.c / g);
    }
    out.facets.assign(grouped.begin(), grouped.end());
    out.volume = vol;
    return out;
}

}  // namespace

Polytope convex_hull(const LatticeSet& a) {
    if (a.empty()) throw std::invalid_argument("convex hull of empty set");
    Polytope P;
    P.points = a;
    P.frame = affine_frame(a);
    const std::size_t k = P.frame.rank;
    P.dim = k;
    if (k == 0) {
        P.vertices = {a[0]};
        P.volume = 1;
        return P;
    }
    std::vector<IntVector> q;
    for (const auto& x : a) q.push_back(P.frame.span_coords(x));
    SpanHull h = span_hull(q, k);
    P.volume = h.volume;

    std::vector<std::vector<Covector>> incident(a.size());
    for (const auto& [u, c] : h.facets) {
        Facet f;
        for (std::size_t i = 0; i < q.size(); ++i)
            if (dot(u, q[i]) == c) {
                f.on.push_back(i);
                incident[i].push_back(u);
            }
        auto [normal, value] = P.frame.ambient_covector(u, c);
        f.normal = std::move(normal);
        f.value = value;
        P.facets.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (incident[i].size() >= k && rank(IntMatrix::from_rows(incident[i], k)) == k) P.vertices.push_back(a[i]);
    return P;
}

Int lattice_volume(const LatticeSet& a) { return convex_hull(a).volume; }

LatticeSet lattice_points(const LatticeSet& a) {
    Polytope P = convex_hull(a);
    const std::size_t k = P.dim;
    if (k == 0) return a;
    IntVector lo(k), hi(k);
    for (std::size_t i = 0; i < a.size(); ++i) {
        IntVector y = P.frame.span_coords(a[i]);
        for (std::size_t c = 0; c < k; ++c) {
            lo[c] = i ? std::min(lo[c], y[c]) : y[c];
            hi[c] = i ? std::max(hi[c], y[c]) : y[c];
        }
    }
    std::vector<Point> pts;
    IntVector y = lo;
    for (;;) {
        Point x = P.frame.lift(y);
        bool inside = true;
        for (const auto& f : P.facets)
            if (dot(f.normal, x) > f.value) inside = false;
        if (inside) pts.push_back(std::move(x));
        std::size_t c = 0;
        while (c < k && y[c] == hi[c]) y[c] = lo[c], ++c;
        if (c == k) break;
        ++y[c];
    }
    return LatticeSet(a.dim(), std::move(pts));
}

Int full_volume(const LatticeSet& a) {
    Polytope P = convex_hull(a);
    return P.dim == a.dim() ? P.volume : 0;
}

}  // namespace nsolve
