#include <functional>

#include "nsolve/lattice.hpp"

namespace nsolve {

namespace {

std::vector<std::size_t> affine_basis(const std::vector<Point>& v, std::size_t k) {
    std::vector<std::size_t> idx{0};
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < v.size() && idx.size() < k + 1; ++i) {
        diffs.push_back(sub(v[i], v[0]));
        if (rank(IntMatrix::from_rows(diffs, k)) == diffs.size())
            idx.push_back(i);
        else
            diffs.pop_back();
    }
    return idx;
}

}  // namespace

std::optional<UnimodularAffineMap> affine_equivalence(const LatticeSet& a, const LatticeSet& b) {
    if (a.dim() != b.dim() || a.size() != b.size() || a.empty()) return std::nullopt;
    const std::size_t n = a.dim();
    Polytope pa = convex_hull(a), pb = convex_hull(b);
    if (pa.dim != pb.dim || pa.vertices.size() != pb.vertices.size() || pa.volume != pb.volume) return std::nullopt;
    const std::size_t k = pa.dim;
    const LatticeFrame& fa = pa.frame;
    const LatticeFrame& fb = pb.frame;
    LatticeSet sa = to_span_coords(a, fa), sb = to_span_coords(b, fb);
    std::vector<Point> va, vb;
    for (const auto& x : pa.vertices) va.push_back(fa.span_coords(x));
    for (const auto& x : pb.vertices) vb.push_back(fb.span_coords(x));

    auto finish = [&](const IntMatrix& g, const Point& from, const Point& to) {
        // Row convention on ambient points: x -> x * gfull + t.
        IntMatrix block = IntMatrix::identity(n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) block(i, j) = g(i, j);
        IntMatrix gfull = fa.to_coords * block * fb.from_coords;
        Point from_ambient = fa.lift(from), to_ambient = fb.lift(to);
        UnimodularAffineMap m;
        m.matrix = gfull.transposed();
        m.translation = sub(to_ambient, from_ambient * gfull);
        return m;
    };

    if (k == 0) return finish(IntMatrix(0, 0), IntVector{}, IntVector{});

    std::vector<std::size_t> basis = affine_basis(va, k);
    IntMatrix ma(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) ma(i, j) = checked_sub(va[basis[i + 1]][j], va[basis[0]][j]);
    const Int da = determinant(ma);
    const IntMatrix adj = adjugate(ma);

    std::vector<std::size_t> pick(k + 1);
    std::vector<bool> taken(vb.size(), false);
    std::optional<UnimodularAffineMap> result;

    auto try_pick = [&]() -> bool {
        IntMatrix mb(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) mb(i, j) = checked_sub(vb[pick[i + 1]][j], vb[pick[0]][j]);
        Int db = determinant(mb);
        if (db != da && db != -da) return false;
        IntMatrix g = adj * mb;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (g(i, j) % da != 0) return false;
                g(i, j) /= da;
            }
        const Point& a0 = va[basis[0]];
        const Point& b0 = vb[pick[0]];
        for (const auto& x : sa)
            if (!sb.contains(add(sub(x, a0) * g, b0))) return false;
        result = finish(g, a0, b0);
        return true;
    };

    std::function<bool(std::size_t)> rec = [&](std::size_t depth) -> bool {
        if (depth == k + 1) return try_pick();
        for (std::size_t i = 0; i < vb.size(); ++i) {
            if (taken[i]) continue;
            taken[i] = true;
            pick[depth] = i;
            bool ok = rec(depth + 1);
            taken[i] = false;
            if (ok) return true;
        }
        return false;
    };
    rec(0);
    return result;
}

}  // namespace nsolve
