#include <algorithm>
#include <stdexcept>

#include "nsolve/mixedvol.hpp"

namespace nsolve {

namespace {

LatticeSet vertex_set(const LatticeSet& a) {
    Polytope P = convex_hull(a);
    return LatticeSet(a.dim(), P.vertices);
}

Int factorial(std::size_t n) {
    Int f = 1;
    for (std::size_t i = 2; i <= n; ++i) f = checked_mul(f, static_cast<Int>(i));
    return f;
}

void check_square(const SupportTuple& t) {
    for (const auto& a : t) {
        if (a.empty()) throw std::invalid_argument("empty support");
        if (a.dim() != t.size()) throw std::invalid_argument("mixed volume needs n supports in Z^n");
    }
}

}  // namespace

std::size_t ambient_dim(const SupportTuple& t) {
    if (t.empty()) throw std::invalid_argument("empty support tuple");
    return t.front().dim();
}

Int mixed_volume_inclusion_exclusion(const SupportTuple& t) {
    check_square(t);
    const std::size_t n = t.size();
    if (n == 0) return 1;
    std::vector<LatticeSet> verts;
    for (const auto& a : t) verts.push_back(vertex_set(a));
    const std::size_t full = std::size_t{1} << n;
    std::vector<LatticeSet> sums(full);
    Int total = 0;
    for (std::size_t mask = 1; mask < full; ++mask) {
        std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
        std::size_t rest = mask & (mask - 1);
        LatticeSet s = rest == 0 ? verts[low] : minkowski_sum(sums[rest], verts[low]);
        Polytope P = convex_hull(s);
        sums[mask] = LatticeSet(s.dim(), P.vertices);
        Int vol = P.dim == n ? P.volume : 0;
        int size = __builtin_popcountll(mask);
        total = ((n - static_cast<std::size_t>(size)) % 2 == 0) ? checked_add(total, vol) : checked_sub(total, vol);
    }
    Int f = factorial(n);
    if (total % f != 0 || total < 0) throw std::logic_error("inclusion-exclusion produced a non-integral mixed volume");
    return total / f;
}

IntMatrix kernel_coordinates(const Covector& alpha) {
    const std::size_t n = alpha.size();
    if (!is_primitive(alpha)) throw std::invalid_argument("kernel of a non-primitive covector");
    // alpha * V = (±1, 0, ..., 0): for x = V y, alpha(x) = ±y_1 and y = V^{-1} x.
    HermiteSmith hs = hermite_smith(IntMatrix::from_rows({alpha}, n));
    IntMatrix k(n - 1, n);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k(i - 1, j) = hs.smith_right_inverse(i, j);
    return k;
}

LatticeSet to_kernel(const LatticeSet& a, const IntMatrix& k) {
    std::vector<Point> pts;
    for (const auto& x : a) {
        Point y(k.rows(), 0);
        for (std::size_t i = 0; i < k.rows(); ++i) y[i] = dot(k.row(i), x);
        pts.push_back(std::move(y));
    }
    return LatticeSet(k.rows(), std::move(pts));
}

Int mixed_volume_recursive(const SupportTuple& t) {
    check_square(t);
    const std::size_t n = t.size();
    if (n == 0) return 1;
    std::vector<LatticeSet> verts;
    for (const auto& a : t) verts.push_back(vertex_set(a));
    LatticeSet sum = verts[0];
    for (std::size_t j = 1; j < n; ++j) sum = vertex_set(minkowski_sum(sum, verts[j]));
    Polytope P = convex_hull(sum);
    if (P.dim < n) return 0;
    Int total = 0;
    for (const auto& f : P.facets) {
        Int l1 = support_value(verts[0], f.normal);
        if (l1 == 0) continue;
        IntMatrix k = kernel_coordinates(f.normal);
        SupportTuple faces;
        for (std::size_t j = 1; j < n; ++j) faces.push_back(to_kernel(face_and_support(verts[j], f.normal).face, k));
        total = checked_add(total, checked_mul(l1, mixed_volume_recursive(faces)));
    }
    return total;
}

Int mixed_volume(const SupportTuple& t) {
    Int a = mixed_volume_inclusion_exclusion(t);
    Int b = mixed_volume_recursive(t);
    if (a != b) throw std::logic_error("mixed volume algorithms disagree");
    return a;
}

Int relative_mixed_volume(const SupportTuple& t) {
    const std::size_t k = t.size();
    if (k == 0) return 1;
    const std::size_t n = ambient_dim(t);
    std::vector<IntVector> gens;
    for (const auto& a : t)
        for (const auto& x : a) gens.push_back(sub(x, a[0]));
    LatticeFrame f = linear_frame(n, gens);
    if (f.rank != k) return 0;
    SupportTuple local;
    for (const auto& a : t) local.push_back(to_span_coords(translate(a, scale(a[0], -1)), f));
    return mixed_volume(local);
}

int sum_dim(const SupportTuple& t, const IndexSet& I) {
    const std::size_t n = ambient_dim(t);
    std::vector<IntVector> gens;
    for (std::size_t j : I)
        for (const auto& x : t[j]) gens.push_back(sub(x, t[j][0]));
    if (gens.empty()) return 0;
    return static_cast<int>(rank(IntMatrix::from_rows(gens, n)));
}

int codimension(const SupportTuple& t, const IndexSet& I) {
    if (I.empty()) throw std::invalid_argument("codimension of the empty subtuple");
    return static_cast<int>(I.size()) - sum_dim(t, I);
}

std::vector<IndexSet> nonempty_subsets(std::size_t k) {
    std::vector<IndexSet> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        IndexSet I;
        for (std::size_t j = 0; j < k; ++j)
            if (mask >> j & 1) I.push_back(j);
        out.push_back(std::move(I));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SubtupleWitness max_codim_subtuple(const SupportTuple& t) {
    SubtupleWitness best;
    bool have = false;
    for (const auto& I : nonempty_subsets(t.size())) {
        int c = codimension(t, I);
        if (!have || c > best.codim) {
            best = {I, c};
            have = true;
        }
    }
    return best;
}

Connectivity connectivity(const SupportTuple& t) {
    SubtupleWitness w = max_codim_subtuple(t);
    if (w.codim > 0) return {Connectivity::Kind::Empty, 0};
    if (w.codim < 0) return {Connectivity::Kind::Connected, 0};
    IndexSet largest = w.indices;
    for (const auto& I : nonempty_subsets(t.size()))
        if (I.size() > largest.size() && codimension(t, I) == 0) largest = I;
    SupportTuple sub;
    for (std::size_t j : largest) sub.push_back(t[j]);
    return {Connectivity::Kind::Components, relative_mixed_volume(sub)};
}

}  // namespace nsolve
