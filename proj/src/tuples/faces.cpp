#include <algorithm>
#include <map>
#include <set>

#include "nsolve/tuples.hpp"

namespace nsolve {

namespace {

LatticeSet vertex_set(const LatticeSet& a) { return LatticeSet(a.dim(), convex_hull(a).vertices); }

bool contains_all(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<LatticeSet> pick(const std::vector<LatticeSet>& parts, const IndexSet& I) {
    std::vector<LatticeSet> out;
    for (std::size_t j : I) out.push_back(parts[j]);
    return out;
}

bool is_lucky_with(const SupportTuple& t, const std::vector<FaceTuple>& fs, Int mv, const Point& a) {
    const std::size_t n = t.size();
    for (const auto& f : fs) {
        if (!f.parts[0].contains(a) || affine_dim(f.parts[0]) == 0) continue;
        bool degenerate = false, avoids_first = false;
        for (const auto& I : nonempty_subsets(n)) {
            if (I.size() == n) continue;
            if (sum_dim(f.parts, I) < static_cast<int>(I.size())) {
                degenerate = true;
                if (I.front() != 0) avoids_first = true;
            }
        }
        if (degenerate) {
            if (!avoids_first) return false;
            continue;
        }
        // No degenerate subtuple: the face is a facet with primitive normal f.witness.
        Int dist = -1;
        for (std::size_t j = 0; j < n; ++j) {
            Int top = support_value(t[j], f.witness);
            for (const auto& x : t[j]) {
                Int gap = top - dot(f.witness, x);
                if (gap > 0 && (dist < 0 || gap < dist)) dist = gap;
            }
        }
        if (dist < 0 || 2 * dist >= mv) return false;
    }
    return true;
}

}  // namespace

std::vector<FaceTuple> faces(const SupportTuple& t, bool include_improper) {
    const std::size_t n = ambient_dim(t);
    LatticeSet sum = vertex_set(t[0]);
    for (std::size_t j = 1; j < t.size(); ++j) sum = vertex_set(minkowski_sum(sum, vertex_set(t[j])));
    Polytope P = convex_hull(sum);

    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> queue;
    for (const auto& f : P.facets)
        if (seen.insert(f.on).second) queue.push_back(f.on);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (const auto& f : P.facets) {
            std::vector<std::size_t> meet;
            std::set_intersection(queue[q].begin(), queue[q].end(), f.on.begin(), f.on.end(), std::back_inserter(meet));
            if (!meet.empty() && seen.insert(meet).second) queue.push_back(meet);
        }
    }

    std::vector<FaceTuple> out;
    for (const auto& face : seen) {
        FaceTuple ft;
        ft.witness.assign(n, 0);
        for (const auto& f : P.facets)
            if (contains_all(f.on, face)) ft.witness = add(ft.witness, f.normal);
        for (const auto& a : t) ft.parts.push_back(face_and_support(a, ft.witness).face);
        std::vector<Point> pts;
        for (std::size_t i : face) pts.push_back(P.points[i]);
        ft.dim = affine_dim(LatticeSet(n, pts));
        out.push_back(std::move(ft));
    }
    std::sort(out.begin(), out.end(), [](const FaceTuple& a, const FaceTuple& b) {
        return std::tie(a.dim, a.witness) < std::tie(b.dim, b.witness);
    });
    if (include_improper) out.push_back({t, Covector(n, 0), static_cast<int>(P.dim), false});
    return out;
}

int subtuple_codim(const std::vector<LatticeSet>& parts) {
    IndexSet I(parts.size());
    for (std::size_t j = 0; j < parts.size(); ++j) I[j] = j;
    return codimension(parts, I);
}

std::vector<EssentialFacing> essential_facings(const SupportTuple& t) {
    std::vector<EssentialFacing> out;
    std::set<std::pair<IndexSet, std::vector<LatticeSet>>> seen;
    for (const auto& f : faces(t)) {
        for (const auto& J : nonempty_subsets(t.size())) {
            std::vector<LatticeSet> parts = pick(f.parts, J);
            if (subtuple_codim(parts) != 1) continue;
            bool ok = true;
            for (const auto& K : nonempty_subsets(J.size()))
                if (K.size() < J.size() && codimension(parts, K) > 0) ok = false;
            if (!ok || !seen.insert({J, parts}).second) continue;
            out.push_back({J, parts, f});
        }
    }
    return out;
}

bool is_lucky(const SupportTuple& t, const Point& a) {
    if (!t[0].contains(a)) throw std::invalid_argument("point is not in the first support");
    return is_lucky_with(t, faces(t), mixed_volume(t), a);
}

std::vector<Point> lucky_points(const SupportTuple& t) {
    if (!is_irreducible(t)) throw std::invalid_argument("tuple is not irreducible");
    std::vector<FaceTuple> fs = faces(t);
    Int mv = mixed_volume(t);
    std::vector<Point> out;
    for (const auto& a : t[0])
        if (is_lucky_with(t, fs, mv, a)) out.push_back(a);
    return out;
}

std::optional<LatticeSet> lucky_subset(const SupportTuple& t, const Point& a) {
    if (t.size() != 2 || ambient_dim(t) != 2) throw std::invalid_argument("subset search is for pairs in Z^2");
    const LatticeSet& A = t[0];
    const LatticeSet& B = t[1];
    const Int target = mixed_volume_inclusion_exclusion(t);
    const std::size_t m = B.size();
    for (std::size_t removed = 0; removed < m; ++removed) {
        std::vector<bool> drop(m, false);
        std::fill(drop.begin(), drop.begin() + static_cast<std::ptrdiff_t>(removed), true);
        std::sort(drop.begin(), drop.end());
        do {
            std::vector<Point> keep;
            for (std::size_t i = 0; i < m; ++i)
                if (!drop[i]) keep.push_back(B[i]);
            LatticeSet bt(2, keep);
            if (mixed_volume_inclusion_exclusion({A, bt}) != target) continue;
            LatticeSet shifted = bt.contains(Point{0, 0}) ? bt : translate(bt, scale(lex_min(bt), -1));
            SupportTuple cand{A, shifted};
            if (!is_irreducible(cand) || !is_reduced(cand).reduced) continue;
            if (is_lucky_with(cand, faces(cand), target, a)) return bt;
        } while (std::next_permutation(drop.begin(), drop.end()));
    }
    return std::nullopt;
}

std::optional<std::pair<Point, Point>> interior_segment(const LatticeSet& a1) {
    Polytope P = convex_hull(a1);
    if (P.dim == 0) return std::nullopt;
    std::vector<std::vector<bool>> on(P.facets.size(), std::vector<bool>(a1.size(), false));
    for (std::size_t f = 0; f < P.facets.size(); ++f)
        for (std::size_t i : P.facets[f].on) on[f][i] = true;
    for (std::size_t i = 0; i < a1.size(); ++i)
        for (std::size_t j = i + 1; j < a1.size(); ++j) {
            bool boundary = false;
            for (std::size_t f = 0; f < on.size() && !boundary; ++f) boundary = on[f][i] && on[f][j];
            if (!boundary) return std::make_pair(a1[i], a1[j]);
        }
    return std::nullopt;
}

}  // namespace nsolve
