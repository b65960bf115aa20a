#include <algorithm>
#include <stdexcept>

#include "nsolve/tuples.hpp"

namespace nsolve {

namespace {

std::vector<IntVector> union_points(const SupportTuple& t, const IndexSet& I) {
    std::vector<IntVector> pts;
    for (std::size_t j : I) pts.insert(pts.end(), t[j].begin(), t[j].end());
    return pts;
}

IndexSet all_indices(std::size_t k) {
    IndexSet I(k);
    for (std::size_t j = 0; j < k; ++j) I[j] = j;
    return I;
}

std::size_t union_rank(const SupportTuple& t, const IndexSet& I) {
    auto pts = union_points(t, I);
    return pts.empty() ? 0 : rank(IntMatrix::from_rows(pts, ambient_dim(t)));
}

bool cascade(const SupportTuple& t, const IndexSet& orig, const IntMatrix& transform, std::vector<Stage>& out,
             Int& degree) {
    NormalizationReport r = normalize_irreducible(t);
    if (r.kind == NormalizationReport::Kind::Inconsistent) return false;
    degree = checked_mul(degree, std::abs(determinant(r.phi)));
    const SupportTuple& u = r.tuple;
    const std::size_t n = ambient_dim(u);
    ReducedCheck rc = u.size() <= 1 ? ReducedCheck{} : is_reduced(u);
    if (rc.reduced) {
        out.push_back({u, orig, transform});
        return true;
    }
    const IndexSet& I = rc.witness;
    const std::size_t k = I.size();
    if (union_rank(u, I) < k) return false;
    LatticeFrame f = linear_frame(n, union_points(u, I));
    SupportTuple head, tail;
    IndexSet head_orig, tail_orig;
    for (std::size_t j = 0; j < u.size(); ++j) {
        if (std::binary_search(I.begin(), I.end(), j)) {
            head.push_back(to_span_coords(u[j], f));
            head_orig.push_back(orig[j]);
        } else {
            std::vector<Point> pts;
            for (const auto& x : u[j]) pts.push_back(f.quotient_coords(x));
            tail.push_back(LatticeSet(n - k, std::move(pts)));
            tail_orig.push_back(orig[j]);
        }
    }
    return cascade(head, head_orig, f.to_coords, out, degree) && cascade(tail, tail_orig, f.to_coords, out, degree);
}

}  // namespace

std::string to_string(NormalizationReport::Kind k) {
    switch (k) {
        case NormalizationReport::Kind::Irreducible: return "Irreducible";
        case NormalizationReport::Kind::Inconsistent: return "Inconsistent";
        case NormalizationReport::Kind::ChangedVariables: return "ChangedVariables";
        case NormalizationReport::Kind::ReducedCascade: return "ReducedCascade";
    }
    return "?";
}

bool is_irreducible(const SupportTuple& t) {
    const std::size_t n = ambient_dim(t);
    for (const auto& a : t)
        if (!a.contains(Point(n, 0))) return false;
    auto pts = union_points(t, all_indices(t.size()));
    if (n == 0) return true;
    auto idx = lattice_index(pts, full_lattice(n));
    return idx && *idx == 1;
}

NormalizationReport normalize_irreducible(const SupportTuple& t) {
    NormalizationReport r;
    const std::size_t n = ambient_dim(t);
    SupportTuple shifted;
    bool moved = false;
    for (const auto& a : t) {
        IntVector s = Point(n, 0);
        if (!a.contains(s)) {
            s = lex_min(a);
            moved = true;
        }
        shifted.push_back(translate(a, scale(s, -1)));
        r.shifts.push_back(std::move(s));
    }
    Sublattice L = generated_lattice(n, union_points(shifted, all_indices(t.size())));
    if (L.rank() < n) {
        r.kind = NormalizationReport::Kind::Inconsistent;
        return r;
    }
    IntMatrix b = IntMatrix::from_rows(L.basis, n);
    Int det = determinant(b);
    if (det == 1 || det == -1) {
        r.kind = moved ? NormalizationReport::Kind::ChangedVariables : NormalizationReport::Kind::Irreducible;
        r.tuple = shifted;
        r.phi = IntMatrix::identity(n);
        return r;
    }
    r.kind = NormalizationReport::Kind::ChangedVariables;
    r.phi = b.transposed();
    IntMatrix adj = adjugate(b);
    for (const auto& a : shifted) {
        std::vector<Point> pts;
        for (const auto& x : a) {
            Point y = x * adj;
            for (auto& c : y) {
                if (c % det != 0) throw std::logic_error("point outside its generated lattice");
                c /= det;
            }
            pts.push_back(std::move(y));
        }
        r.tuple.push_back(LatticeSet(n, std::move(pts)));
    }
    return r;
}

ReducedCheck is_reduced(const SupportTuple& t) {
    if (!is_irreducible(t)) throw std::invalid_argument("tuple is not irreducible");
    std::vector<IndexSet> subsets = nonempty_subsets(t.size());
    std::stable_sort(subsets.begin(), subsets.end(), [](const IndexSet& a, const IndexSet& b) { return a.size() < b.size(); });
    for (const auto& I : subsets) {
        if (I.size() == t.size()) continue;
        if (union_rank(t, I) <= I.size()) return {false, I};
    }
    return {};
}

NormalizationReport reduce_decompose(const SupportTuple& t) {
    ReducedCheck rc = is_reduced(t);
    if (rc.reduced) throw std::invalid_argument("tuple is already reduced");
    NormalizationReport r;
    r.witness = rc.witness;
    r.tuple = t;
    r.phi = IntMatrix::identity(ambient_dim(t));
    bool ok = cascade(t, all_indices(t.size()), IntMatrix::identity(ambient_dim(t)), r.stages, r.covering_degree);
    r.kind = ok ? NormalizationReport::Kind::ReducedCascade : NormalizationReport::Kind::Inconsistent;
    if (!ok) r.stages.clear();
    return r;
}

}  // namespace nsolve
