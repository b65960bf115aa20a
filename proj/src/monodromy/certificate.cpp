#include <algorithm>
#include <limits>
#include <stdexcept>

#include "nsolve/monodromy.hpp"

namespace nsolve {

namespace {

Int top_gap(const LatticeSet& a, const Covector& beta) {
    Int top = support_value(a, beta);
    Int gap = std::numeric_limits<Int>::max();
    for (const auto& x : a) {
        Int g = top - dot(beta, x);
        if (g > 0) gap = std::min(gap, g);
    }
    return gap;
}

LatticeSet vertex_set(const LatticeSet& a) { return LatticeSet(a.dim(), convex_hull(a).vertices); }

}  // namespace

std::vector<std::pair<Covector, Int>> positive_normals(const SupportTuple& t) {
    const std::size_t n = ambient_dim(t);
    if (t.size() != n || n == 0) throw std::invalid_argument("need n supports in Z^n");
    std::vector<std::pair<Covector, Int>> out;
    if (n == 1) {
        out.push_back({Covector{1}, 1});
        out.push_back({Covector{-1}, 1});
        return out;
    }
    SupportTuple rest(t.begin() + 1, t.end());
    LatticeSet sum = vertex_set(rest[0]);
    for (std::size_t j = 1; j < rest.size(); ++j) sum = vertex_set(minkowski_sum(sum, vertex_set(rest[j])));
    const int dim = affine_dim(sum);
    if (dim == static_cast<int>(n)) {
        for (const auto& f : convex_hull(sum).facets) {
            SupportTuple fs;
            for (const auto& a : rest) fs.push_back(face_and_support(a, f.normal).face);
            Int v = relative_mixed_volume(fs);
            if (v > 0) out.push_back({f.normal, v});
        }
    } else if (dim == static_cast<int>(n) - 1) {
        Int v = relative_mixed_volume(rest);
        if (v > 0) {
            LatticeFrame fr = affine_frame(sum);
            Covector beta = fr.to_coords.col(n - 1);
            out.push_back({beta, v});
            out.push_back({scale(beta, -1), v});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FixedPointCertificate fixed_point_certificate(const SupportTuple& t, const Point& k) {
    if (t.empty() || !t[0].contains(k)) throw std::invalid_argument("k must be a point of the first support");
    const std::size_t n = ambient_dim(t);
    FixedPointCertificate c;
    Covector weighted(n, 0);
    for (const auto& [beta, v] : positive_normals(t)) {
        LambdaEntry e{beta, v, checked_sub(support_value(t[0], beta), dot(beta, k)), 0};
        Int h = std::numeric_limits<Int>::max();
        for (const auto& a : t) h = std::min(h, top_gap(a, beta));
        e.jump = h == std::numeric_limits<Int>::max() ? 0 : h;
        Int used = e.jump == 0 ? e.height : std::min(e.jump, e.height);
        c.unrefined = checked_add(c.unrefined, checked_mul(e.height, v));
        c.bound = checked_add(c.bound, checked_mul(used, v));
        weighted = add(weighted, scale(beta, v));
        c.lambda.push_back(std::move(e));
    }
    c.total = mixed_volume(t);
    c.identity_holds = c.unrefined == c.total;
    c.minkowski_holds = std::all_of(weighted.begin(), weighted.end(), [](Int x) { return x == 0; });
    c.strict = c.bound < c.total;
    return c;
}

Trichotomy trichotomy(const SupportTuple& t, const Point& k0, const Point& k1) {
    const LatticeSet& a1 = t.at(0);
    if (!a1.contains(k0) || !a1.contains(k1)) throw std::invalid_argument("segment ends must lie in the first support");
    auto lambda = positive_normals(t);
    Trichotomy r;
    const Point ends[2] = {k0, k1};
    for (const auto& [beta, v] : lambda) {
        Int top = support_value(a1, beta);
        if (top > dot(beta, k0) && top > dot(beta, k1)) r.first = true;
        for (int s = 0; s < 2; ++s)
            for (const auto& x : a1) {
                Int b2 = dot(beta, x);
                if (dot(beta, ends[s]) > b2 && b2 > dot(beta, ends[1 - s])) r.second = true;
            }
    }
    for (int s = 0; s < 2 && !r.third; ++s)
        for (std::size_t i = 0; i < lambda.size() && !r.third; ++i)
            for (std::size_t j = i + 1; j < lambda.size() && !r.third; ++j) {
                LatticeSet f1 = face_and_support(a1, lambda[i].first).face;
                LatticeSet f2 = face_and_support(a1, lambda[j].first).face;
                if (f1.contains(ends[s]) && f2.contains(ends[s]) && (affine_dim(f1) >= 1 || affine_dim(f2) >= 1))
                    r.third = true;
            }
    return r;
}

}  // namespace nsolve
