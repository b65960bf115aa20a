#include <set>
#include <stdexcept>

#include "nsolve/classify.hpp"
#include "simplices.hpp"

namespace nsolve {

std::optional<Circuit> circuit_decompose(const LatticeSet& a) {
    if (a.size() < 2) return std::nullopt;
    LatticeFrame frame = affine_frame(a);
    const std::size_t k = frame.rank;
    if (a.size() != k + 2) return std::nullopt;
    std::vector<IntVector> s;
    for (const auto& x : a) s.push_back(frame.span_coords(x));
    // The kernel of [points; 1] is spanned by its signed maximal minors.
    const std::size_t cols = k + 2;
    IntVector c(cols);
    for (std::size_t drop = 0; drop < cols; ++drop) {
        IntMatrix m(k + 1, k + 1);
        for (std::size_t j = 0, jj = 0; j < cols; ++j) {
            if (j == drop) continue;
            for (std::size_t r = 0; r < k; ++r) m(r, jj) = s[j][r];
            m(k, jj) = 1;
            ++jj;
        }
        Int d = determinant(m);
        c[drop] = drop % 2 ? checked_sub(0, d) : d;
        if (c[drop] == 0) return std::nullopt;
    }
    std::vector<Point> pos, neg;
    for (std::size_t j = 0; j < cols; ++j) (c[j] > 0 ? pos : neg).push_back(a[j]);
    // a[0] is the lex-min point.
    bool flip = neg.size() > pos.size() || (neg.size() == pos.size() && c[0] < 0);
    if (flip) std::swap(pos, neg);
    return Circuit{a, LatticeSet(a.dim(), std::move(pos)), LatticeSet(a.dim(), std::move(neg))};
}

Int circuit_volume(const Circuit& c) {
    LatticeFrame frame = affine_frame(c.points);
    const std::size_t k = frame.rank;
    LatticeSet plus = to_span_coords(c.positive, frame);
    LatticeSet minus = to_span_coords(c.negative, frame);
    std::vector<IntVector> dirs;
    for (const auto& x : plus) dirs.push_back(sub(x, plus[0]));
    Sublattice along = generated_lattice(k, dirs);
    Int v = checked_mul(lattice_volume(plus), lattice_volume(project_along(minus, along)));
    if (v != lattice_volume(c.points)) throw std::logic_error("circuit volume product disagrees with the hull volume");
    return v;
}

std::vector<CanonicalClass> enumerate_circuits(Int max_vol) {
    std::set<LatticeSet> seen;
    std::vector<CanonicalClass> out;
    // Sides have at most max_vol points, so the span has dimension at most 2 max_vol - 2.
    for (std::size_t k = 1; k + 2 <= static_cast<std::size_t>(2 * max_vol); ++k) {
        // Dropping a point of the larger side leaves a simplex of volume
        // at most max_vol - (larger side - 1).
        const Int larger = static_cast<Int>((k + 3) / 2);
        for (Int det = 1; det <= max_vol - larger + 1; ++det) {
            auto nums = detail::numerators(k + 1, det, max_vol, true);
            detail::for_each_hermite(k, det, [&](const IntMatrix& h) {
                std::vector<Point> s{Point(k, 0)};
                for (std::size_t i = 0; i < k; ++i) s.push_back(h.row(i));
                for (const auto& x : detail::barycentric_points(s, det, nums)) {
                    LatticeSet a(k, [&] {
                        auto pts = s;
                        pts.push_back(x);
                        return pts;
                    }());
                    auto circ = circuit_decompose(a);
                    if (!circ || lattice_volume(a) > max_vol) continue;
                    LatticeSet rep = canonical_form(a);
                    if (!seen.insert(rep).second) continue;
                    out.push_back({rep, k, circuit_volume(*circ)});
                }
            });
        }
    }
    std::sort(out.begin(), out.end(), [](const CanonicalClass& x, const CanonicalClass& y) {
        return std::tie(x.dim, x.volume, x.representative) < std::tie(y.dim, y.volume, y.representative);
    });
    return out;
}

}  // namespace nsolve
