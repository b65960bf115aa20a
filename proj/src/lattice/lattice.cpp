#include <algorithm>
#include <stdexcept>

#include "nsolve/lattice.hpp"

namespace nsolve {

LatticeSet::LatticeSet(std::size_t dim, std::vector<Point> points) : dim_(dim), points_(std::move(points)) {
    for (const auto& p : points_)
        if (p.size() != dim_) throw std::invalid_argument("point has wrong dimension");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

LatticeSet LatticeSet::from_unique(std::size_t dim, std::vector<Point> points) {
    std::size_t n = points.size();
    LatticeSet s(dim, std::move(points));
    if (s.size() != n) throw std::invalid_argument("duplicate point in lattice set");
    return s;
}

bool LatticeSet::contains(const Point& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

IntVector add(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

IntVector scale(const IntVector& a, Int f) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], f);
    return r;
}

std::string to_string(const IntVector& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

std::string to_string(const LatticeSet& a) {
    std::string s = "{";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + to_string(a[i]);
    return s + "}";
}

LatticeSet minkowski_sum(const LatticeSet& a, const LatticeSet& b) {
    std::vector<Point> pts;
    pts.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) pts.push_back(add(x, y));
    return LatticeSet(a.dim(), std::move(pts));
}

LatticeSet translate(const LatticeSet& a, const IntVector& t) {
    std::vector<Point> pts;
    for (const auto& x : a) pts.push_back(add(x, t));
    return LatticeSet(a.dim(), std::move(pts));
}

LatticeSet set_union(const LatticeSet& a, const LatticeSet& b) {
    std::vector<Point> pts = a.points();
    pts.insert(pts.end(), b.begin(), b.end());
    return LatticeSet(a.dim(), std::move(pts));
}

LatticeSet set_difference(const LatticeSet& a, const LatticeSet& b) {
    std::vector<Point> pts;
    for (const auto& x : a)
        if (!b.contains(x)) pts.push_back(x);
    return LatticeSet(a.dim(), std::move(pts));
}

bool is_subset(const LatticeSet& a, const LatticeSet& b) {
    return std::all_of(a.begin(), a.end(), [&](const Point& p) { return b.contains(p); });
}

Point lex_min(const LatticeSet& a) {
    if (a.empty()) throw std::invalid_argument("empty lattice set");
    return a[0];
}

Sublattice generated_lattice(std::size_t ambient_dim, const std::vector<IntVector>& gens) {
    Sublattice s{ambient_dim, {}};
    if (gens.empty()) return s;
    IntMatrix h = hermite_form(IntMatrix::from_rows(gens, ambient_dim));
    for (std::size_t i = 0; i < h.rows(); ++i) {
        IntVector r = h.row(i);
        if (content(r) != 0) s.basis.push_back(std::move(r));
    }
    return s;
}

Sublattice full_lattice(std::size_t n) {
    Sublattice s{n, {}};
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        s.basis.push_back(e);
    }
    return s;
}

LatticeFrame linear_frame(std::size_t ambient_dim, const std::vector<IntVector>& gens) {
    LatticeFrame f;
    f.origin.assign(ambient_dim, 0);
    if (gens.empty()) {
        f.to_coords = IntMatrix::identity(ambient_dim);
        f.from_coords = IntMatrix::identity(ambient_dim);
        return f;
    }
    HermiteSmith hs = hermite_smith(IntMatrix::from_rows(gens, ambient_dim));
    f.rank = hs.rank;
    f.to_coords = hs.smith_right;
    f.from_coords = hs.smith_right_inverse;
    return f;
}

Sublattice saturation(const Sublattice& s) {
    LatticeFrame f = linear_frame(s.ambient_dim, s.basis);
    Sublattice out{s.ambient_dim, {}};
    for (std::size_t i = 0; i < f.rank; ++i) out.basis.push_back(f.from_coords.row(i));
    return out;
}

std::optional<Int> lattice_index(const std::vector<IntVector>& gens, const Sublattice& ambient) {
    const std::size_t n = ambient.ambient_dim;
    const std::size_t r = ambient.rank();
    IntMatrix b = IntMatrix::from_rows(ambient.basis, n);
    HermiteSmith hs = hermite_smith(b);
    if (hs.rank != r) throw std::invalid_argument("ambient basis is not independent");
    IntVector d = hs.invariants();
    // Coordinates of each generator with respect to the basis U^{-1} S V^{-1} rows.
    std::vector<IntVector> coords;
    for (const auto& g : gens) {
        if (g.size() != n) throw std::invalid_argument("generator has wrong dimension");
        IntVector z = g * hs.smith_right;
        for (std::size_t i = r; i < n; ++i)
            if (z[i] != 0) throw std::invalid_argument("generator outside the span of the ambient lattice");
        IntVector w(r);
        for (std::size_t i = 0; i < r; ++i) {
            if (z[i] % d[i] != 0) throw std::invalid_argument("generator outside the ambient lattice");
            w[i] = z[i] / d[i];
        }
        coords.push_back(std::move(w));
    }
    if (r == 0) return 1;
    if (coords.empty()) return std::nullopt;
    HermiteSmith gs = hermite_smith(IntMatrix::from_rows(coords, r));
    if (gs.rank != r) return std::nullopt;
    Int idx = 1;
    for (Int x : gs.invariants()) idx = checked_mul(idx, x);
    return idx;
}

IntVector LatticeFrame::coords(const Point& x) const { return sub(x, origin) * to_coords; }

IntVector LatticeFrame::span_coords(const Point& x) const {
    IntVector c = coords(x);
    c.resize(rank);
    return c;
}

IntVector LatticeFrame::quotient_coords(const Point& x) const {
    IntVector c = coords(x);
    return IntVector(c.begin() + static_cast<std::ptrdiff_t>(rank), c.end());
}

Point LatticeFrame::lift(const IntVector& span) const {
    Point p = origin;
    for (std::size_t i = 0; i < span.size(); ++i) p = add(p, scale(from_coords.row(i), span[i]));
    return p;
}

std::pair<Covector, Int> LatticeFrame::ambient_covector(const Covector& u, Int value) const {
    const std::size_t n = origin.size();
    Covector a(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < u.size(); ++i) a[j] = checked_add(a[j], checked_mul(to_coords(j, i), u[i]));
    return {a, checked_add(value, dot(origin, a))};
}

LatticeFrame affine_frame(const LatticeSet& a) {
    if (a.empty()) throw std::invalid_argument("empty lattice set");
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < a.size(); ++i) diffs.push_back(sub(a[i], a[0]));
    LatticeFrame f = linear_frame(a.dim(), diffs);
    f.origin = a[0];
    return f;
}

int affine_dim(const LatticeSet& a) {
    if (a.empty()) return -1;
    return static_cast<int>(affine_frame(a).rank);
}

LatticeSet to_span_coords(const LatticeSet& a, const LatticeFrame& f) {
    std::vector<Point> pts;
    for (const auto& x : a) pts.push_back(f.span_coords(x));
    return LatticeSet(f.rank, std::move(pts));
}

Int support_value(const LatticeSet& a, const Covector& l) {
    if (a.empty()) throw std::invalid_argument("empty lattice set");
    Int best = dot(a[0], l);
    for (const auto& x : a) best = std::max(best, dot(x, l));
    return best;
}

FaceSupport face_and_support(const LatticeSet& a, const Covector& l) {
    Int best = support_value(a, l);
    std::vector<Point> pts;
    for (const auto& x : a)
        if (dot(x, l) == best) pts.push_back(x);
    return {LatticeSet(a.dim(), std::move(pts)), best};
}

Int lattice_distance(const Covector& l, Int c, const Point& p) {
    if (!is_primitive(l)) throw std::invalid_argument("covector is not primitive");
    Int d = checked_sub(dot(l, p), c);
    return d < 0 ? checked_sub(0, d) : d;
}

LatticeSet project_along(const LatticeSet& a, const Sublattice& s) {
    LatticeFrame f = linear_frame(a.dim(), s.basis);
    std::vector<Point> pts;
    for (const auto& x : a) pts.push_back(f.quotient_coords(x));
    return LatticeSet(a.dim() - f.rank, std::move(pts));
}

Point UnimodularAffineMap::apply(const Point& x) const {
    Point y = translation;
    for (std::size_t i = 0; i < matrix.rows(); ++i)
        for (std::size_t j = 0; j < matrix.cols(); ++j) y[i] = checked_add(y[i], checked_mul(matrix(i, j), x[j]));
    return y;
}

LatticeSet UnimodularAffineMap::apply(const LatticeSet& a) const {
    std::vector<Point> pts;
    for (const auto& x : a) pts.push_back(apply(x));
    return LatticeSet(a.dim(), std::move(pts));
}

UnimodularAffineMap UnimodularAffineMap::inverse() const {
    UnimodularAffineMap inv;
    inv.matrix = unimodular_inverse(matrix);
    inv.translation = scale(UnimodularAffineMap{inv.matrix, IntVector(matrix.rows(), 0)}.apply(translation), -1);
    return inv;
}

UnimodularAffineMap UnimodularAffineMap::then(const UnimodularAffineMap& next) const {
    return {next.matrix * matrix, next.apply(translation)};
}

}  // namespace nsolve
