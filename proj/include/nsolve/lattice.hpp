#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsolve/integer_matrix.hpp"

namespace nsolve {

using Point = IntVector;
using Covector = IntVector;

/// Finite subset of Z^dim, kept sorted lexicographically and duplicate-free.
class LatticeSet {
public:
    LatticeSet() = default;
    /// Sorts and removes repeated points.
    LatticeSet(std::size_t dim, std::vector<Point> points);
    /// Rejects repeated points (coefficients are indexed by points).
    static LatticeSet from_unique(std::size_t dim, std::vector<Point> points);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const std::vector<Point>& points() const { return points_; }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }
    bool contains(const Point& p) const;

    friend bool operator==(const LatticeSet&, const LatticeSet&) = default;
    friend auto operator<=>(const LatticeSet&, const LatticeSet&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Point> points_;
};

LatticeSet minkowski_sum(const LatticeSet& a, const LatticeSet& b);
LatticeSet translate(const LatticeSet& a, const IntVector& t);
LatticeSet set_union(const LatticeSet& a, const LatticeSet& b);
LatticeSet set_difference(const LatticeSet& a, const LatticeSet& b);
bool is_subset(const LatticeSet& a, const LatticeSet& b);
Point lex_min(const LatticeSet& a);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, Int f);

/// "(1,2)" and "{(0,0),(1,0)}".
std::string to_string(const IntVector& p);
std::string to_string(const LatticeSet& a);

/// Sublattice of Z^ambient_dim spanned by a rationally independent basis.
struct Sublattice {
    std::size_t ambient_dim = 0;
    std::vector<IntVector> basis;
    std::size_t rank() const { return basis.size(); }
};

/// Lattice generated by arbitrary vectors (basis = non-zero Hermite rows).
Sublattice generated_lattice(std::size_t ambient_dim, const std::vector<IntVector>& gens);
Sublattice full_lattice(std::size_t n);
Sublattice saturation(const Sublattice& s);
/// Index of <gens> inside ambient ∩ span(gens); nullopt when the ranks differ
/// (infinite index). Throws std::invalid_argument if a generator leaves the
/// rational span of ambient or is not in ambient.
std::optional<Int> lattice_index(const std::vector<IntVector>& gens, const Sublattice& ambient);

/// Coordinates adapted to an affine sublattice: x -> (x - origin) * to_coords.
/// The first `rank` coordinates parametrize the saturated direction lattice,
/// the remaining ones the quotient Z^n / saturation.
struct LatticeFrame {
    IntVector origin;
    std::size_t rank = 0;
    IntMatrix to_coords;    // V, n x n unimodular
    IntMatrix from_coords;  // V^{-1}; its first `rank` rows span the saturation

    IntVector coords(const Point& x) const;
    IntVector span_coords(const Point& x) const;
    IntVector quotient_coords(const Point& x) const;
    Point lift(const IntVector& span) const;
    /// Ambient covector and offset representing a covector on span coordinates.
    std::pair<Covector, Int> ambient_covector(const Covector& u, Int value) const;
};

LatticeFrame linear_frame(std::size_t ambient_dim, const std::vector<IntVector>& gens);
LatticeFrame affine_frame(const LatticeSet& a);
/// Dimension of the affine hull; -1 for the empty set.
int affine_dim(const LatticeSet& a);
LatticeSet to_span_coords(const LatticeSet& a, const LatticeFrame& f);

struct Facet {
    Covector normal;  // primitive, outward; relative to the affine span when lower-dimensional
    Int value;        // max of normal over the polytope
    std::vector<std::size_t> on;  // indices of input points on the facet
};

struct Polytope {
    LatticeSet points;  // input points
    std::size_t dim = 0;  // dimension of the affine span
    std::vector<Point> vertices;
    std::vector<Facet> facets;
    Int volume = 0;  // normalized volume inside the lattice of the affine span
    LatticeFrame frame;
};

Polytope convex_hull(const LatticeSet& a);
/// Normalized volume measured in the affine span's lattice.
Int lattice_volume(const LatticeSet& a);

/// All lattice points of conv(a), within the lattice of its affine span.
LatticeSet lattice_points(const LatticeSet& a);
/// Normalized volume in Z^dim; zero for lower-dimensional sets.
Int full_volume(const LatticeSet& a);

struct FaceSupport {
    LatticeSet face;
    Int value;
};
FaceSupport face_and_support(const LatticeSet& a, const Covector& l);
Int support_value(const LatticeSet& a, const Covector& l);
Int lattice_distance(const Covector& l, Int c, const Point& p);

/// Image of `a` in Z^n / saturation(s), in the quotient basis fixed by the
/// Smith transform of s's basis.
LatticeSet project_along(const LatticeSet& a, const Sublattice& s);

/// x -> matrix * x + translation (column convention).
struct UnimodularAffineMap {
    IntMatrix matrix;
    IntVector translation;
    Point apply(const Point& x) const;
    LatticeSet apply(const LatticeSet& a) const;
    UnimodularAffineMap inverse() const;
    UnimodularAffineMap then(const UnimodularAffineMap& next) const;  // next ∘ this
};

std::optional<UnimodularAffineMap> affine_equivalence(const LatticeSet& a, const LatticeSet& b);

}  // namespace nsolve
