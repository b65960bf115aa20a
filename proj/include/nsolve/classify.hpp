#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsolve/lattice.hpp"

namespace nsolve {

struct Circuit {
    LatticeSet points;
    LatticeSet positive;  // the larger side; ties go to the side holding the lex-min point
    LatticeSet negative;
};

/// The A+/A- split of a minimal affinely dependent set; nullopt for anything else.
std::optional<Circuit> circuit_decompose(const LatticeSet& a);
/// Vol(conv A+) times the volume of A- projected along the span of A+.
/// Throws std::logic_error if this disagrees with lattice_volume(points).
Int circuit_volume(const Circuit& c);

struct CanonicalClass {
    LatticeSet representative;  // canonical form, full-dimensional in Z^dim
    std::size_t dim = 0;
    Int volume = 0;
};

/// Lexicographically least image of `a` under affine lattice automorphisms,
/// written in coordinates of its affine span. Equal outputs <=> equivalent inputs.
LatticeSet canonical_form(const LatticeSet& a);
CanonicalClass make_class(const LatticeSet& a);

/// Building blocks for the named sets.
LatticeSet standard_simplex(std::size_t n);  // {0, e_1, ..., e_n}
LatticeSet dilate(const LatticeSet& a, Int d);
LatticeSet product(const LatticeSet& a, const LatticeSet& b);
LatticeSet standard_cone(const LatticeSet& b);  // b x {0} ∪ {e_{m+1}}
LatticeSet join(const LatticeSet& a, const LatticeSet& b);        // a x 0 x 0 ∪ 0 x b x 1
LatticeSet direct_sum(const LatticeSet& a, const LatticeSet& b);  // a x 0 ∪ 0 x b
LatticeSet with_point(const LatticeSet& a, const Point& p);

/// All circuits of volume <= max_vol up to affine lattice automorphisms.
std::vector<CanonicalClass> enumerate_circuits(Int max_vol);

struct ConePeel {
    LatticeSet core;  // in coordinates of its own span
    std::size_t cone_count = 0;
};
/// Strips standard cones while the span has dimension >= 2.
ConePeel cone_peel(const LatticeSet& a);

/// Saturated full-dimensional sets in Z^n with hull volume <= max_vol, reducible ones included.
std::vector<CanonicalClass> enumerate_polytopes(std::size_t n, Int max_vol);

/// Irreducible saturated sets of volume <= 4 that are not standard cones
/// (segments excepted), dimensions 1 to 6. Sorted by (dim, volume, representative).
std::vector<CanonicalClass> enumerate_maximal_sets_vol4();

/// True if some affine lattice automorphism maps a into b (both full-dimensional, same dimension).
bool embeds(const LatticeSet& a, const LatticeSet& b);

/// Mixed area through the edge formula sum a_i * b_i.
/// Throws std::invalid_argument unless a is two-dimensional.
Int mixed_area_edges(const LatticeSet& a, const LatticeSet& b);

struct PairConvention {
    bool allow_swap = true;
    bool orientation_preserving = false;  // SL(2,Z) instead of GL(2,Z)
};

struct CanonicalPair {
    LatticeSet first;
    LatticeSet second;
    Int mixed_volume = 0;
    friend auto operator<=>(const CanonicalPair&, const CanonicalPair&) = default;
    friend bool operator==(const CanonicalPair&, const CanonicalPair&) = default;
};

CanonicalPair canonical_pair(const LatticeSet& a, const LatticeSet& b, const PairConvention& conv = {});
/// G a + s ⊂ a2 and G b + t ⊂ b2 for one common G (and the swapped version when allowed).
bool pair_embeds(const CanonicalPair& p, const CanonicalPair& q, const PairConvention& conv = {});

/// Every reduced pair in Z^2 with mixed area <= 4, up to the convention (saturated supports only).
std::vector<CanonicalPair> enumerate_pairs_2d(const PairConvention& conv = {});
/// The inclusion-maximal ones among enumerate_pairs_2d.
std::vector<CanonicalPair> enumerate_maximal_pairs_2d(const PairConvention& conv = {});

/// Cases for an irreducible M ∋ 0: simplices at 0 of total volume >= 3,
/// iterated cone over a length-2 segment or an area-2 parallelogram, unit simplex.
enum class ProjectionCase { LargeSimplices, ConeOverTwo, UnitSimplex };
struct ProjectionCases {
    bool large_simplices = false;
    bool cone_over_two = false;
    bool unit_simplex = false;
    Int cone_total = 0;  // volume of the simplices coned from 0
};
/// Each test is evaluated independently so callers can check exclusivity.
ProjectionCases projection_cases(const LatticeSet& m);

}  // namespace nsolve
