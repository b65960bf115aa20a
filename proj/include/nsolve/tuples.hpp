#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nsolve/mixedvol.hpp"

namespace nsolve {

bool is_irreducible(const SupportTuple& t);

struct Stage {
    SupportTuple tuple;
    IndexSet original_indices;  // positions of these supports in the input tuple
    IntMatrix transform;        // row convention: new coordinates = old * transform (then truncated)
};

struct NormalizationReport {
    enum class Kind { Irreducible, Inconsistent, ChangedVariables, ReducedCascade };
    Kind kind = Kind::Irreducible;
    SupportTuple tuple;             // normalized tuple (not set when Inconsistent)
    std::vector<IntVector> shifts;  // translation subtracted from each support
    IntMatrix phi;                  // inclusion matrix, columns generate the lattice L
    IndexSet witness;               // non-reduced witness (cascade only)
    std::vector<Stage> stages;      // reduced or univariate leaves (cascade only)
    /// Product of the lattice indices divided out by re-normalizing stages:
    /// MV(input) = covering_degree * prod MV(stage).
    Int covering_degree = 1;
};

std::string to_string(NormalizationReport::Kind k);

NormalizationReport normalize_irreducible(const SupportTuple& t);

struct ReducedCheck {
    bool reduced = true;
    IndexSet witness;
};
/// Smallest failing index set (by size, then lexicographic); throws if t is not irreducible.
ReducedCheck is_reduced(const SupportTuple& t);

/// Splits a non-reduced irreducible tuple into head/tail stages recursively.
/// Throws if t is reduced or not irreducible.
NormalizationReport reduce_decompose(const SupportTuple& t);

struct FaceTuple {
    std::vector<LatticeSet> parts;  // F_j ⊆ A_j
    Covector witness;               // zero for the improper face
    int dim = 0;                    // dimension of the sum of the parts
    bool proper = true;
};

/// All faces of the tuple, from the face lattice of conv(sum A_j).
std::vector<FaceTuple> faces(const SupportTuple& t, bool include_improper = false);

struct EssentialFacing {
    IndexSet indices;
    std::vector<LatticeSet> parts;
    FaceTuple face;  // an enclosing proper face
};

/// Codimension of the subtuple (parts over the given indices).
int subtuple_codim(const std::vector<LatticeSet>& parts);

std::vector<EssentialFacing> essential_facings(const SupportTuple& t);

bool is_lucky(const SupportTuple& t, const Point& a);
std::vector<Point> lucky_points(const SupportTuple& t);

/// For pairs in Z^2: a subset of the second support keeping the mixed
/// area under which `a` becomes lucky (and the pair stays reduced).
std::optional<LatticeSet> lucky_subset(const SupportTuple& t, const Point& a);

std::optional<std::pair<Point, Point>> interior_segment(const LatticeSet& a1);

}  // namespace nsolve
