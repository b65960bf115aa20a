#pragma once

#include <vector>

#include "nsolve/lattice.hpp"

namespace nsolve {

/// Ordered tuple of supports sharing one ambient dimension.
using SupportTuple = std::vector<LatticeSet>;
using IndexSet = std::vector<std::size_t>;  // sorted, 0-based

std::size_t ambient_dim(const SupportTuple& t);

/// Mixed volume of n sets in Z^n, normalized so MV(A,...,A) = Vol(A).
/// Computed by inclusion-exclusion and checked against the recursive formula.
Int mixed_volume(const SupportTuple& t);
Int mixed_volume_inclusion_exclusion(const SupportTuple& t);
/// Sum over primitive facet normals a of l_{A1}(a) * MV(A2^a, ..., An^a).
Int mixed_volume_recursive(const SupportTuple& t);

/// Mixed volume of k sets measured in the lattice of the affine span of
/// their Minkowski sum; 0 if that span has dimension other than k.
Int relative_mixed_volume(const SupportTuple& t);

/// Matrix whose rows give coordinates on ker(alpha) (alpha primitive).
IntMatrix kernel_coordinates(const Covector& alpha);
/// Images of a set under kernel_coordinates (drops the constant alpha-level).
LatticeSet to_kernel(const LatticeSet& a, const IntMatrix& k);

/// Dimension of the affine span of sum_{j in I} A_j.
int sum_dim(const SupportTuple& t, const IndexSet& I);
int codimension(const SupportTuple& t, const IndexSet& I);

struct SubtupleWitness {
    IndexSet indices;
    int codim = 0;
};
SubtupleWitness max_codim_subtuple(const SupportTuple& t);

/// All non-empty index subsets of {0..k-1} in lexicographic order.
std::vector<IndexSet> nonempty_subsets(std::size_t k);

struct Connectivity {
    enum class Kind { Empty, Components, Connected } kind;
    Int components = 0;
};
Connectivity connectivity(const SupportTuple& t);

}  // namespace nsolve
