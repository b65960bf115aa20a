#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsolve/tuples.hpp"

namespace nsolve {

/// Permutation cycle type sum a_i e_i, stored as length -> count.
struct CycleType {
    std::map<Int, Int> counts;

    void add(Int length, Int count);
    Int moved_points() const;  // sum length * count
    std::string to_string() const;  // "e2+3e1", longest cycles first; "0" when empty
    friend bool operator==(const CycleType&, const CycleType&) = default;
};

/// prod (1 - t^h)^exponent, keyed by h; zero exponents are dropped.
struct ZetaFunction {
    std::map<Int, Int> factors;

    void multiply(Int h, Int exponent);
    Int degree() const;  // sum h * exponent
    std::string to_string() const;
    friend bool operator==(const ZetaFunction&, const ZetaFunction&) = default;
};

/// Supports A_0..A_m in Z_{>=0} x Z^m; the first coordinate is the degeneration order.
struct LocalSetup {
    std::vector<LatticeSet> supports;
};

struct DBData {
    Int d_B = 0;
    std::optional<IndexSet> I_B;
    std::optional<Sublattice> L_B;
};

DBData compute_dB(const std::vector<LatticeSet>& bs);
CycleType local_cycle_type(const LocalSetup& s);

/// A subtuple (B_j ⊆ A_j for j in indices) of some face.
struct Subtuple {
    IndexSet indices;
    std::vector<LatticeSet> parts;
};

CycleType facing_cycle_type(const SupportTuple& t, const EssentialFacing& s);
CycleType discriminant_cycle_type(const SupportTuple& t);

std::string facing_id(const IndexSet& indices, const std::vector<LatticeSet>& parts);
std::vector<std::pair<std::string, CycleType>> monodromy_summary(const SupportTuple& t);

/// Index inside its saturation of the lattice generated by the Cayley
/// embedding A_j x {e_j} in Z^{n+p}; for one set this is <A x {1}>.
Int augmented_index(const std::vector<LatticeSet>& sets);

ZetaFunction zeta_discriminant(const SupportTuple& t);

/// Parts of a proper face at the given indices; nullopt if b is not one.
std::optional<FaceTuple> enclosing_face(const SupportTuple& t, const Subtuple& b);
bool is_important(const SupportTuple& t, const Subtuple& b);
ZetaFunction zeta_facing(const SupportTuple& t, const Subtuple& b);

struct LambdaEntry {
    Covector beta;  // primitive, maximized on the faces
    Int volume;     // mixed volume of the faces of A_2..A_n in ker beta
    Int height;     // H = l_beta(A_1) - beta(k)
    Int jump;       // h = smallest top gap over all supports (0 if every support is flat)
};

struct FixedPointCertificate {
    std::vector<LambdaEntry> lambda;
    Int unrefined = 0;  // sum H * V
    Int bound = 0;      // sum min(h, H) * V
    Int total = 0;      // MV
    bool strict = false;
    bool identity_holds = false;   // unrefined == total
    bool minkowski_holds = false;  // sum V * beta == 0
};

/// The covectors beta with positive mixed volume of the faces of A_2..A_n.
std::vector<std::pair<Covector, Int>> positive_normals(const SupportTuple& t);

FixedPointCertificate fixed_point_certificate(const SupportTuple& t, const Point& k);

/// Which of the three conditions on an interior segment (k0, k1) of A_1 hold.
struct Trichotomy {
    bool first = false;   // some beta has both ends strictly below the top of A_1
    bool second = false;  // some beta separates a third point of A_1 strictly between the ends
    bool third = false;   // one end lies on two top faces, one of them positive-dimensional
    bool any() const { return first || second || third; }
};

Trichotomy trichotomy(const SupportTuple& t, const Point& k0, const Point& k1);

}  // namespace nsolve
