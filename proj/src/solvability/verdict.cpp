#include <stdexcept>

#include "nsolve/solvability.hpp"

namespace nsolve {

std::string to_string(SolvabilityVerdict::Outcome o) {
    using O = SolvabilityVerdict::Outcome;
    switch (o) {
        case O::SolvableByRadicals: return "SolvableByRadicals";
        case O::NotSolvableByGeneralizedQuadratures: return "NotSolvableByGeneralizedQuadratures";
        case O::NotSolvableByNMinus1Radicals: return "NotSolvableByNMinus1Radicals";
        case O::ConjecturalNotSolvable: return "ConjecturalNotSolvable";
        case O::Inconsistent: return "Inconsistent";
    }
    return "?";
}

bool is_solvable_outcome(SolvabilityVerdict::Outcome o) { return o == SolvabilityVerdict::Outcome::SolvableByRadicals; }

SupportTuple move_to_front(const SupportTuple& t, std::size_t j) {
    SupportTuple r{t.at(j)};
    for (std::size_t i = 0; i < t.size(); ++i)
        if (i != j) r.push_back(t[i]);
    return r;
}

namespace {

using Outcome = SolvabilityVerdict::Outcome;

void check_square(const SupportTuple& t) {
    if (t.empty()) throw std::invalid_argument("empty tuple");
    const std::size_t n = t.front().dim();
    for (const auto& a : t) {
        if (a.dim() != n) throw std::invalid_argument("supports live in different dimensions");
        if (a.empty()) throw std::invalid_argument("empty support");
    }
    if (t.size() != n) throw std::invalid_argument("need n supports in Z^n");
}

/// Decides a normalized reduced tuple.
void decide_reduced(const SupportTuple& u, SolvabilityVerdict& v) {
    Int mv = mixed_volume(u);
    if (mv <= 4) {
        v.outcome = Outcome::SolvableByRadicals;
        v.reason = "at most 4 solutions (mixed volume " + std::to_string(mv) + ")";
        return;
    }
    for (std::size_t j = 0; j < u.size(); ++j)
        if (auto seg = interior_segment(u[j])) {
            v.outcome = Outcome::NotSolvableByNMinus1Radicals;
            v.radicals = mv;
            v.first_support = j;
            v.segment = seg;
            v.reason = "interior segment in support " + std::to_string(j + 1);
            return;
        }
    for (std::size_t j = 0; j < u.size(); ++j) {
        auto pts = lucky_points(move_to_front(u, j));
        if (pts.empty()) continue;
        v.outcome = Outcome::NotSolvableByGeneralizedQuadratures;
        v.first_support = j;
        v.lucky_point = pts.front();
        v.reason = "lucky point in support " + std::to_string(j + 1);
        return;
    }
    if (u.size() == 2)
        for (std::size_t j = 0; j < 2; ++j) {
            SupportTuple r = move_to_front(u, j);
            for (const auto& a : r[0])
                if (auto b = lucky_subset(r, a)) {
                    v.outcome = Outcome::NotSolvableByGeneralizedQuadratures;
                    v.first_support = j;
                    v.lucky_point = a;
                    v.shrunk_support = *b;
                    v.reason = "lucky point after shrinking the other support";
                    return;
                }
        }
    v.outcome = Outcome::ConjecturalNotSolvable;
    v.reason = "more than 4 solutions, no interior segment or lucky point (rests on the conjecture)";
}

}  // namespace

SolvabilityVerdict verdict(const SupportTuple& t) {
    check_square(t);
    SolvabilityVerdict v;
    v.mixed_volume = mixed_volume(t);
    v.normalization = normalize_irreducible(t);
    if (v.normalization.kind == NormalizationReport::Kind::Inconsistent) {
        v.outcome = Outcome::Inconsistent;
        v.reason = "supports do not generate a full-rank lattice";
        return v;
    }
    const SupportTuple u = v.normalization.tuple;
    if (u.size() > 1 && !is_reduced(u).reduced) {
        NormalizationReport c = reduce_decompose(u);
        if (c.kind == NormalizationReport::Kind::Inconsistent) {
            v.outcome = Outcome::Inconsistent;
            v.reason = "a stage of the reduction is inconsistent";
            return v;
        }
        v.outcome = Outcome::SolvableByRadicals;
        v.reason = "every stage of the reduction is solvable";
        for (std::size_t i = 0; i < c.stages.size(); ++i) {
            SolvabilityVerdict s = verdict(c.stages[i].tuple);
            if (v.outcome == Outcome::SolvableByRadicals && !is_solvable_outcome(s.outcome)) {
                v.outcome = s.outcome;
                v.radicals = s.radicals;
                v.reason = "stage " + std::to_string(i + 1) + ": " + s.reason;
            }
            v.stages.push_back(std::move(s));
        }
        v.normalization = std::move(c);
        return v;
    }
    decide_reduced(u, v);
    return v;
}

SolvabilityVerdict equal_supports_verdict(const LatticeSet& a, std::size_t n) {
    if (a.dim() != n || n == 0) throw std::invalid_argument("support must live in Z^n");
    SupportTuple t(n, a);
    if (n == 1) return verdict(t);
    SolvabilityVerdict v;
    v.mixed_volume = full_volume(a);
    v.normalization = normalize_irreducible(t);
    if (v.normalization.kind == NormalizationReport::Kind::Inconsistent) {
        v.outcome = Outcome::Inconsistent;
        v.reason = "support is not full-dimensional";
        return v;
    }
    const LatticeSet& b = v.normalization.tuple.front();
    Int vol = full_volume(b);
    if (vol <= 4) {
        v.outcome = Outcome::SolvableByRadicals;
        v.reason = "volume " + std::to_string(vol) + " is at most 4";
        return v;
    }
    // Any point is lucky for (A, A \ {a}, ..., A \ {a}), which keeps the mixed volume.
    const Point& p = b[0];
    LatticeSet rest = set_difference(b, LatticeSet(n, {p}));
    if (n <= 3) {
        SupportTuple s{b};
        for (std::size_t j = 1; j < n; ++j) s.push_back(rest);
        if (mixed_volume(s) != vol || !is_lucky(s, p)) throw std::logic_error("point removal did not produce a lucky point");
    }
    v.outcome = Outcome::NotSolvableByGeneralizedQuadratures;
    v.first_support = 0;
    v.lucky_point = p;
    v.shrunk_support = rest;
    v.reason = "volume " + std::to_string(vol) + " exceeds 4; lucky point after removing it from the other supports";
    return v;
}

SolvabilityVerdict homothetic_verdict(const LatticeSet& delta, const std::vector<Int>& degrees) {
    const std::size_t n = delta.dim();
    if (degrees.size() != n) throw std::invalid_argument("need one degree per variable");
    SupportTuple t;
    Int product = full_volume(delta);
    for (Int d : degrees) {
        if (d < 1) throw std::invalid_argument("degrees must be positive");
        std::vector<Point> scaled;
        for (const auto& x : delta) scaled.push_back(scale(x, d));
        t.push_back(lattice_points(LatticeSet(n, std::move(scaled))));
        product = checked_mul(product, d);
    }
    if (!is_irreducible(t)) throw std::invalid_argument("dilated supports are not irreducible");
    SolvabilityVerdict v;
    v.mixed_volume = product;
    v.normalization = normalize_irreducible(t);
    if (product <= 4) {
        v.outcome = Outcome::SolvableByRadicals;
        v.reason = "product of degrees times volume is " + std::to_string(product) + ", at most 4";
    } else {
        v.outcome = Outcome::NotSolvableByGeneralizedQuadratures;
        v.reason = "product of degrees times volume is " + std::to_string(product) + ", above 4";
    }
    return v;
}

}  // namespace nsolve
