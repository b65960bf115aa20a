#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsolve/tuples.hpp"

namespace nsolve {

struct SolvabilityVerdict {
    enum class Outcome {
        SolvableByRadicals,
        NotSolvableByGeneralizedQuadratures,
        NotSolvableByNMinus1Radicals,
        ConjecturalNotSolvable,
        Inconsistent
    };
    Outcome outcome = Outcome::Inconsistent;
    Int mixed_volume = 0;  // of the input tuple
    Int radicals = 0;      // N for NotSolvableByNMinus1Radicals
    std::string reason;    // which criterion decided

    NormalizationReport normalization;
    std::vector<SolvabilityVerdict> stages;  // verdicts of the reduction cascade

    // Witnesses, in the coordinates of the normalized (or stage) tuple.
    std::optional<std::size_t> first_support;  // support moved to the front
    std::optional<std::pair<Point, Point>> segment;
    std::optional<Point> lucky_point;
    std::optional<LatticeSet> shrunk_support;  // replacement for the second support when a subset was needed
};

std::string to_string(SolvabilityVerdict::Outcome o);
bool is_solvable_outcome(SolvabilityVerdict::Outcome o);

SolvabilityVerdict verdict(const SupportTuple& t);

/// The system with all n supports equal to a.
SolvabilityVerdict equal_supports_verdict(const LatticeSet& a, std::size_t n);

/// Supports A_i = Z^n ∩ d_i * conv(delta).
SolvabilityVerdict homothetic_verdict(const LatticeSet& delta, const std::vector<Int>& degrees);

/// The tuple with support j moved to the front.
SupportTuple move_to_front(const SupportTuple& t, std::size_t j);

}  // namespace nsolve
