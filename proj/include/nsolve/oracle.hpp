#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "nsolve/permgroup.hpp"

namespace nsolve {

using Complex = std::complex<double>;

/// sum_i coefficients[i] x^exponents[i], where coefficients[moving] runs the
/// circle center + radius e^{i theta}, theta from 0 to 2 pi.
struct UnivariateFamily {
    std::vector<Int> exponents;  // sorted, distinct, at least two
    std::vector<Complex> coefficients;
    std::size_t moving = 0;
    Complex center = 0.0;
    double radius = 1.0;
    std::size_t samples = 256;  // initial samples, at least 64
};

/// Roots of sum coeffs[i] x^i, companion eigenvalues polished by Newton steps.
/// Throws std::invalid_argument on a zero leading coefficient and
/// std::runtime_error if a root fails the residual gate.
std::vector<Complex> roots(const std::vector<Complex>& coeffs);
/// Largest |p(r)| / sum |c_i| |r|^i over the given roots.
double relative_residual(const std::vector<Complex>& coeffs, const std::vector<Complex>& rs);

/// Roots of the family in C^* at angle theta (the x^{exponents[0]} factor removed).
std::vector<Complex> family_roots(const UnivariateFamily& f, double theta);

struct LoopTrack {
    Permutation permutation;  // start root i ends at start root permutation(i)
    std::vector<Complex> start;
    std::size_t samples = 0;  // angles actually solved
    double max_residual = 0;
};

/// Nearest-neighbour continuation around the loop, bisecting steps where the
/// best match is not twice as close as the runner-up. Throws
/// std::runtime_error("loop too coarse") below a step of 2 pi / 2^14.
LoopTrack track_loop(const UnivariateFamily& f);

struct PredictionReport {
    std::string source;  // "degeneration", "discriminant" or "given"
    CycleType predicted;
    CycleType observed;
    bool match = false;
    LoopTrack track;
};

/// Tracks the loop and compares with the exact prediction: a loop around a
/// vanishing extreme coefficient is a degeneration (local cycle type plus
/// fixed points), a loop around a double root is a discriminant loop.
/// An explicit prediction overrides both. Throws std::invalid_argument when
/// the loop is neither and no prediction is given.
PredictionReport compare_prediction(const UnivariateFamily& f, const std::optional<CycleType>& prediction = std::nullopt);

}  // namespace nsolve
