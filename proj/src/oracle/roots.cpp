#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "nsolve/oracle.hpp"

namespace nsolve {

namespace {

struct Eval {
    Complex value, derivative;
    double scale;
};

Eval horner(const std::vector<Complex>& c, Complex x) {
    Complex p = 0, dp = 0;
    double s = 0, ax = std::abs(x);
    for (std::size_t i = c.size(); i-- > 0;) {
        dp = dp * x + p;
        p = p * x + c[i];
        s = s * ax + std::abs(c[i]);
    }
    return {p, dp, s};
}

constexpr double residual_gate = 1e-8;

}  // namespace

double relative_residual(const std::vector<Complex>& coeffs, const std::vector<Complex>& rs) {
    double worst = 0;
    for (const auto& r : rs) {
        Eval e = horner(coeffs, r);
        worst = std::max(worst, e.scale > 0 ? std::abs(e.value) / e.scale : 0.0);
    }
    return worst;
}

std::vector<Complex> roots(const std::vector<Complex>& coeffs) {
    if (coeffs.empty() || coeffs.back() == Complex(0)) throw std::invalid_argument("leading coefficient is zero");
    const std::size_t d = coeffs.size() - 1;
    if (d == 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (std::size_t i = 1; i < d; ++i) companion(i, i - 1) = 1;
    for (std::size_t i = 0; i < d; ++i) companion(i, d - 1) = -coeffs[i] / coeffs.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solver failed");
    std::vector<Complex> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        Complex x = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
        for (int it = 0; it < 4; ++it) {
            Eval e = horner(coeffs, x);
            if (e.derivative == Complex(0)) break;
            Complex y = x - e.value / e.derivative;
            if (!(std::abs(horner(coeffs, y).value) < std::abs(e.value))) break;
            x = y;
        }
        out[i] = x;
    }
    if (relative_residual(coeffs, out) >= residual_gate) throw std::runtime_error("root residual above gate");
    return out;
}

}  // namespace nsolve
