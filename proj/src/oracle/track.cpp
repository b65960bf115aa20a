#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "nsolve/monodromy.hpp"
#include "nsolve/oracle.hpp"

namespace nsolve {

namespace {

constexpr double ambiguity_ratio = 2.0;
constexpr double min_step = 2 * std::numbers::pi / 16384.0;

void validate(const UnivariateFamily& f) {
    if (f.exponents.size() < 2) throw std::invalid_argument("family needs at least two monomials");
    if (f.coefficients.size() != f.exponents.size()) throw std::invalid_argument("one coefficient per exponent");
    for (std::size_t i = 0; i + 1 < f.exponents.size(); ++i)
        if (f.exponents[i] >= f.exponents[i + 1]) throw std::invalid_argument("exponents must be sorted and distinct");
    if (f.moving >= f.exponents.size()) throw std::invalid_argument("moving index out of range");
    if (!(f.radius > 0)) throw std::invalid_argument("radius must be positive");
    if (f.samples < 64) throw std::invalid_argument("at least 64 samples");
}

std::vector<Complex> dense(const UnivariateFamily& f, Complex moving_value) {
    std::vector<Complex> c(static_cast<std::size_t>(f.exponents.back() - f.exponents.front()) + 1, 0.0);
    for (std::size_t i = 0; i < f.exponents.size(); ++i)
        c[static_cast<std::size_t>(f.exponents[i] - f.exponents.front())] = i == f.moving ? moving_value : f.coefficients[i];
    return c;
}

Complex on_loop(const UnivariateFamily& f, double theta) { return f.center + f.radius * std::polar(1.0, theta); }

// next[match[i]] continues prev[i]; nullopt when some match is not clear-cut.
std::optional<std::vector<std::size_t>> match(const std::vector<Complex>& prev, const std::vector<Complex>& next) {
    const std::size_t n = prev.size();
    std::vector<std::size_t> out(n);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        double best = INFINITY, second = INFINITY;
        std::size_t arg = 0;
        for (std::size_t j = 0; j < n; ++j) {
            double d = std::abs(prev[i] - next[j]);
            if (d < best) second = best, best = d, arg = j;
            else if (d < second) second = d;
        }
        if (second < ambiguity_ratio * best || used[arg]) return std::nullopt;
        used[arg] = true;
        out[i] = arg;
    }
    return out;
}

}  // namespace

std::vector<Complex> family_roots(const UnivariateFamily& f, double theta) {
    validate(f);
    return roots(dense(f, on_loop(f, theta)));
}

LoopTrack track_loop(const UnivariateFamily& f) {
    validate(f);
    LoopTrack out;
    auto solve = [&](double theta) {
        auto c = dense(f, on_loop(f, theta));
        auto r = roots(c);
        out.max_residual = std::max(out.max_residual, relative_residual(c, r));
        ++out.samples;
        return r;
    };
    out.start = solve(0);
    std::vector<Complex> cur = out.start;

    std::function<void(double, double, const std::vector<Complex>&)> advance = [&](double a, double b, const std::vector<Complex>& next) {
        if (auto m = match(cur, next)) {
            for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = next[(*m)[i]];
            return;
        }
        if (b - a < min_step) throw std::runtime_error("loop too coarse");
        const double mid = (a + b) / 2;
        advance(a, mid, solve(mid));
        advance(mid, b, next);
    };
    const double step = 2 * std::numbers::pi / static_cast<double>(f.samples);
    for (std::size_t k = 0; k < f.samples; ++k) {
        const double b = k + 1 == f.samples ? 2 * std::numbers::pi : step * static_cast<double>(k + 1);
        advance(step * static_cast<double>(k), b, solve(b));
    }

    auto back = match(cur, out.start);
    if (!back) throw std::runtime_error("loop too coarse");
    out.permutation = Permutation(*back);
    return out;
}

PredictionReport compare_prediction(const UnivariateFamily& f, const std::optional<CycleType>& prediction) {
    validate(f);
    PredictionReport out;
    const Int degree = f.exponents.back() - f.exponents.front();
    const bool extreme = f.moving == 0 || f.moving + 1 == f.exponents.size();
    if (prediction) {
        out.source = "given";
        out.predicted = *prediction;
    } else if (f.center == Complex(0) && extreme) {
        // Roots escape to 0 (lowest term) or to infinity (highest term, read in 1/x).
        std::vector<Point> a0;
        for (Int e : f.exponents) a0.push_back({f.moving == 0 ? e - f.exponents.front() : f.exponents.back() - e});
        out.source = "degeneration";
        out.predicted = local_cycle_type({{LatticeSet(1, a0)}});
        out.predicted.add(1, degree - out.predicted.moved_points());
    } else {
        auto rs = roots(dense(f, f.center));
        double closest = INFINITY;
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = i + 1; j < rs.size(); ++j)
                closest = std::min(closest, std::abs(rs[i] - rs[j]) / (1 + std::abs(rs[i])));
        if (!(closest < 1e-6)) throw std::invalid_argument("loop center is neither a degeneration nor a double root");
        std::vector<Point> a;
        for (Int e : f.exponents) a.push_back({e - f.exponents.front()});
        out.source = "discriminant";
        out.predicted = discriminant_cycle_type({LatticeSet(1, a)});
    }
    out.track = track_loop(f);
    out.observed = cycle_type_of(out.track.permutation);
    out.match = out.observed == out.predicted;
    return out;
}

}  // namespace nsolve
