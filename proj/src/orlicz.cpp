#include "hardy/orlicz.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "hardy/errors.hpp"

namespace hardy {

double phi_r(double x, double r) {
    if (!(x >= 0.0)) throw DomainError("phi_r requires x >= 0, got " + std::to_string(x));
    if (!(r > 0.0)) throw ParameterError("phi_r requires r > 0, got " + std::to_string(r));
    if (x == 0.0) return 0.0;
    return x * (std::pow(1.0 + std::log1p(x), r) - 1.0);
}

double zygmund_functional(const GridFunction& g, double r) {
    if (!(r > 0.0)) throw ParameterError("zygmund_functional requires r > 0");
    double acc = 0.0;
    for (const Complex& z : g.samples()) {
        const double a = std::abs(z);
        acc += a * std::pow(std::log1p(a), r);
    }
    return acc / static_cast<double>(g.grid_size());
}

namespace {

void validate(const OrliczParams& params) {
    if (!(params.r > 0.0)) throw ParameterError("Orlicz exponent r must be positive");
    if (!(params.tol > 0.0 && params.tol < 1e-2)) {
        throw ParameterError("Luxemburg tolerance must lie in (0, 1e-2)");
    }
}

double mean_phi(const std::vector<double>& magnitudes, double lambda, double r) {
    double acc = 0.0;
    for (double a : magnitudes) {
        const double x = a / lambda;
        if (x > 0.0) acc += x * (std::pow(1.0 + std::log1p(x), r) - 1.0);
    }
    return acc / static_cast<double>(magnitudes.size());
}

}  // namespace

double luxemburg_norm(const GridFunction& g, const OrliczParams& params) {
    validate(params);

    std::vector<double> magnitudes(g.grid_size());
    double peak = 0.0;
    for (std::size_t j = 0; j < g.grid_size(); ++j) {
        magnitudes[j] = std::abs(g[j]);
        peak = std::max(peak, magnitudes[j]);
    }
    if (peak == 0.0) return 0.0;

    // The map lambda -> mean Phi_r(|g|/lambda) is strictly decreasing for a
    // nonzero g, so one root exists. Bracket it, widening geometrically if the
    // initial interval does not straddle 1, then bisect.
    double lo = 1e-12 * peak;
    double hi = peak + 1.0;
    int guard = 0;
    while (mean_phi(magnitudes, lo, params.r) < 1.0) {
        lo *= 0.125;
        if (++guard > 400) throw NumericalConsistencyError("Luxemburg bracket failed to close below");
    }
    guard = 0;
    while (mean_phi(magnitudes, hi, params.r) > 1.0) {
        hi *= 8.0;
        if (++guard > 400) throw NumericalConsistencyError("Luxemburg bracket failed to close above");
    }

    while (hi - lo > params.tol * lo) {
        const double mid = 0.5 * (lo + hi);
        if (mean_phi(magnitudes, mid, params.r) > 1.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace hardy
