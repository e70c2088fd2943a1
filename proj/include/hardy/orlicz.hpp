#pragma once

#include "hardy/spectral_core.hpp"

namespace hardy {

struct OrliczParams {
    double r;
    double tol = 1e-10;  // relative tolerance of the Luxemburg root
};

/// Phi_r(x) = x ([1 + log(x + 1)]^r - 1) for x >= 0.
double phi_r(double x, double r);

/// (1/M) sum |g_j| log^r(1 + |g_j|): the Zygmund-class functional.
double zygmund_functional(const GridFunction& g, double r);

/// Luxemburg norm of L log^r L: the unique lambda with
/// (1/M) sum Phi_r(|g_j| / lambda) = 1, or 0 for the zero function.
double luxemburg_norm(const GridFunction& g, const OrliczParams& params);

}  // namespace hardy
