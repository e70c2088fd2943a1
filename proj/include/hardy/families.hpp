#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hardy/spectral_core.hpp"

namespace hardy {

/// Fejer kernel K_n: coefficients 1 - |j|/(n+1) on |j| <= n.
TrigPoly fejer(std::int64_t n);

/// De la Vallee Poussin kernel V_n = 2 K_{2n+1} - K_n: coefficient 1 on
/// |j| <= n, support [-(2n+1), 2n+1].
TrigPoly vallee_poussin(std::int64_t n);

/// beta_N = e^{i 2 pi (2 3^N + 1) theta} V_{3^N}: an analytic polynomial whose
/// coefficients equal 1 on the plateau |j - (2 3^N + 1)| <= 3^N. Valid for
/// 1 <= N <= 9 (degree 4 3^N + 2 must stay desk-scale).
TrigPoly beta(int n_param);

/// f_hat(n) = 1 for 0 <= n <= m: the analytic Dirichlet-type family.
TrigPoly dirichlet_analytic(std::int64_t m);

/// f_hat(n) = rho^n for 0 <= n <= deg: truncation of 1/(1 - rho e^{i 2 pi theta}).
TrigPoly geometric(double rho, std::int64_t deg);

/// Unit-L2 polynomial with seeded complex Gaussian coefficients on `count`
/// distinct lacunary frequencies <= max_freq.
TrigPoly random_lambda(std::size_t count, std::int64_t max_freq, std::uint64_t seed);

/// Declarative family description, as accepted by the CLI: a kind plus its
/// numeric parameters. Same spec (and seed) always builds the same polynomial.
struct FamilySpec {
    std::string kind;  // fejer | vallee_poussin | beta | dirichlet | geometric | random_lambda
    std::map<std::string, double> params;
    std::uint64_t seed = 0;
};

TrigPoly make_family(const FamilySpec& spec);

/// Parses "kind" or "kind:key=value,key=value".
FamilySpec parse_family_spec(const std::string& text, std::uint64_t seed);

}  // namespace hardy
