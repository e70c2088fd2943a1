#include "hardy/families.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hardy/errors.hpp"
#include "hardy/multipliers.hpp"
#include "hardy/rng.hpp"

namespace hardy {

TrigPoly fejer(std::int64_t n) {
    if (n < 0) throw ParameterError("fejer requires n >= 0");
    std::vector<std::pair<std::int64_t, Complex>> entries;
    entries.reserve(static_cast<std::size_t>(2 * n + 1));
    for (std::int64_t j = -n; j <= n; ++j) {
        const double w = 1.0 - static_cast<double>(std::abs(j)) / static_cast<double>(n + 1);
        entries.emplace_back(j, Complex(w, 0.0));
    }
    return TrigPoly::from_entries(entries);
}

TrigPoly vallee_poussin(std::int64_t n) {
    if (n < 1) throw ParameterError("vallee_poussin requires n >= 1");
    return poly_add(poly_scale(fejer(2 * n + 1), Complex(2.0, 0.0)),
                    poly_scale(fejer(n), Complex(-1.0, 0.0)));
}

TrigPoly beta(int n_param) {
    if (n_param < 1 || n_param > 9) {
        throw ParameterError("beta requires 1 <= N <= 9, got " + std::to_string(n_param));
    }
    std::int64_t pow3 = 1;
    for (int i = 0; i < n_param; ++i) pow3 *= 3;
    return poly_shift(vallee_poussin(pow3), 2 * pow3 + 1);
}

TrigPoly dirichlet_analytic(std::int64_t m) {
    if (m < 0) throw ParameterError("dirichlet_analytic requires M >= 0");
    std::vector<std::pair<std::int64_t, Complex>> entries;
    entries.reserve(static_cast<std::size_t>(m + 1));
    for (std::int64_t n = 0; n <= m; ++n) entries.emplace_back(n, Complex(1.0, 0.0));
    return TrigPoly::from_entries(entries);
}

TrigPoly geometric(double rho, std::int64_t deg) {
    if (!(rho > 0.0 && rho < 1.0)) throw ParameterError("geometric requires rho in (0,1)");
    if (deg < 1) throw ParameterError("geometric requires deg >= 1");
    std::vector<std::pair<std::int64_t, Complex>> entries;
    entries.reserve(static_cast<std::size_t>(deg + 1));
    double amp = 1.0;
    for (std::int64_t n = 0; n <= deg; ++n) {
        entries.emplace_back(n, Complex(amp, 0.0));
        amp *= rho;
    }
    return TrigPoly::from_entries(entries);
}

TrigPoly random_lambda(std::size_t count, std::int64_t max_freq, std::uint64_t seed) {
    std::vector<std::int64_t> lambda = lambda_set(max_freq);
    if (count == 0 || count > lambda.size()) {
        throw ParameterError("random_lambda count must lie in [1, " +
                             std::to_string(lambda.size()) + "]");
    }
    GaussianSource rng(seed);
    // Partial Fisher-Yates: the first `count` slots become the chosen support.
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + rng.index(lambda.size() - i);
        std::swap(lambda[i], lambda[j]);
    }
    std::vector<std::pair<std::int64_t, Complex>> entries;
    entries.reserve(count);
    double energy = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
        const Complex c(rng.normal(), rng.normal());
        energy += std::norm(c);
        entries.emplace_back(lambda[i], c);
    }
    TrigPoly raw = TrigPoly::from_entries(entries);
    return poly_scale(raw, Complex(1.0 / std::sqrt(energy), 0.0));
}

namespace {

double param_or(const FamilySpec& spec, const std::string& key, double fallback) {
    const auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
}

double require_param(const FamilySpec& spec, const std::string& key) {
    const auto it = spec.params.find(key);
    if (it == spec.params.end()) {
        throw ParameterError("family '" + spec.kind + "' needs parameter '" + key + "'");
    }
    return it->second;
}

}  // namespace

TrigPoly make_family(const FamilySpec& spec) {
    if (spec.kind == "fejer") {
        return fejer(static_cast<std::int64_t>(require_param(spec, "n")));
    }
    if (spec.kind == "vallee_poussin") {
        return vallee_poussin(static_cast<std::int64_t>(require_param(spec, "n")));
    }
    if (spec.kind == "beta") {
        return beta(static_cast<int>(require_param(spec, "N")));
    }
    if (spec.kind == "dirichlet" || spec.kind == "dirichlet_analytic") {
        return dirichlet_analytic(static_cast<std::int64_t>(require_param(spec, "M")));
    }
    if (spec.kind == "geometric") {
        return geometric(require_param(spec, "rho"),
                         static_cast<std::int64_t>(param_or(spec, "deg", 512)));
    }
    if (spec.kind == "random_lambda") {
        return random_lambda(static_cast<std::size_t>(require_param(spec, "count")),
                             static_cast<std::int64_t>(require_param(spec, "max_freq")),
                             spec.seed);
    }
    throw ParameterError("unknown family kind '" + spec.kind + "'");
}

FamilySpec parse_family_spec(const std::string& text, std::uint64_t seed) {
    FamilySpec spec;
    spec.seed = seed;
    const auto colon = text.find(':');
    spec.kind = text.substr(0, colon);
    if (spec.kind.empty()) throw ParameterError("empty family kind");
    if (colon == std::string::npos) return spec;

    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        const std::string item = rest.substr(pos, comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ParameterError("bad family parameter '" + item + "' (want key=value)");
        }
        try {
            spec.params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParameterError("bad numeric value in family parameter '" + item + "'");
        }
        pos = comma + 1;
    }
    return spec;
}

}  // namespace hardy
