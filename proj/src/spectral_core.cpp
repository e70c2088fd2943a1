#include "hardy/spectral_core.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hardy/errors.hpp"
#include "hardy/fft.hpp"

namespace hardy {

namespace {

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

std::size_t freq_to_bin(std::int64_t n, std::size_t m) {
    const auto mm = static_cast<std::int64_t>(m);
    std::int64_t r = n % mm;
    if (r < 0) r += mm;
    return static_cast<std::size_t>(r);
}

}  // namespace

TrigPoly TrigPoly::from_entries(const std::vector<std::pair<std::int64_t, Complex>>& entries) {
    std::map<std::int64_t, Complex> coeffs;
    for (const auto& [n, value] : entries) {
        if (!finite(value)) {
            throw InvalidCoefficient("non-finite coefficient at frequency " + std::to_string(n));
        }
        coeffs[n] += value;
    }
    std::erase_if(coeffs, [](const auto& kv) { return kv.second == Complex(0.0, 0.0); });
    return TrigPoly(std::move(coeffs));
}

Complex TrigPoly::coeff(std::int64_t n) const {
    const auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

std::int64_t TrigPoly::min_freq() const {
    return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

std::int64_t TrigPoly::max_freq() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

std::int64_t TrigPoly::degree() const {
    if (coeffs_.empty()) return 0;
    return std::max(std::abs(min_freq()), std::abs(max_freq()));
}

bool TrigPoly::is_analytic() const {
    return coeffs_.empty() || coeffs_.begin()->first >= 0;
}

double TrigPoly::coeff_l2() const {
    double s = 0.0;
    for (const auto& [n, c] : coeffs_) s += std::norm(c);
    return std::sqrt(s);
}

TrigPoly poly_from_coeffs(const std::vector<std::pair<std::int64_t, Complex>>& entries) {
    return TrigPoly::from_entries(entries);
}

TrigPoly poly_add(const TrigPoly& f, const TrigPoly& g) {
    std::map<std::int64_t, Complex> coeffs = f.coeffs_;
    for (const auto& [n, c] : g.coeffs_) coeffs[n] += c;
    std::erase_if(coeffs, [](const auto& kv) { return kv.second == Complex(0.0, 0.0); });
    return TrigPoly(std::move(coeffs));
}

TrigPoly poly_scale(const TrigPoly& f, Complex c) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw InvalidCoefficient("non-finite scale factor");
    }
    std::map<std::int64_t, Complex> coeffs;
    if (c != Complex(0.0, 0.0)) {
        for (const auto& [n, v] : f.coeffs_) coeffs[n] = v * c;
    }
    return TrigPoly(std::move(coeffs));
}

TrigPoly poly_shift(const TrigPoly& f, std::int64_t shift) {
    std::map<std::int64_t, Complex> coeffs;
    for (const auto& [n, v] : f.coeffs_) coeffs[n + shift] = v;
    return TrigPoly(std::move(coeffs));
}

GridFunction::GridFunction(std::vector<Complex> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 2 || !detail::is_power_of_two(samples_.size())) {
        throw ParameterError("grid size must be a power of two >= 2, got " +
                             std::to_string(samples_.size()));
    }
    for (const Complex& z : samples_) {
        if (!finite(z)) throw InvalidInput("non-finite sample in grid function");
    }
}

std::size_t default_grid_size(std::int64_t degree, std::size_t oversample) {
    if (oversample == 0) throw ParameterError("oversample must be positive");
    const auto target = static_cast<std::size_t>(oversample) *
                        (2 * static_cast<std::size_t>(degree) + 1);
    std::size_t m = 8;
    while (m < target) m <<= 1;
    return m;
}

GridFunction synthesize(const TrigPoly& f, std::size_t grid_size) {
    if (grid_size < 2 || !detail::is_power_of_two(grid_size)) {
        throw ParameterError("grid size must be a power of two >= 2, got " +
                             std::to_string(grid_size));
    }
    if (static_cast<std::int64_t>(grid_size) <= 2 * f.degree()) {
        throw AliasingError("grid size " + std::to_string(grid_size) +
                            " too small for degree " + std::to_string(f.degree()));
    }
    std::vector<Complex> bins(grid_size, Complex(0.0, 0.0));
    for (const auto& [n, c] : f.coeffs()) bins[freq_to_bin(n, grid_size)] = c;
    detail::fft_radix2(bins, /*inverse=*/true);
    return GridFunction(std::move(bins));
}

TrigPoly analyze(const GridFunction& g, BandSpec band) {
    const auto m = static_cast<std::int64_t>(g.grid_size());
    if (band.n_min > band.n_max) {
        throw BandError("empty band: n_min > n_max");
    }
    if (band.n_min <= -m / 2 || band.n_max >= m / 2) {
        throw BandError("band [" + std::to_string(band.n_min) + ", " +
                        std::to_string(band.n_max) + "] exceeds the Nyquist window of grid " +
                        std::to_string(m));
    }
    std::vector<Complex> bins = g.samples();
    detail::fft_radix2(bins, /*inverse=*/false);
    std::vector<std::pair<std::int64_t, Complex>> entries;
    entries.reserve(static_cast<std::size_t>(band.n_max - band.n_min + 1));
    const double scale = 1.0 / static_cast<double>(m);
    for (std::int64_t n = band.n_min; n <= band.n_max; ++n) {
        entries.emplace_back(n, bins[freq_to_bin(n, g.grid_size())] * scale);
    }
    return TrigPoly::from_entries(entries);
}

TrigPoly to_poly(const GridFunction& g) {
    const auto m = static_cast<std::int64_t>(g.grid_size());
    return analyze(g, BandSpec{-m / 2 + 1, m / 2 - 1});
}

double lp_norm(const GridFunction& g, double p) {
    if (!(p >= 1.0)) {
        throw UnsupportedExponent("lp_norm requires p >= 1, got " + std::to_string(p));
    }
    const double peak = max_abs(g);
    if (std::isinf(p) || peak == 0.0) return peak;
    // Factor out the peak so large p stays in range.
    double acc = 0.0;
    const int ip = static_cast<int>(p);
    if (p == static_cast<double>(ip) && ip <= 16) {
        for (const Complex& z : g.samples()) {
            const double base = std::abs(z) / peak;
            double term = base;
            for (int e = 1; e < ip; ++e) term *= base;
            acc += term;
        }
    } else {
        for (const Complex& z : g.samples()) acc += std::pow(std::abs(z) / peak, p);
    }
    acc /= static_cast<double>(g.grid_size());
    return peak * std::pow(acc, 1.0 / p);
}

double negative_energy_ratio(const GridFunction& g) {
    std::vector<Complex> bins = g.samples();
    detail::fft_radix2(bins, /*inverse=*/false);
    const std::size_t m = g.grid_size();
    double total = 0.0;
    double negative = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const double e = std::norm(bins[j]);
        total += e;
        if (j >= m / 2) negative += e;  // bins m/2..m-1 hold frequencies -m/2..-1
    }
    if (total == 0.0) throw ZeroFunction("negative_energy_ratio of the zero function");
    return std::sqrt(negative / total);
}

namespace {

void check_same_grid(const GridFunction& g, const GridFunction& h) {
    if (g.grid_size() != h.grid_size()) {
        throw GridMismatch("grid sizes " + std::to_string(g.grid_size()) + " and " +
                           std::to_string(h.grid_size()) + " differ");
    }
}

}  // namespace

GridFunction grid_add(const GridFunction& g, const GridFunction& h) {
    check_same_grid(g, h);
    std::vector<Complex> out(g.grid_size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = g[j] + h[j];
    return GridFunction(std::move(out));
}

GridFunction grid_sub(const GridFunction& g, const GridFunction& h) {
    check_same_grid(g, h);
    std::vector<Complex> out(g.grid_size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = g[j] - h[j];
    return GridFunction(std::move(out));
}

GridFunction grid_mul(const GridFunction& g, const GridFunction& h) {
    check_same_grid(g, h);
    std::vector<Complex> out(g.grid_size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = g[j] * h[j];
    return GridFunction(std::move(out));
}

GridFunction grid_abs(const GridFunction& g) {
    std::vector<Complex> out(g.grid_size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = Complex(std::abs(g[j]), 0.0);
    return GridFunction(std::move(out));
}

GridFunction grid_scale(const GridFunction& g, Complex c) {
    std::vector<Complex> out(g.grid_size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = g[j] * c;
    return GridFunction(std::move(out));
}

double max_abs(const GridFunction& g) {
    double peak = 0.0;
    for (const Complex& z : g.samples()) peak = std::max(peak, std::abs(z));
    return peak;
}

TrigPoly load_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open coefficient file: " + path);
    std::vector<std::pair<std::int64_t, Complex>> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        std::int64_t n = 0;
        double re = 0.0;
        double im = 0.0;
        if (!(fields >> n >> re >> im)) {
            throw InvalidCoefficient(path + ":" + std::to_string(lineno) +
                                     ": expected `n,re,im`");
        }
        std::string rest;
        if (fields >> rest) {
            throw InvalidCoefficient(path + ":" + std::to_string(lineno) +
                                     ": trailing data after `n,re,im`");
        }
        entries.emplace_back(n, Complex(re, im));
    }
    return TrigPoly::from_entries(entries);
}

}  // namespace hardy
