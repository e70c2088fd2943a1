#include "hardy/multipliers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "hardy/errors.hpp"
#include "hardy/fft.hpp"

namespace hardy {

TrigPoly apply_multiplier(const TrigPoly& f, const MultiplierSymbol& m) {
    std::vector<std::pair<std::int64_t, Complex>> entries;
    entries.reserve(f.coeffs().size());
    for (const auto& [n, c] : f.coeffs()) entries.emplace_back(n, m.rule(n) * c);
    return TrigPoly::from_entries(entries);
}

GridFunction apply_multiplier(const GridFunction& g, const MultiplierSymbol& m) {
    std::vector<Complex> bins = g.samples();
    detail::fft_radix2(bins, /*inverse=*/false);
    const std::size_t size = g.grid_size();
    const double scale = 1.0 / static_cast<double>(size);
    for (std::size_t j = 0; j < size; ++j) {
        const std::int64_t n = j < size / 2 ? static_cast<std::int64_t>(j)
                                            : static_cast<std::int64_t>(j) -
                                                  static_cast<std::int64_t>(size);
        bins[j] *= scale;
        bins[j] *= (j == size / 2) ? Complex(0.0, 0.0) : m.rule(n);
    }
    detail::fft_radix2(bins, /*inverse=*/true);
    return GridFunction(std::move(bins));
}

namespace {

Complex hilbert_symbol(std::int64_t n) {
    if (n > 0) return Complex(0.0, -1.0);
    if (n < 0) return Complex(0.0, 1.0);
    return Complex(0.0, 0.0);
}

}  // namespace

TrigPoly hilbert(const TrigPoly& f) {
    return apply_multiplier(f, MultiplierSymbol{"hilbert", hilbert_symbol});
}

GridFunction hilbert(const GridFunction& g) {
    return apply_multiplier(g, MultiplierSymbol{"hilbert", hilbert_symbol});
}

TrigPoly riesz_projection(const TrigPoly& f) {
    return apply_multiplier(f, MultiplierSymbol{"riesz", [](std::int64_t n) {
                                                    return n >= 0 ? Complex(1.0, 0.0)
                                                                  : Complex(0.0, 0.0);
                                                }});
}

std::pair<std::int64_t, std::int64_t> dyadic_window(int k) {
    if (k == 0) return {0, 0};
    if (k > 0) {
        const std::int64_t lo = std::int64_t(1) << (k - 1);
        return {lo, (std::int64_t(1) << k) - 1};
    }
    const int kk = -k;
    const std::int64_t hi = std::int64_t(1) << (kk - 1);
    return {-(std::int64_t(1) << kk) + 1, -hi};
}

int dyadic_index(std::int64_t n) {
    if (n == 0) return 0;
    const auto width = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(std::abs(n))));
    return n > 0 ? width : -width;
}

TrigPoly dyadic_block(const TrigPoly& f, int k) {
    const auto [lo, hi] = dyadic_window(k);
    std::vector<std::pair<std::int64_t, Complex>> entries;
    for (const auto& [n, c] : f.coeffs()) {
        if (n >= lo && n <= hi) entries.emplace_back(n, c);
    }
    return TrigPoly::from_entries(entries);
}

GridFunction square_function(const TrigPoly& f, std::size_t grid_size) {
    std::set<int> blocks;
    for (const auto& [n, c] : f.coeffs()) blocks.insert(dyadic_index(n));

    std::vector<double> acc(grid_size, 0.0);
    bool any = false;
    for (int k : blocks) {
        const GridFunction block = synthesize(dyadic_block(f, k), grid_size);
        for (std::size_t j = 0; j < grid_size; ++j) acc[j] += std::norm(block[j]);
        any = true;
    }
    if (!any) {
        // Zero polynomial: still validate the grid size through synthesize.
        (void)synthesize(f, grid_size);
    }
    std::vector<Complex> out(grid_size);
    for (std::size_t j = 0; j < grid_size; ++j) out[j] = Complex(std::sqrt(acc[j]), 0.0);
    return GridFunction(std::move(out));
}

std::vector<std::int64_t> lambda_set(std::int64_t max_freq) {
    if (max_freq < 2) throw ParameterError("lambda_set requires max_freq >= 2");
    std::vector<std::int64_t> powers{1};  // 3^0
    while (powers.back() <= max_freq) powers.push_back(powers.back() * 3);

    std::vector<std::int64_t> out;
    for (std::size_t k = 1; k < powers.size(); ++k) {
        // Smallest member for this k is 3^k - 3^{k-1}; once that overshoots,
        // larger k cannot contribute.
        if (powers[k] - powers[k - 1] > max_freq) break;
        for (std::size_t m = 0; m < k; ++m) {
            const std::int64_t v = powers[k] - powers[m];
            if (v <= max_freq) out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TrigPoly lacunary_projection(const TrigPoly& f) {
    if (f.max_freq() < 2) return TrigPoly{};
    const std::vector<std::int64_t> lambda = lambda_set(f.max_freq());
    std::vector<std::pair<std::int64_t, Complex>> entries;
    for (const auto& [n, c] : f.coeffs()) {
        if (std::binary_search(lambda.begin(), lambda.end(), n)) entries.emplace_back(n, c);
    }
    return TrigPoly::from_entries(entries);
}

}  // namespace hardy
