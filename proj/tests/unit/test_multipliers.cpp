#include <doctest.h>

#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/multipliers.hpp"
#include "test_helpers.hpp"

using namespace hardy;
using hardy::testing::random_poly;
using hardy::testing::rel_diff;

namespace {

TrigPoly basis(std::int64_t n) {
    return poly_from_coeffs({{n, Complex(1.0, 0.0)}});
}

}  // namespace

TEST_CASE("apply_multiplier basics") {
    const TrigPoly f = poly_from_coeffs({{1, Complex(1, 0)}, {2, Complex(1, 0)}});

    const MultiplierSymbol identity{"id", [](std::int64_t) { return Complex(1, 0); }};
    const TrigPoly same = apply_multiplier(f, identity);
    CHECK(same.coeff(1) == f.coeff(1));
    CHECK(same.coeff(2) == f.coeff(2));

    const MultiplierSymbol zero{"zero", [](std::int64_t) { return Complex(0, 0); }};
    CHECK(apply_multiplier(f, zero).is_zero());

    const MultiplierSymbol only_two{"chi_{2}", [](std::int64_t n) {
                                        return n == 2 ? Complex(1, 0) : Complex(0, 0);
                                    }};
    const TrigPoly projected = apply_multiplier(f, only_two);
    CHECK(projected.coeff(2) == Complex(1.0, 0.0));
    CHECK(projected.coeff(1) == Complex(0.0, 0.0));
}

TEST_CASE("hilbert transform") {
    // Constants are annihilated.
    CHECK(hilbert(poly_scale(basis(0), Complex(5, 0))).is_zero());

    // H(cos) = sin, so cos + i H(cos) = e_1.
    const TrigPoly cosine =
        poly_from_coeffs({{1, Complex(0.5, 0)}, {-1, Complex(0.5, 0)}});
    const TrigPoly h = hilbert(cosine);
    CHECK(std::abs(h.coeff(1) - Complex(0.0, -0.5)) < 1e-15);
    CHECK(std::abs(h.coeff(-1) - Complex(0.0, 0.5)) < 1e-15);
    const TrigPoly analytic = poly_add(cosine, poly_scale(h, Complex(0, 1)));
    CHECK(std::abs(analytic.coeff(1) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(analytic.coeff(-1)) < 1e-15);

    CHECK(std::abs(hilbert(basis(7)).coeff(7) - Complex(0.0, -1.0)) < 1e-15);

    // H(H(f)) = -f on mean-zero input.
    const TrigPoly f = random_poly(1, 40, 3);
    const TrigPoly msum = poly_add(f, random_poly(-40, -1, 4));
    const TrigPoly twice = hilbert(hilbert(msum));
    for (const auto& [n, c] : msum.coeffs()) {
        CHECK(std::abs(twice.coeff(n) + c) <= 1e-12 * std::abs(c));
    }
}

TEST_CASE("analyticity generation from real band-limited input") {
    // a real-valued: coefficients Hermitian.
    std::vector<std::pair<std::int64_t, Complex>> entries{{0, Complex(2.0, 0.0)}};
    GaussianSource rng(11);
    for (std::int64_t n = 1; n <= 20; ++n) {
        const Complex c(rng.normal(), rng.normal());
        entries.emplace_back(n, c);
        entries.emplace_back(-n, std::conj(c));
    }
    const TrigPoly a = poly_from_coeffs(entries);
    const GridFunction samples = synthesize(a, 256);
    const GridFunction h = hilbert(samples);
    std::vector<Complex> combined(samples.grid_size());
    for (std::size_t j = 0; j < combined.size(); ++j) {
        combined[j] = samples[j] + Complex(0, 1) * h[j];
    }
    CHECK(negative_energy_ratio(GridFunction(std::move(combined))) <= 1e-10);
}

TEST_CASE("riesz projection") {
    const TrigPoly f = random_poly(0, 50, 5);
    const TrigPoly pf = riesz_projection(f);
    for (const auto& [n, c] : f.coeffs()) CHECK(pf.coeff(n) == c);

    CHECK(riesz_projection(basis(-1)).is_zero());

    const TrigPoly mixed = poly_from_coeffs(
        {{-1, Complex(1, 0)}, {0, Complex(2, 0)}, {2, Complex(3, 0)}});
    const TrigPoly projected = riesz_projection(mixed);
    CHECK(projected.coeff(-1) == Complex(0, 0));
    CHECK(projected.coeff(0) == Complex(2, 0));
    CHECK(projected.coeff(2) == Complex(3, 0));

    // Idempotence is exact.
    const TrigPoly g = random_poly(-64, 64, 6);
    const TrigPoly once = riesz_projection(g);
    const TrigPoly twice = riesz_projection(once);
    CHECK(once.coeffs() == twice.coeffs());
}

TEST_CASE("dyadic blocks") {
    const TrigPoly f = poly_from_coeffs(
        {{0, Complex(1, 0)}, {1, Complex(1, 0)}, {2, Complex(1, 0)}, {3, Complex(1, 0)}});
    const TrigPoly block2 = dyadic_block(f, 2);
    CHECK(block2.coeff(2) == Complex(1, 0));
    CHECK(block2.coeff(3) == Complex(1, 0));
    CHECK(block2.coeff(0) == Complex(0, 0));
    CHECK(block2.coeff(1) == Complex(0, 0));

    CHECK(dyadic_block(basis(-2), -2).coeff(-2) == Complex(1, 0));
    CHECK(dyadic_block(basis(5), 1).is_zero());

    // Every frequency lies in exactly one window.
    for (std::int64_t n = -1030; n <= 1030; ++n) {
        int hits = 0;
        for (int k = -12; k <= 12; ++k) {
            const auto [lo, hi] = dyadic_window(k);
            if (n >= lo && n <= hi) ++hits;
        }
        if (std::abs(n) <= 1024) {
            CHECK(hits == 1);
            const auto [lo, hi] = dyadic_window(dyadic_index(n));
            CHECK(n >= lo);
            CHECK(n <= hi);
        }
    }

    // Blocks reassemble the polynomial coefficientwise.
    const TrigPoly g = random_poly(-100, 100, 8);
    TrigPoly sum;
    for (int k = -8; k <= 8; ++k) sum = poly_add(sum, dyadic_block(g, k));
    CHECK(sum.coeffs() == g.coeffs());
}

TEST_CASE("square function") {
    const GridFunction s1 = square_function(basis(1), 16);
    for (std::size_t j = 0; j < s1.grid_size(); ++j) {
        CHECK(s1[j].real() == doctest::Approx(1.0));
    }

    const TrigPoly two = poly_from_coeffs({{0, Complex(1, 0)}, {1, Complex(1, 0)}});
    const GridFunction s2 = square_function(two, 16);
    for (std::size_t j = 0; j < s2.grid_size(); ++j) {
        CHECK(s2[j].real() == doctest::Approx(std::sqrt(2.0)));
    }

    // L2 isometry against the coefficient (Parseval) oracle.
    for (std::uint64_t seed = 50; seed < 56; ++seed) {
        const TrigPoly f = random_poly(-100, 100, seed);
        const std::size_t m = default_grid_size(f.degree());
        CHECK(rel_diff(lp_norm(square_function(f, m), 2.0), f.coeff_l2()) <= 1e-10);
    }
}

TEST_CASE("square function L2 isometry at degree 512") {
    const TrigPoly f = random_poly(-512, 512, 77);
    const std::size_t m = default_grid_size(f.degree());
    CHECK(rel_diff(lp_norm(square_function(f, m), 2.0), f.coeff_l2()) <= 1e-10);
}

TEST_CASE("lambda set") {
    CHECK(lambda_set(10) == std::vector<std::int64_t>{2, 6, 8});
    CHECK(lambda_set(30) == std::vector<std::int64_t>{2, 6, 8, 18, 24, 26});
    CHECK(lambda_set(2) == std::vector<std::int64_t>{2});
    CHECK_THROWS_AS(lambda_set(1), ParameterError);

    // Members below 3^k number at most k(k-1)/2.
    CHECK(lambda_set(19683).size() == 45);
}

TEST_CASE("lacunary projection") {
    const TrigPoly f = poly_from_coeffs({{2, Complex(1, 0)}, {3, Complex(1, 0)}});
    const TrigPoly proj = lacunary_projection(f);
    CHECK(proj.coeff(2) == Complex(1, 0));
    CHECK(proj.coeff(3) == Complex(0, 0));

    // Flat coefficients on [0, 30] keep exactly the lambda frequencies.
    std::vector<std::pair<std::int64_t, Complex>> entries;
    for (std::int64_t n = 0; n <= 30; ++n) entries.emplace_back(n, Complex(1, 0));
    const TrigPoly flat_proj = lacunary_projection(poly_from_coeffs(entries));
    std::vector<std::int64_t> support;
    for (const auto& [n, c] : flat_proj.coeffs()) support.push_back(n);
    CHECK(support == std::vector<std::int64_t>{2, 6, 8, 18, 24, 26});

    CHECK(lacunary_projection(random_poly(-40, -1, 9)).is_zero());

    // Idempotence is exact.
    const TrigPoly g = random_poly(0, 200, 10);
    const TrigPoly once = lacunary_projection(g);
    CHECK(lacunary_projection(once).coeffs() == once.coeffs());
}
