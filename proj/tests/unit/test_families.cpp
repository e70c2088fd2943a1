#include <doctest.h>

#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/families.hpp"
#include "hardy/multipliers.hpp"
#include "test_helpers.hpp"

using namespace hardy;
using hardy::testing::rel_diff;

TEST_CASE("fejer kernel coefficients") {
    const TrigPoly k0 = fejer(0);
    CHECK(k0.coeff(0) == Complex(1, 0));
    CHECK(k0.degree() == 0);

    const TrigPoly k2 = fejer(2);
    CHECK(k2.coeff(-2).real() == doctest::Approx(1.0 / 3.0));
    CHECK(k2.coeff(-1).real() == doctest::Approx(2.0 / 3.0));
    CHECK(k2.coeff(0).real() == doctest::Approx(1.0));
    CHECK(k2.coeff(1).real() == doctest::Approx(2.0 / 3.0));
    CHECK(k2.coeff(2).real() == doctest::Approx(1.0 / 3.0));

    // K_n >= 0 with mean one, so the L1 norm is exactly the mean.
    for (std::int64_t n : {1, 5, 20}) {
        const TrigPoly k = fejer(n);
        const GridFunction g = synthesize(k, default_grid_size(k.degree()));
        for (std::size_t j = 0; j < g.grid_size(); ++j) CHECK(g[j].real() >= -1e-12);
        CHECK(std::abs(lp_norm(g, 1.0) - 1.0) <= 1e-8);
    }
}

TEST_CASE("vallee poussin kernel") {
    const TrigPoly v1 = vallee_poussin(1);
    CHECK(v1.coeff(0).real() == doctest::Approx(1.0));
    CHECK(v1.coeff(1).real() == doctest::Approx(1.0));  // 2(1 - 1/4) - (1 - 1/2)

    // Plateau: exactly one on |j| <= n, zero beyond 2n+1.
    for (std::int64_t n : {1, 4, 9}) {
        const TrigPoly v = vallee_poussin(n);
        for (std::int64_t j = -n; j <= n; ++j) {
            CHECK(std::abs(v.coeff(j) - Complex(1, 0)) < 1e-15);
        }
        CHECK(v.coeff(2 * n + 2) == Complex(0, 0));
        CHECK(v.degree() == 2 * n + 1);
    }

    for (std::int64_t n : {1, 10, 100}) {
        const TrigPoly v = vallee_poussin(n);
        CHECK(lp_norm(synthesize(v, default_grid_size(v.degree())), 1.0) <= 3.0);
    }
}

TEST_CASE("beta family") {
    const TrigPoly b1 = beta(1);
    CHECK(b1.min_freq() >= 0);
    CHECK(b1.max_freq() <= 14);
    CHECK(std::abs(b1.coeff(7) - Complex(1, 0)) < 1e-15);  // center 2*3+1
    CHECK(std::abs(b1.coeff(8) - Complex(1, 0)) < 1e-15);  // 3^2 - 3^0 on the plateau

    for (int n = 1; n <= 5; ++n) {
        const TrigPoly b = beta(n);
        CHECK(b.is_analytic());
        CHECK(negative_energy_ratio(synthesize(b, default_grid_size(b.degree()))) <= 1e-13);
    }

    // The plateau covers every frequency 3^{N+1} - 3^m, m = 0..N, so the
    // lacunary projection keeps at least N+1 unit coefficients.
    for (int n = 1; n <= 6; ++n) {
        const TrigPoly b = beta(n);
        std::int64_t pow3 = 1;
        for (int i = 0; i <= n; ++i) pow3 *= 3;  // 3^{N+1}
        std::int64_t pm = 1;
        for (int m = 0; m <= n; ++m) {
            CHECK(std::abs(b.coeff(pow3 - pm) - Complex(1, 0)) < 1e-15);
            pm *= 3;
        }
        const double l2 = lacunary_projection(b).coeff_l2();
        CHECK(l2 >= std::sqrt(static_cast<double>(n) + 1.0));
    }

    CHECK_THROWS_AS(beta(0), ParameterError);
    CHECK_THROWS_AS(beta(10), ParameterError);
}

TEST_CASE("dirichlet analytic family") {
    CHECK(dirichlet_analytic(0).coeff(0) == Complex(1, 0));
    const TrigPoly d2 = dirichlet_analytic(2);
    CHECK(d2.coeff(0) == Complex(1, 0));
    CHECK(d2.coeff(1) == Complex(1, 0));
    CHECK(d2.coeff(2) == Complex(1, 0));
    CHECK(d2.coeff(3) == Complex(0, 0));

    const TrigPoly d = dirichlet_analytic(100);
    const GridFunction g = synthesize(d, default_grid_size(d.degree()));
    CHECK(rel_diff(lp_norm(g, 2.0), std::sqrt(101.0)) <= 1e-10);
}

TEST_CASE("geometric family") {
    const TrigPoly f = geometric(0.5, 1);
    CHECK(f.coeff(0) == Complex(1, 0));
    CHECK(f.coeff(1) == Complex(0.5, 0));

    const double rho = 0.9;
    const std::int64_t deg = 300;
    const TrigPoly g = geometric(rho, deg);
    const double expected =
        std::sqrt((1.0 - std::pow(rho, 2.0 * (deg + 1))) / (1.0 - rho * rho));
    CHECK(rel_diff(g.coeff_l2(), expected) <= 1e-10);
    CHECK(rel_diff(lp_norm(synthesize(g, default_grid_size(deg)), 2.0), expected) <= 1e-10);

    CHECK_THROWS_AS(geometric(1.0, 10), ParameterError);
    CHECK_THROWS_AS(geometric(0.5, 0), ParameterError);
}

TEST_CASE("random lambda polynomials") {
    const TrigPoly single = random_lambda(1, 100, 42);
    CHECK(single.coeffs().size() == 1);
    CHECK(single.coeff_l2() == doctest::Approx(1.0).epsilon(1e-12));

    const TrigPoly a = random_lambda(8, 729, 7);
    const TrigPoly b = random_lambda(8, 729, 7);
    CHECK(a.coeffs() == b.coeffs());
    CHECK(a.coeff_l2() == doctest::Approx(1.0).epsilon(1e-12));

    const auto lambda = lambda_set(729);
    for (const auto& [n, c] : a.coeffs()) {
        CHECK(std::binary_search(lambda.begin(), lambda.end(), n));
    }

    CHECK_THROWS_AS(random_lambda(1000, 10, 1), ParameterError);
}

TEST_CASE("family spec parsing and dispatch") {
    const FamilySpec spec = parse_family_spec("geometric:rho=0.5,deg=4", 9);
    CHECK(spec.kind == "geometric");
    CHECK(spec.params.at("rho") == doctest::Approx(0.5));
    CHECK(spec.params.at("deg") == doctest::Approx(4));

    const TrigPoly f = make_family(spec);
    CHECK(f.coeff(4) == Complex(0.0625, 0));

    CHECK(make_family(parse_family_spec("beta:N=2", 0)).coeffs() == beta(2).coeffs());
    CHECK_THROWS_AS(make_family(parse_family_spec("nonsense", 0)), ParameterError);
    CHECK_THROWS_AS(parse_family_spec("geometric:rho", 0), ParameterError);
    CHECK_THROWS_AS(make_family(parse_family_spec("geometric", 0)), ParameterError);
}
