#include "twinasset/errors.hpp"
#include "twinasset/experiment_harness.hpp"
#include "twinasset/pricing.hpp"
#include "twinasset/twin_core.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace twinasset;

TEST_CASE("normal cdf") {
    CHECK(normal_cdf(0.0) == 0.5);
    CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-14));
    CHECK(normal_cdf(-40.0) >= 0.0);
    CHECK(normal_cdf(40.0) == 1.0);
}

TEST_CASE("Black-Scholes call reference value") {
    // 40-digit evaluation of the closed form
    CHECK(bs_call(90.0, OptionSpec{90.0, 0.25, 0.05}, 0.4) == doctest::Approx(7.697346193411988).epsilon(1e-13));
}

TEST_CASE("Black-Scholes limits") {
    CHECK(bs_call(90.0, OptionSpec{1e-12, 0.25, 0.05}, 0.4) == doctest::Approx(90.0).epsilon(1e-12));
    const OptionSpec spec{80.0, 0.5, 0.03};
    const double forward_payoff = 90.0 - 80.0 * std::exp(-0.03 * 0.5);
    CHECK(bs_call(90.0, spec, 1e-9) == doctest::Approx(forward_payoff).epsilon(1e-12));
}

TEST_CASE("Black-Scholes bounds, monotonicity and delta") {
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> spot(20.0, 200.0), strike(20.0, 200.0), tau(0.02, 3.0), rate(-0.02, 0.1),
        vol(0.05, 0.9);
    for (int k = 0; k < 300; ++k) {
        const double s = spot(gen);
        const OptionSpec spec{strike(gen), tau(gen), rate(gen)};
        const double sigma = vol(gen);
        const double c = bs_call(s, spec, sigma);
        const double discounted = spec.strike * std::exp(-spec.rate * spec.maturity);
        CHECK(c >= std::max(s - discounted, 0.0));
        CHECK(c <= s);
        const double d1 = (std::log(s / spec.strike) + (spec.rate + 0.5 * sigma * sigma) * spec.maturity) /
                          (sigma * std::sqrt(spec.maturity));
        CHECK(bs_call(s * 1.01, spec, sigma) >= c);
        CHECK(bs_call(s, spec, sigma * 1.01) >= c);
        // strict once the price actually moves at double precision
        if (std::abs(d1) < 5.0) {
            CHECK(bs_call(s * 1.01, spec, sigma) > c);
            CHECK(bs_call(s, spec, sigma * 1.01) > c);
        }

        const double h = 1e-5 * s;
        const double fd = (bs_call(s + h, spec, sigma) - bs_call(s - h, spec, sigma)) / (2.0 * h);
        const double delta = normal_cdf(d1);
        if (delta > 1e-3) {
            CHECK(fd == doctest::Approx(delta).epsilon(1e-6));
        }
    }
}

TEST_CASE("Black-Scholes rejects invalid inputs") {
    const OptionSpec spec{90.0, 0.25, 0.05};
    CHECK_THROWS_AS(bs_call(0.0, spec, 0.2), InvalidArgument);
    CHECK_THROWS_AS(bs_call(90.0, spec, 0.0), InvalidArgument);
    CHECK_THROWS_AS(bs_call(90.0, OptionSpec{-1.0, 0.25, 0.05}, 0.2), InvalidArgument);
    CHECK_THROWS_AS(bs_call(90.0, OptionSpec{90.0, 0.0, 0.05}, 0.2), InvalidArgument);
}

TEST_CASE("identical twins price like Black-Scholes") {
    std::mt19937_64 gen(9);
    std::uniform_real_distribution<double> mu(0.05, 0.9), vol(0.05, 0.8), spot(10.0, 150.0), k_ratio(0.6, 1.5),
        tau(0.05, 2.0), rate(0.0, 0.08), rho(-1.0, 1.0);
    std::normal_distribution<double> z;
    for (int k = 0; k < 100; ++k) {
        const AssetParams asset{mu(gen), vol(gen), spot(gen)};
        const OptionSpec spec{asset.spot * k_ratio(gen), tau(gen), rate(gen)};
        // rho = 1 keeps B at 1 for any draw
        const TwinPair pair{asset, asset, 1.0};
        const NoiseDraw d{z(gen), z(gen), z(gen), z(gen)};
        const TwinPriceResult twin = twin_call(pair, spec, d);
        const double reference = bs_call(asset.spot, spec, asset.sigma);
        CHECK(std::abs(twin.price - reference) / reference < 1e-12);
        CHECK(twin.k_i == doctest::Approx(spec.strike).epsilon(1e-14));
    }
}

TEST_CASE("twin call at the reference parameters") {
    const TwinPair pair = reference_pair();
    const OptionSpec spec = reference_option();
    const TwinPriceResult r = twin_call(pair, spec, NoiseDraw{});
    // adaptive quadrature of the risk-neutral expectation at 40 digits
    CHECK(r.price == doctest::Approx(8.350349700908367).epsilon(1e-12));
    CHECK(r.price > 0.0);
    CHECK(r.g1 - r.g2 == doctest::Approx(alpha(pair) * pair.asset_j.sigma * std::sqrt(spec.maturity)).epsilon(1e-14));
    CHECK(r.k_i > 0.0);
    CHECK_FALSE(r.clipped);

    TwinPair mixed = pair;
    mixed.rho = 0.5;
    mixed.asset_j.mu = alpha_to_mu_j(1.25, 0.4, 0.2, 0.4);
    const TwinPriceResult m = twin_call(mixed, spec, NoiseDraw{0.0, 0.0, 0.3, -0.7});
    CHECK(m.price == doctest::Approx(24.122960716955735).epsilon(1e-12));
}

TEST_CASE("closed form and quadrature agree") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> mu(0.05, 0.8), vol(0.1, 0.6), spot(30.0, 150.0), k_ratio(0.7, 1.3),
        tau(0.05, 1.5), rate(0.0, 0.08), rho(-1.0, 1.0);
    std::normal_distribution<double> z;
    for (int k = 0; k < 200; ++k) {
        const TwinPair pair{AssetParams{mu(gen), vol(gen), spot(gen)}, AssetParams{mu(gen), vol(gen), spot(gen)},
                            rho(gen)};
        const OptionSpec spec{pair.asset_j.spot * k_ratio(gen), tau(gen), rate(gen)};
        const NoiseDraw d{z(gen), z(gen), z(gen), z(gen)};
        const TwinPriceResult closed = twin_call(pair, spec, d);
        const double quad = twin_call_quadrature(pair, spec, d);
        CHECK(std::abs(quad - closed.price) / closed.price <= 1e-6);
        CHECK(closed.g1 - closed.g2 ==
              doctest::Approx(alpha(pair) * pair.asset_j.sigma * std::sqrt(spec.maturity)).epsilon(1e-12));
    }
}

TEST_CASE("twin call strike limits") {
    TwinPair pair = reference_pair();
    pair.rho = 0.7;
    pair.asset_j.mu = alpha_to_mu_j(1.1, 0.4, 0.2, 0.4);
    const NoiseDraw d{0.0, 0.0, 0.5, -0.2};

    const OptionSpec deep_itm{1e-9, 0.25, 0.05};
    const TwinTerms terms = twin_terms(pair, deep_itm.maturity, d);
    const double a = alpha(pair);
    const double forward = terms.a_term * terms.b_term * std::pow(pair.asset_i.spot, terms.exponent) *
                           std::exp((terms.exponent - 1.0) * (0.05 + 0.5 * a * 0.4 * 0.2) * 0.25);
    CHECK(twin_call(pair, deep_itm, d).price == doctest::Approx(forward).epsilon(1e-9));
    CHECK(twin_call_quadrature(pair, deep_itm, d) == doctest::Approx(forward).epsilon(1e-9));

    const OptionSpec far_otm{1e6, 0.25, 0.05};
    CHECK(twin_call(pair, far_otm, d).price < 1e-12);
    CHECK(twin_call_quadrature(pair, far_otm, d) < 1e-12);
}

TEST_CASE("twin call needs a positive alpha") {
    TwinPair pair = reference_pair();
    pair.asset_j.mu = -0.3;
    CHECK_THROWS_AS(twin_call(pair, reference_option(), NoiseDraw{}), UnsupportedSimilarity);
    CHECK_THROWS_AS(twin_call_quadrature(pair, reference_option(), NoiseDraw{}), UnsupportedSimilarity);
    pair.asset_j.mu = 0.0;
    CHECK_THROWS_AS(twin_call(pair, reference_option(), NoiseDraw{}), UnsupportedSimilarity);
    pair = reference_pair();
    pair.asset_i.mu = 0.0;
    CHECK_THROWS_AS(twin_call(pair, reference_option(), NoiseDraw{}), UndefinedAlpha);
}
