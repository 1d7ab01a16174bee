#include "twinasset/pricing.hpp"

#include "twinasset/errors.hpp"
#include "twinasset/twin_core.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace twinasset {

void OptionSpec::validate() const {
    if (!(strike > 0.0) || !std::isfinite(strike)) {
        throw InvalidArgument("strike must be positive and finite");
    }
    if (!(maturity > 0.0) || !std::isfinite(maturity)) {
        throw InvalidArgument("maturity must be positive and finite");
    }
    if (!std::isfinite(rate)) {
        throw InvalidArgument("rate must be finite");
    }
}

double normal_cdf(double x) noexcept {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double bs_call(double spot, const OptionSpec& spec, double sigma) {
    spec.validate();
    if (!(spot > 0.0) || !std::isfinite(spot)) {
        throw InvalidArgument("spot must be positive and finite");
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw InvalidArgument("sigma must be positive and finite");
    }
    const double tau = spec.maturity;
    const double vol_root_tau = sigma * std::sqrt(tau);
    const double d1 = (std::log(spot / spec.strike) + (spec.rate + 0.5 * sigma * sigma) * tau) / vol_root_tau;
    const double d2 = d1 - vol_root_tau;
    return spot * normal_cdf(d1) - spec.strike * std::exp(-spec.rate * tau) * normal_cdf(d2);
}

namespace {

// Quantities shared by the closed form and the quadrature oracle.
struct TwinSetup {
    double alpha;
    double exponent;
    double ab;     // A * B
    double k_i;    // K_j / (A B)
    double g2;
    double sigma_i;
    double root_tau;
};

TwinSetup prepare(const TwinPair& pair, const OptionSpec& spec, const NoiseDraw& draw) {
    pair.validate();
    spec.validate();
    const double a = alpha(pair);
    if (!(a > 0.0)) {
        std::ostringstream msg;
        msg << "twin pricing requires alpha > 0, got " << a;
        throw UnsupportedSimilarity(msg.str());
    }
    const double tau = spec.maturity;
    const TwinTerms terms = twin_terms(pair, tau, draw);
    const double ab = terms.a_term * terms.b_term;
    const double k_i = spec.strike / ab;
    const double sigma_i = pair.asset_i.sigma;
    const double root_tau = std::sqrt(tau);
    // ln(S_i / K_i^(1/e)) written as a difference of logs
    const double moneyness = std::log(pair.asset_i.spot) - std::log(k_i) / terms.exponent;
    const double g2 = (moneyness + (spec.rate - 0.5 * sigma_i * sigma_i) * tau) / (sigma_i * root_tau);
    return TwinSetup{a, terms.exponent, ab, k_i, g2, sigma_i, root_tau};
}

}  // namespace

TwinPriceResult twin_call(const TwinPair& pair, const OptionSpec& spec, const NoiseDraw& draw) {
    const TwinSetup s = prepare(pair, spec, draw);
    const double tau = spec.maturity;
    const double sigma_j = pair.asset_j.sigma;

    TwinPriceResult out;
    out.g2 = s.g2;
    out.g1 = s.g2 + s.alpha * sigma_j * s.root_tau;
    out.k_i = s.k_i;

    const double growth = (s.exponent - 1.0) * (spec.rate + 0.5 * s.alpha * sigma_j * s.sigma_i) * tau;
    const double forward_leg = s.ab * std::exp(s.exponent * std::log(pair.asset_i.spot) + growth);
    const double strike_leg = s.ab * s.k_i * std::exp(-spec.rate * tau);
    const double price = forward_leg * normal_cdf(out.g1) - strike_leg * normal_cdf(out.g2);
    if (price < 0.0) {
        out.price = 0.0;
        out.clipped = true;
    } else {
        out.price = price;
    }
    return out;
}

double twin_call_quadrature(const TwinPair& pair, const OptionSpec& spec, const NoiseDraw& draw) {
    const TwinSetup s = prepare(pair, spec, draw);
    const double tau = spec.maturity;
    const double log_spot = std::log(pair.asset_i.spot);
    const double drift = (spec.rate - 0.5 * s.sigma_i * s.sigma_i) * tau;
    const double vol = s.sigma_i * s.root_tau;
    const double inv_root_two_pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

    // payoff of the powered twin against the standard normal density
    auto integrand = [&](double w) {
        const double powered = std::exp(s.exponent * (log_spot + drift + w * vol));
        return (powered - s.k_i) * std::exp(-0.5 * w * w) * inv_root_two_pi;
    };

    // The powered payoff tilts the density towards w = e * sigma_i * sqrt(tau);
    // twelve standard deviations past that point the remainder is below 1e-30.
    const double lower = -s.g2;
    const double peak = s.exponent * vol;
    const double upper = std::max(lower, peak) + 12.0;

    constexpr double kTolerance = 1e-12;
    double error = 0.0;
    double l1 = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, lower, upper, 20, kTolerance, &error, &l1);
    if (!std::isfinite(integral) || error > 1e-8 * std::max(std::abs(integral), 1e-300)) {
        std::ostringstream msg;
        msg << "twin call quadrature did not converge on [" << lower << ", " << upper << "]: estimate "
            << integral << ", error bound " << error;
        throw NumericalError(msg.str(), integral, error);
    }
    return s.ab * std::exp(-spec.rate * tau) * integral;
}

}  // namespace twinasset
