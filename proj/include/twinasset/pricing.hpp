#pragma once

#include "twinasset/stochastic_engine.hpp"

namespace twinasset {

/// European call contract on asset j.
struct OptionSpec {
    double strike = 0.0;    ///< K_j, > 0
    double maturity = 0.0;  ///< time to maturity in years, > 0
    double rate = 0.0;      ///< continuously compounded risk-free rate

    void validate() const;
};

/// Standard normal cumulative distribution function.
double normal_cdf(double x) noexcept;

/// Black-Scholes price of a European call.
double bs_call(double spot, const OptionSpec& spec, double sigma);

struct TwinPriceResult {
    double price = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    double k_i = 0.0;      ///< transformed strike K_j / (A B)
    bool clipped = false;  ///< closed form went negative by roundoff and was set to 0
};

/// Call on asset j priced through its twin i, conditional on the draw
/// (z_x, z_y) that fixes the stochastic factor B:
///
///   c_j ~ A B S_i^e exp((e - 1)(r + alpha sigma_j sigma_i / 2) tau) N(g1)
///         - A B K_i exp(-r tau) N(g2),
///
/// with e = alpha sigma_j / sigma_i, K_i = K_j / (A B),
/// g2 = [ln(S_i / K_i^(1/e)) + (r - sigma_i^2 / 2) tau] / (sigma_i sqrt(tau))
/// and g1 = g2 + alpha sigma_j sqrt(tau). Requires alpha > 0.
TwinPriceResult twin_call(const TwinPair& pair, const OptionSpec& spec, const NoiseDraw& draw);

/// Same quantity as twin_call().price obtained by integrating the truncated
/// payoff [(S_i^T)^e - K_i]^+ against the standard normal density over
/// w in [-g2, inf) with adaptive Gauss-Kronrod quadrature. Used as an
/// independent check on the closed form. Throws NumericalError when the
/// quadrature does not converge.
double twin_call_quadrature(const TwinPair& pair, const OptionSpec& spec, const NoiseDraw& draw);

}  // namespace twinasset
