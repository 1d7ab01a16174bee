#include "twinasset/twin_core.hpp"

#include "twinasset/errors.hpp"

#include <cmath>
#include <string>

namespace twinasset {

double alpha(const TwinPair& pair) {
    const auto& ai = pair.asset_i;
    const auto& aj = pair.asset_j;
    if (ai.mu == 0.0) {
        throw UndefinedAlpha("alpha is undefined for a reference asset with zero drift");
    }
    if (!(aj.sigma > 0.0)) {
        throw InvalidArgument("alpha requires sigma_j > 0");
    }
    return ai.sigma * aj.mu / (aj.sigma * ai.mu);
}

TwinPair swapped(const TwinPair& pair) {
    return TwinPair{pair.asset_j, pair.asset_i, pair.rho};
}

double twin_exponent(const TwinPair& pair) {
    return alpha(pair) * pair.asset_j.sigma / pair.asset_i.sigma;
}

double deterministic_term(const TwinPair& pair, double tau) {
    pair.validate();
    if (!(tau > 0.0)) {
        throw InvalidArgument("tau must be positive");
    }
    const double a = alpha(pair);
    const double sigma_i = pair.asset_i.sigma;
    const double sigma_j = pair.asset_j.sigma;
    const double exponent = a * sigma_j / sigma_i;
    return pair.asset_j.spot * std::pow(pair.asset_i.spot, -exponent) *
           std::exp(0.5 * sigma_j * (a * sigma_i - sigma_j) * tau);
}

double stochastic_term(const TwinPair& pair, double tau, const NoiseDraw& draw) {
    pair.validate();
    if (!(tau > 0.0)) {
        throw InvalidArgument("tau must be positive");
    }
    const double a = alpha(pair);
    const double sigma_j = pair.asset_j.sigma;
    const double root_tau = std::sqrt(tau);
    const double w_x = draw.z_x * root_tau;
    const double w_y = draw.z_y * root_tau;
    return std::exp(sigma_j * (1.0 - pair.rho * a) * w_x - a * sigma_j * std::sqrt(1.0 - pair.rho * pair.rho) * w_y);
}

TwinTerms twin_terms(const TwinPair& pair, double tau, const NoiseDraw& draw) {
    return TwinTerms{deterministic_term(pair, tau), stochastic_term(pair, tau, draw), twin_exponent(pair)};
}

double predict_twin(double s_i_terminal, const TwinTerms& terms) {
    if (!(s_i_terminal > 0.0)) {
        throw InvalidArgument("s_i_terminal must be positive");
    }
    if (!(terms.a_term > 0.0) || !(terms.b_term > 0.0)) {
        throw InvalidArgument("twin terms A and B must be positive");
    }
    return terms.a_term * terms.b_term * std::pow(s_i_terminal, terms.exponent);
}

double exact_relation_residual(const TwinPair& pair, double tau, const NoiseDraw& draw) {
    const auto [s_i, s_j] = terminal_pair(pair, tau, draw);
    NoiseDraw shared = draw;
    shared.z_x = draw.z_j;
    shared.z_y = draw.z_tilde;
    const double rebuilt = predict_twin(s_i, twin_terms(pair, tau, shared));
    return std::abs(rebuilt - s_j) / s_j;
}

std::vector<double> predict_path(const TwinPair& pair, const PathPair& paths, std::uint64_t seed) {
    pair.validate();
    if (paths.path_i.size() != paths.size() || paths.path_j.size() != paths.size() || paths.size() == 0) {
        throw InvalidArgument("path arrays must be non-empty and of equal length");
    }
    std::vector<double> predicted;
    predicted.reserve(paths.size());
    predicted.push_back(paths.path_j.front());

    TwinPair state = pair;
    for (std::size_t k = 1; k < paths.size(); ++k) {
        const double dt = paths.times[k] - paths.times[k - 1];
        state.asset_i.spot = paths.path_i[k - 1];
        state.asset_j.spot = paths.path_j[k - 1];
        predicted.push_back(predict_twin(paths.path_i[k], twin_terms(state, dt, draw_noise(seed, k - 1))));
    }
    return predicted;
}

}  // namespace twinasset
