#pragma once

#include "twinasset/stochastic_engine.hpp"

#include <cstdint>
#include <vector>

namespace twinasset {

/// Ratio of the coefficients of variation,
/// alpha = (sigma_i / mu_i) / (sigma_j / mu_j) = sigma_i mu_j / (sigma_j mu_i).
/// Throws UndefinedAlpha when mu_i == 0.
double alpha(const TwinPair& pair);

/// The same pair with the roles of i and j exchanged.
TwinPair swapped(const TwinPair& pair);

/// Factors of the compact twin relation S_j^T ~ A * B * (S_i^T)^exponent.
struct TwinTerms {
    double a_term = 0.0;    ///< deterministic factor A
    double b_term = 0.0;    ///< stochastic factor B for one draw
    double exponent = 0.0;  ///< alpha * sigma_j / sigma_i
};

/// Power applied to S_i^T in the twin relation, alpha * sigma_j / sigma_i.
double twin_exponent(const TwinPair& pair);

/// A = S_j (S_i)^(-exponent) exp(0.5 sigma_j (alpha sigma_i - sigma_j) tau).
double deterministic_term(const TwinPair& pair, double tau);

/// B = exp(sigma_j (1 - rho alpha) z_x sqrt(tau)
///         - alpha sigma_j sqrt(1 - rho^2) z_y sqrt(tau)).
double stochastic_term(const TwinPair& pair, double tau, const NoiseDraw& draw);

TwinTerms twin_terms(const TwinPair& pair, double tau, const NoiseDraw& draw);

/// Twin estimate of S_j^T from the observed S_i^T.
double predict_twin(double s_i_terminal, const TwinTerms& terms);

/// Relative gap between the simulated S_j^T and the twin relation evaluated
/// with the pair's own noises (z_x := z_j, z_y := z_tilde). With shared
/// noise the relation is exact, so this is an algebraic self-check that must
/// stay at rounding level.
double exact_relation_residual(const TwinPair& pair, double tau, const NoiseDraw& draw);

/// One-step-ahead twin predictions along a simulated path: entry k is the
/// estimate of path_j[k] from (path_i[k-1], path_j[k-1], path_i[k]) with
/// fresh approximation noise from draw_noise(seed, k - 1). Entry 0 is the
/// observed starting price.
std::vector<double> predict_path(const TwinPair& pair, const PathPair& paths, std::uint64_t seed);

}  // namespace twinasset
