#pragma once

#include "qcog/chsh.hpp"

#include <array>
#include <cstddef>

namespace qcog {

/// CHSH value reported for an earlier human-subject experiment on the same
/// concept pair. Reference only; nothing here computes it.
inline constexpr double kHumanSubjectChsh = 2.4197;

/// Measurement directions (radians) for the two settings on each side.
struct AngleSet {
    double alpha_a = 0.0;
    double alpha_ap = 0.0;
    double beta_b = 0.0;
    double beta_bp = 0.0;
};

/// Singlet full-correlation law E(x, y) = -cos(alpha_x - beta_y).
ExpectationSet model_expectations(const AngleSet& angles);

/// Sum of squared differences between the model and the target.
double loss(const AngleSet& angles, const ExpectationSet& target);

/// d loss / d (alpha_a, alpha_ap, beta_b, beta_bp).
std::array<double, 4> loss_gradient(const AngleSet& angles, const ExpectationSet& target);

struct FitOptions {
    int grid_steps = 64;
    int max_iterations = 10000;
    double min_step = 1e-10;
    double gradient_tolerance = 1e-8;
    int starts = 8;  // descents, from the best grid-local minima
};

struct FitResult {
    AngleSet angles;  // alpha_a pinned to 0, the rest reduced to [0, 2π)
    double residual = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Least-squares fit with alpha_a = 0: grid search over (alpha_ap, beta_b,
/// beta_bp), then gradient descent with backtracking from the lowest
/// grid-local minima and from closed-form seeds that match three of the four
/// targets. Returns the best end point. Deterministic.
FitResult fit(const ExpectationSet& target, const FitOptions& options = {});

double wrap_angle(double radians);

}  // namespace qcog
