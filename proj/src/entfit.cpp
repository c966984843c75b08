#include "qcog/entfit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace qcog {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Residuals {
    std::array<double, 4> r{};  // AB, AB', A'B, A'B'
    double sum_sq() const { return r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3]; }
};

Residuals residuals(const AngleSet& a, const ExpectationSet& t) {
    const ExpectationSet m = model_expectations(a);
    return {{m.e_ab - t.e_ab, m.e_abp - t.e_abp, m.e_apb - t.e_apb, m.e_apbp - t.e_apbp}};
}

// Free parameters with alpha_a pinned: (alpha_ap, beta_b, beta_bp).
using Params = std::array<double, 3>;

AngleSet from_params(const Params& p) { return {0.0, p[0], p[1], p[2]}; }

Params reduced_gradient(const Params& p, const ExpectationSet& t) {
    const auto g = loss_gradient(from_params(p), t);
    return {g[1], g[2], g[3]};
}

double norm(const Params& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

// Each model value fixes its angle difference up to sign. Any three of the
// four differences determine (alpha_ap, beta_b, beta_bp), so every choice of
// the dropped pair and of three signs gives a start that matches three
// targets exactly; for a realizable target one of them matches all four.
std::vector<Params> analytic_seeds(const ExpectationSet& t) {
    auto magnitude = [](double e) { return std::acos(std::clamp(-e, -1.0, 1.0)); };
    const std::array<double, 4> m = {magnitude(t.e_ab), magnitude(t.e_abp), magnitude(t.e_apb), magnitude(t.e_apbp)};
    std::vector<Params> seeds;
    for (int drop = 0; drop < 4; ++drop)
        for (int signs = 0; signs < 8; ++signs) {
            std::array<double, 4> d{};
            for (int i = 0, bit = 0; i < 4; ++i) {
                if (i == drop) continue;
                d[i] = ((signs >> bit++) & 1) ? -m[i] : m[i];
            }
            // d = (-beta_b, -beta_bp, alpha_ap - beta_b, alpha_ap - beta_bp)
            double ap = 0, b = 0, bp = 0;
            switch (drop) {
                case 3: b = -d[0]; bp = -d[1]; ap = d[2] + b; break;
                case 2: b = -d[0]; bp = -d[1]; ap = d[3] + bp; break;
                case 1: b = -d[0]; ap = d[2] + b; bp = ap - d[3]; break;
                case 0: bp = -d[1]; ap = d[3] + bp; b = ap - d[2]; break;
            }
            seeds.push_back({ap, b, bp});
        }
    return seeds;
}

// Steepest descent with Armijo backtracking, in place. Returns the final loss.
double descend(Params& x, const ExpectationSet& target, const FitOptions& options, std::size_t& evaluations) {
    double fx = loss(from_params(x), target);
    ++evaluations;
    double step_size = 1.0;
    for (int it = 0; it < options.max_iterations && fx > 0.0; ++it) {
        const Params g = reduced_gradient(x, target);
        const double gn = norm(g);
        if (gn == 0.0) break;
        double t = std::min(step_size * 2.0, 1e3);
        bool accepted = false;
        while (t * gn >= options.min_step) {
            const Params trial{x[0] - t * g[0], x[1] - t * g[1], x[2] - t * g[2]};
            const double ft = loss(from_params(trial), target);
            ++evaluations;
            if (ft <= fx - 1e-4 * t * gn * gn) {
                x = trial;
                fx = ft;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) break;
        step_size = t;
    }
    return fx;
}

}  // namespace

double wrap_angle(double radians) {
    double w = std::fmod(radians, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

ExpectationSet model_expectations(const AngleSet& a) {
    return {-std::cos(a.alpha_a - a.beta_b), -std::cos(a.alpha_a - a.beta_bp), -std::cos(a.alpha_ap - a.beta_b),
            -std::cos(a.alpha_ap - a.beta_bp)};
}

double loss(const AngleSet& angles, const ExpectationSet& target) { return residuals(angles, target).sum_sq(); }

std::array<double, 4> loss_gradient(const AngleSet& a, const ExpectationSet& t) {
    const Residuals res = residuals(a, t);
    // dE(x,y)/d alpha_x = sin(alpha_x - beta_y) = -dE(x,y)/d beta_y
    const double s_ab = std::sin(a.alpha_a - a.beta_b);
    const double s_abp = std::sin(a.alpha_a - a.beta_bp);
    const double s_apb = std::sin(a.alpha_ap - a.beta_b);
    const double s_apbp = std::sin(a.alpha_ap - a.beta_bp);
    const auto& r = res.r;
    return {2.0 * (r[0] * s_ab + r[1] * s_abp), 2.0 * (r[2] * s_apb + r[3] * s_apbp),
            -2.0 * (r[0] * s_ab + r[2] * s_apb), -2.0 * (r[1] * s_abp + r[3] * s_apbp)};
}

FitResult fit(const ExpectationSet& target, const FitOptions& options) {
    validate(target);
    FitResult out;

    // Grid stage. Every model value is -cos of a difference of grid angles,
    // so one table of -cos(2πk/n) covers all of them.
    const int n = options.grid_steps;
    std::vector<double> neg_cos(n);
    for (int k = 0; k < n; ++k) neg_cos[k] = -std::cos(kTwoPi * k / n);
    auto wrap = [n](int x) { return ((x % n) + n) % n; };
    auto index = [n](int ap, int b, int bp) { return (static_cast<std::size_t>(ap) * n + b) * n + bp; };

    std::vector<double> grid(static_cast<std::size_t>(n) * n * n);
    for (int ap = 0; ap < n; ++ap)
        for (int b = 0; b < n; ++b) {
            const double r_ab = neg_cos[wrap(-b)] - target.e_ab;
            const double r_apb = neg_cos[wrap(ap - b)] - target.e_apb;
            for (int bp = 0; bp < n; ++bp) {
                const double r_abp = neg_cos[wrap(-bp)] - target.e_abp;
                const double r_apbp = neg_cos[wrap(ap - bp)] - target.e_apbp;
                grid[index(ap, b, bp)] = r_ab * r_ab + r_apb * r_apb + r_abp * r_abp + r_apbp * r_apbp;
            }
        }
    out.evaluations += grid.size();

    // The sign ambiguity of cos leaves mirrored basins that a single descent
    // can fall into, so descend from the best few grid-local minima.
    std::vector<std::pair<double, std::size_t>> minima;
    for (int ap = 0; ap < n; ++ap)
        for (int b = 0; b < n; ++b)
            for (int bp = 0; bp < n; ++bp) {
                const double f = grid[index(ap, b, bp)];
                bool local_min = true;
                for (int da = -1; da <= 1 && local_min; ++da)
                    for (int db = -1; db <= 1 && local_min; ++db)
                        for (int dbp = -1; dbp <= 1 && local_min; ++dbp)
                            if (grid[index(wrap(ap + da), wrap(b + db), wrap(bp + dbp))] < f) local_min = false;
                if (local_min) minima.emplace_back(f, index(ap, b, bp));
            }
    std::sort(minima.begin(), minima.end());
    if (minima.size() > static_cast<std::size_t>(options.starts)) minima.resize(options.starts);

    std::vector<Params> starts;
    for (const auto& [f0, idx] : minima)
        starts.push_back({kTwoPi * double(idx / (std::size_t(n) * n)) / n, kTwoPi * double((idx / n) % n) / n,
                          kTwoPi * double(idx % n) / n});
    for (const Params& seed : analytic_seeds(target)) starts.push_back(seed);

    Params best_x{0.0, 0.0, 0.0};
    double best_f = INFINITY;
    for (Params x : starts) {
        const double fx = descend(x, target, options, out.evaluations);
        if (fx < best_f) {
            best_f = fx;
            best_x = x;
        }
    }
    const Params x = best_x;

    out.angles = {0.0, wrap_angle(x[0]), wrap_angle(x[1]), wrap_angle(x[2])};
    out.residual = loss(out.angles, target);
    out.converged = norm(reduced_gradient({out.angles.alpha_ap, out.angles.beta_b, out.angles.beta_bp}, target)) <
                    options.gradient_tolerance;
    return out;
}

}  // namespace qcog
