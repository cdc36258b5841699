#include "spincav/squeezing.hpp"

#include <cmath>
#include <optional>

#include "spincav/errors.hpp"

namespace spincav {

double squeezing_parameter(double delta_m, double delta_K) {
    const double num = delta_m + delta_K;
    const double den = delta_m + 3.0 * delta_K;
    if (den == 0.0 || num / den <= 0.0)
        throw DomainError("squeezing_parameter: (delta_m+delta_K)/(delta_m+3 delta_K) "
                          "must be positive");
    return 0.25 * std::log(num / den);
}

double squeezed_mode_detuning(double delta_m, double delta_K) {
    const double r = squeezing_parameter(delta_m, delta_K);
    return (delta_m + 2.0 * delta_K) / std::cosh(2.0 * r);
}

SqueezingFrame squeezing_frame(const SystemParams& p, const std::array<double, 2>& delta_K) {
    SqueezingFrame frame;
    for (int j = 0; j < 2; ++j) {
        frame.r[j] = squeezing_parameter(p.delta_m[j], delta_K[j]);
        frame.effective_detuning[j] =
            (p.delta_m[j] + 2.0 * delta_K[j]) / std::cosh(2.0 * frame.r[j]);
        frame.effective_coupling[j] = p.g[j] * std::cosh(frame.r[j]);
    }
    return frame;
}

namespace {

// Squeezed-mode detuning as a function of delta_m, evaluated without throwing;
// tends to 0 at the edges of the definition domain.
double detuning_or_zero(double x, double dk) {
    const double num = x + dk;
    const double den = x + 3.0 * dk;
    if (den == 0.0 || num / den <= 0.0) return 0.0;
    const double r = 0.25 * std::log(num / den);
    return (x + 2.0 * dk) / std::cosh(2.0 * r);
}

// Search segments where the squeezing frame is defined, clipped to the window.
std::vector<std::pair<double, double>> domain_segments(double dk, double window) {
    if (dk == 0.0) return {{-window, window}};
    const double lo_gap = std::min(-dk, -3.0 * dk);
    const double hi_gap = std::max(-dk, -3.0 * dk);
    const double nudge = 1e-13 * std::max(std::abs(dk), window) + 1e-300;
    std::vector<std::pair<double, double>> segments;
    if (lo_gap - nudge > -window) segments.push_back({-window, lo_gap - nudge});
    if (hi_gap + nudge < window) segments.push_back({hi_gap + nudge, window});
    return segments;
}

// The detuning is strictly increasing on each segment, so a plain bisection
// is exact once a bracket exists.
std::optional<double> find_root(double dk, double target, double window) {
    for (const auto& [lo, hi] : domain_segments(dk, window)) {
        const double flo = detuning_or_zero(lo, dk);
        const double fhi = detuning_or_zero(hi, dk);
        if (!(flo <= target && target <= fhi)) continue;
        double a = lo, b = hi;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (a + b);
            if (mid == a || mid == b) break;
            if (detuning_or_zero(mid, dk) < target)
                a = mid;
            else
                b = mid;
        }
        return 0.5 * (a + b);
    }
    return std::nullopt;
}

}  // namespace

std::vector<ResonanceBranch> optimal_detunings(double delta_a, double delta_F,
                                               const std::array<double, 2>& delta_K) {
    const double target = delta_a - delta_F;
    if (target == 0.0)
        throw DomainError("optimal_detunings: delta_a - delta_F must be nonzero");
    const double window = 10.0 * std::abs(target);

    std::vector<ResonanceBranch> branches;
    for (int s : {+1, -1}) {
        ResonanceBranch branch;
        branch.sign = {s, -s};
        bool ok = true;
        for (int j = 0; j < 2; ++j) {
            const double want = branch.sign[j] * target;
            const auto root = find_root(delta_K[j], want, window);
            if (!root) {
                ok = false;
                break;
            }
            branch.delta_m[j] = *root;
            branch.residual[j] =
                std::abs(detuning_or_zero(*root, delta_K[j]) - want) / std::abs(target);
        }
        if (ok) branches.push_back(branch);
    }
    if (branches.empty())
        throw NoRootError("optimal_detunings: no bracket found within the search window");
    return branches;
}

}  // namespace spincav
