#include "spincav/steady_state.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "spincav/errors.hpp"

namespace spincav {

namespace {

using Mat3c = Eigen::Matrix3cd;
using Vec3c = Eigen::Vector3cd;
using std::complex;

constexpr double kSingularCondition = 1e12;

// System matrix of the mean-field fixed-point equations: M x = b with
// x = (a_s, m_1s, m_2s) and b = (epsilon, 0, 0).
Mat3c system_matrix(const SystemParams& p, const std::array<double, 2>& delta_K) {
    const double delta_eff = p.delta_a - resolve_sagnac_shift(p);
    Mat3c M;
    const complex<double> i(0.0, 1.0);
    M << p.kappa_a + i * delta_eff, i * p.g[0], i * p.g[1],
         i * p.g[0], p.kappa_m[0] + i * (p.delta_m[0] + delta_K[0]), 0.0,
         i * p.g[1], 0.0, p.kappa_m[1] + i * (p.delta_m[1] + delta_K[1]);
    return M;
}

Vec3c solve_amplitudes(const SystemParams& p, const std::array<double, 2>& delta_K,
                       double epsilon0) {
    const Mat3c M = system_matrix(p, delta_K);
    Eigen::JacobiSVD<Mat3c> svd(M);  // singular values only
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(2);
    if (!(smin > 0.0) || smax / smin > kSingularCondition)
        throw SingularSystemError("steady state: fixed-point system numerically singular");
    Vec3c b;
    b << epsilon0 * std::polar(1.0, p.drive_phase), 0.0, 0.0;
    return M.partialPivLu().solve(b);
}

double normalized_residual(const SystemParams& p, const std::array<double, 2>& delta_K,
                           double epsilon0, const Vec3c& x) {
    const Mat3c M = system_matrix(p, delta_K);
    Vec3c b;
    b << epsilon0 * std::polar(1.0, p.drive_phase), 0.0, 0.0;
    const double raw = (M * x - b).cwiseAbs().maxCoeff();
    const double kappa_max = std::max({p.kappa_a, p.kappa_m[0], p.kappa_m[1]});
    const double amp_max = x.cwiseAbs().maxCoeff();
    const double scale = std::max(std::abs(epsilon0), kappa_max * amp_max);
    return scale > 0.0 ? raw / scale : raw;
}

SteadyState make_state(const SystemParams& p, const std::array<double, 2>& delta_K,
                       double epsilon0, const Vec3c& x) {
    SteadyState s;
    s.a_s = x(0);
    s.m_s = {x(1), x(2)};
    s.delta_K = delta_K;
    s.photon_number = std::norm(x(0));
    s.magnon_numbers = {std::norm(x(1)), std::norm(x(2))};
    s.residual = normalized_residual(p, delta_K, epsilon0, x);
    return s;
}

}  // namespace

SteadyState solve_steady_state_shift_mode(const SystemParams& p, double epsilon0) {
    const auto* shift = std::get_if<KerrShift>(&p.kerr);
    if (!shift)
        throw InvalidParamsError("shift-mode steady state requires the kerr shift variant");
    const Vec3c x = solve_amplitudes(p, shift->shift, epsilon0);
    return make_state(p, shift->shift, epsilon0, x);
}

std::vector<SteadyState> solve_steady_state_selfconsistent(
    const SystemParams& p, double epsilon0, const SteadyStateOptions& options) {
    const auto* kerr = std::get_if<KerrCoefficient>(&p.kerr);
    if (!kerr)
        throw InvalidParamsError(
            "self-consistent steady state requires the kerr coefficient variant");
    if (options.n_starts < 1)
        throw InvalidParamsError("n_starts must be at least 1");
    const std::array<double, 2> K = kerr->coefficient;

    // realized shifts from amplitudes at a trial delta_K
    const auto realized = [&](const std::array<double, 2>& dk) {
        const Vec3c x = solve_amplitudes(p, dk, epsilon0);
        return std::pair{std::array<double, 2>{2.0 * K[0] * std::norm(x(1)),
                                               2.0 * K[1] * std::norm(x(2))},
                         x};
    };

    const auto [estimate, x0] = realized({0.0, 0.0});
    const bool active[2] = {estimate[0] != 0.0, estimate[1] != 0.0};
    const double freq_scale =
        std::max({p.kappa_a, p.kappa_m[0], p.kappa_m[1], std::abs(p.delta_a),
                  std::abs(p.delta_m[0]), std::abs(p.delta_m[1]), std::abs(estimate[0]),
                  std::abs(estimate[1])});

    const auto converged = [&](const std::array<double, 2>& dk,
                               const std::array<double, 2>& g) {
        for (int j = 0; j < 2; ++j) {
            const double r = std::abs(dk[j] - g[j]);
            if (r > 1e-12 * std::max(std::abs(dk[j]), std::abs(g[j])) &&
                r > 1e-30 * freq_scale)
                return false;
        }
        return true;
    };

    // initial-guess grid: scale factors in [-10, 10] applied to the
    // perturbative estimate, per Kerr-active magnon
    std::vector<std::array<double, 2>> starts;
    if (!active[0] && !active[1]) {
        starts.push_back({0.0, 0.0});
    } else if (active[0] && active[1]) {
        const int k = std::max(2, static_cast<int>(std::ceil(std::sqrt(
                                      static_cast<double>(options.n_starts)))));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                starts.push_back({estimate[0] * (-10.0 + 20.0 * i / (k - 1)),
                                  estimate[1] * (-10.0 + 20.0 * j / (k - 1))});
    } else {
        const int j = active[0] ? 0 : 1;
        const int k = std::max(2, options.n_starts);
        for (int i = 0; i < k; ++i) {
            std::array<double, 2> s{0.0, 0.0};
            s[j] = estimate[j] * (-10.0 + 20.0 * i / (k - 1));
            starts.push_back(s);
        }
    }

    std::vector<SteadyState> solutions;
    const double h = std::sqrt(std::numeric_limits<double>::epsilon()) * freq_scale;

    for (const auto& start : starts) {
        std::array<double, 2> dk = start;
        bool ok = false;
        std::array<double, 2> g{};
        try {
            for (int it = 0; it < options.max_iterations; ++it) {
                Vec3c x;
                std::tie(g, x) = realized(dk);
                if (converged(dk, g)) {
                    ok = true;
                    break;
                }
                const std::array<double, 2> r{dk[0] - g[0], dk[1] - g[1]};
                // Jacobian of F(dk) = dk - realized(dk) by forward differences
                Eigen::Matrix2d J = Eigen::Matrix2d::Identity();
                for (int c = 0; c < 2; ++c) {
                    if (!active[c]) continue;
                    std::array<double, 2> dkh = dk;
                    dkh[c] += h;
                    const auto [gh, xh] = realized(dkh);
                    J(0, c) = ((dkh[0] - gh[0]) - r[0]) / h;
                    J(1, c) = ((dkh[1] - gh[1]) - r[1]) / h;
                }
                Eigen::Vector2d step = J.fullPivLu().solve(-Eigen::Vector2d(r[0], r[1]));
                if (!step.allFinite()) break;
                const double rn0 = std::max(std::abs(r[0]), std::abs(r[1]));
                double lambda = 1.0;
                std::array<double, 2> next{dk[0] + step(0), dk[1] + step(1)};
                for (int cut = 0; cut < 40; ++cut) {
                    const std::array<double, 2> trial{dk[0] + lambda * step(0),
                                                      dk[1] + lambda * step(1)};
                    const auto [gt, xt] = realized(trial);
                    if (std::max(std::abs(trial[0] - gt[0]), std::abs(trial[1] - gt[1])) <
                        rn0) {
                        next = trial;
                        break;
                    }
                    lambda *= 0.5;  // damp on divergence
                }
                dk = next;
            }
        } catch (const SingularSystemError&) {
            continue;  // start wandered onto a singular parameter set
        }
        if (!ok) continue;

        // store the exactly self-consistent pair: delta_K recomputed from the
        // reported amplitudes, residual evaluated at those stored shifts
        const auto [gk, x] = realized(dk);
        SteadyState s = make_state(p, dk, epsilon0, x);
        s.delta_K = {2.0 * K[0] * s.magnon_numbers[0], 2.0 * K[1] * s.magnon_numbers[1]};
        s.residual = normalized_residual(p, s.delta_K, epsilon0, x);
        if (s.residual > options.tolerance) continue;

        const double amp_scale = std::max(
            {1.0, std::abs(s.a_s), std::abs(s.m_s[0]), std::abs(s.m_s[1])});
        const bool duplicate = std::any_of(
            solutions.begin(), solutions.end(), [&](const SteadyState& t) {
                const double d = std::max({std::abs(s.a_s - t.a_s),
                                           std::abs(s.m_s[0] - t.m_s[0]),
                                           std::abs(s.m_s[1] - t.m_s[1])});
                return d <= 1e-6 * amp_scale;
            });
        if (!duplicate) solutions.push_back(s);
    }

    if (solutions.empty())
        throw ConvergenceError("self-consistent steady state: no start converged");

    std::sort(solutions.begin(), solutions.end(),
              [](const SteadyState& a, const SteadyState& b) {
                  if (a.photon_number != b.photon_number)
                      return a.photon_number > b.photon_number;
                  if (a.magnon_numbers[0] != b.magnon_numbers[0])
                      return a.magnon_numbers[0] > b.magnon_numbers[0];
                  return a.delta_K[0] < b.delta_K[0];
              });
    return solutions;
}

DirectionalOccupations nonreciprocity_of_occupations(const SystemParams& p,
                                                     double epsilon0) {
    const double magnitude = std::abs(resolve_sagnac_shift(p));
    const auto with_shift = [&](double shift) {
        SystemParams q = p;
        q.sagnac = SagnacShift{shift};
        if (std::holds_alternative<KerrShift>(q.kerr))
            return solve_steady_state_shift_mode(q, epsilon0);
        return solve_steady_state_selfconsistent(q, epsilon0).front();
    };
    return DirectionalOccupations{with_shift(+magnitude), with_shift(-magnitude)};
}

SteadyState rotated_to_real_m1(SteadyState s) {
    if (std::abs(s.m_s[0]) == 0.0) return s;
    const std::complex<double> rot = std::polar(1.0, -std::arg(s.m_s[0]));
    s.a_s *= rot;
    s.m_s[0] *= rot;
    s.m_s[1] *= rot;
    return s;
}

}  // namespace spincav
