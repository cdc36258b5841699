#include "spincav/params.hpp"

#include <cmath>
#include <string>

#include "spincav/constants.hpp"
#include "spincav/errors.hpp"

namespace spincav {

namespace {

void require(bool ok, const std::string& field, const std::string& what) {
    if (!ok) throw InvalidParamsError(field + ": " + what);
}

}  // namespace

void validate(const SystemParams& p) {
    require(std::isfinite(p.omega_a) && p.omega_a > 0.0, "omega_a", "must be positive");
    require(std::isfinite(p.delta_a), "delta_a", "must be finite");
    require(std::isfinite(p.kappa_a) && p.kappa_a > 0.0, "kappa_a", "must be positive");
    for (int j = 0; j < 2; ++j) {
        const std::string idx = std::to_string(j + 1);
        require(std::isfinite(p.delta_m[j]), "delta_m" + idx, "must be finite");
        require(std::isfinite(p.kappa_m[j]) && p.kappa_m[j] > 0.0, "kappa_m" + idx,
                "must be positive");
        require(std::isfinite(p.g[j]) && p.g[j] >= 0.0, "g" + idx, "must be non-negative");
    }
    require(std::isfinite(p.temperature) && p.temperature >= 0.0, "temperature",
            "must be non-negative");
    require(std::isfinite(p.drive_phase), "drive_phase", "must be finite");

    if (const auto* shift = std::get_if<KerrShift>(&p.kerr)) {
        require(std::isfinite(shift->shift[0]) && std::isfinite(shift->shift[1]),
                "kerr.shift", "must be finite");
    } else {
        const auto& coeff = std::get<KerrCoefficient>(p.kerr);
        require(std::isfinite(coeff.coefficient[0]) && std::isfinite(coeff.coefficient[1]),
                "kerr.coefficient", "must be finite");
        require(std::isfinite(coeff.drive_power) && coeff.drive_power >= 0.0,
                "kerr.drive_power", "must be non-negative");
    }
    if (const auto* shift = std::get_if<SagnacShift>(&p.sagnac)) {
        require(std::isfinite(shift->shift), "sagnac.shift", "must be finite");
    } else {
        const auto& ph = std::get<SagnacPhysical>(p.sagnac);
        require(std::isfinite(ph.spin_rate) && ph.spin_rate >= 0.0, "sagnac.spin_rate",
                "must be non-negative");
        require(std::isfinite(ph.refractive_index) && ph.refractive_index > 1.0,
                "sagnac.refractive_index", "must exceed 1");
        require(std::isfinite(ph.radius) && ph.radius > 0.0, "sagnac.radius",
                "must be positive");
        require(std::isfinite(ph.dn_dlambda), "sagnac.dn_dlambda", "must be finite");
    }
}

double sagnac_shift(double spin_rate, double refractive_index, double radius,
                    double omega_a, double dn_dlambda, double lambda,
                    DriveDirection direction) {
    if (!(refractive_index > 1.0))
        throw DomainError("sagnac_shift: refractive index must exceed 1");
    if (!(radius > 0.0)) throw DomainError("sagnac_shift: radius must be positive");
    if (!(spin_rate >= 0.0)) throw DomainError("sagnac_shift: spin rate must be non-negative");
    const double n = refractive_index;
    const double geometric = 1.0 - 1.0 / (n * n) - (lambda / n) * dn_dlambda;
    const double magnitude = spin_rate * n * radius * omega_a / constants::speed_of_light;
    const double sign = (direction == DriveDirection::CW) ? 1.0 : -1.0;
    return sign * magnitude * geometric;
}

double thermal_occupation(double omega, double temperature) {
    if (!(omega > 0.0)) throw DomainError("thermal_occupation: omega must be positive");
    if (temperature < 0.0)
        throw DomainError("thermal_occupation: temperature must be non-negative");
    if (temperature == 0.0) return 0.0;
    const double x = constants::hbar * omega / (constants::boltzmann * temperature);
    return 1.0 / std::expm1(x);  // expm1 keeps both the x<<1 and x>>1 limits accurate
}

double rabi_frequency(double power, double kappa_a, double omega_L) {
    if (!(power >= 0.0)) throw DomainError("rabi_frequency: power must be non-negative");
    if (!(kappa_a > 0.0)) throw DomainError("rabi_frequency: kappa_a must be positive");
    if (!(omega_L > 0.0)) throw DomainError("rabi_frequency: omega_L must be positive");
    return std::sqrt(2.0 * kappa_a * power / omega_L);
}

double drive_frequency(const SystemParams& p) {
    return p.omega_a - p.delta_a;
}

double mode_frequency(const SystemParams& p, ModeIndex mode) {
    switch (mode) {
        case ModeIndex::Cavity:
            return p.omega_a;
        case ModeIndex::Magnon1:
            return drive_frequency(p) + p.delta_m[0];
        case ModeIndex::Magnon2:
            return drive_frequency(p) + p.delta_m[1];
    }
    throw InvalidParamsError("mode_frequency: bad mode index");
}

double resolve_sagnac_shift(const SystemParams& p) {
    if (const auto* shift = std::get_if<SagnacShift>(&p.sagnac)) return shift->shift;
    const auto& ph = std::get<SagnacPhysical>(p.sagnac);
    const double lambda = constants::two_pi * constants::speed_of_light / p.omega_a;
    return sagnac_shift(ph.spin_rate, ph.refractive_index, ph.radius, p.omega_a,
                        ph.dn_dlambda, lambda, ph.direction);
}

}  // namespace spincav
