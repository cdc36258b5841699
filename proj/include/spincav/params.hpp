#pragma once

#include <array>
#include <variant>

namespace spincav {

// Quadrature layout is fixed by this ordering: mode k occupies rows/cols 2k, 2k+1
// of every 6x6 matrix, as (X_a, Y_a, X_m1, Y_m1, X_m2, Y_m2).
enum class ModeIndex { Cavity = 0, Magnon1 = 1, Magnon2 = 2 };

enum class DriveDirection { CW, CCW };

// Kerr effect given either as realized frequency shifts or as bare
// coefficients plus the drive power that produces them self-consistently.
struct KerrShift {
    std::array<double, 2> shift;  // rad/s
};
struct KerrCoefficient {
    std::array<double, 2> coefficient;  // rad/s
    double drive_power;                 // W
};
using KerrSpec = std::variant<KerrShift, KerrCoefficient>;

// Rotation-induced cavity shift, either directly or from the geometry.
struct SagnacShift {
    double shift;  // rad/s
};
struct SagnacPhysical {
    double spin_rate;         // rad/s
    double refractive_index;  // > 1
    double radius;            // m
    double dn_dlambda = 0.0;  // 1/m
    DriveDirection direction = DriveDirection::CW;
};
using SagnacSpec = std::variant<SagnacShift, SagnacPhysical>;

/// Full parameter set of the model, in angular frequency (rad/s) throughout.
struct SystemParams {
    double omega_a;                  // bare cavity resonance
    double delta_a;                  // cavity-drive detuning, omega_a - omega_L
    std::array<double, 2> delta_m;   // magnon-drive detunings
    double kappa_a;                  // cavity decay
    std::array<double, 2> kappa_m;   // magnon decays
    std::array<double, 2> g;         // magnon-photon couplings
    KerrSpec kerr;
    SagnacSpec sagnac;
    double temperature;              // K
    double drive_phase = 0.0;        // rad
};

/// Throws InvalidParamsError naming the offending field.
void validate(const SystemParams& p);

/// Rotation-induced cavity frequency shift. Positive for CW drive, negative
/// for CCW (cavity spinning taken CW). lambda is the vacuum drive wavelength.
double sagnac_shift(double spin_rate, double refractive_index, double radius,
                    double omega_a, double dn_dlambda, double lambda,
                    DriveDirection direction);

/// Bose-Einstein mean occupation; exactly 0 at zero temperature.
double thermal_occupation(double omega, double temperature);

/// Drive Rabi frequency sqrt(2 kappa_a P / omega_L).
double rabi_frequency(double power, double kappa_a, double omega_L);

/// Drive frequency omega_L = omega_a - delta_a.
double drive_frequency(const SystemParams& p);

/// Lab-frame mode frequency: omega_a for the cavity, omega_L + delta_m for
/// the magnons. Kerr and Sagnac shifts are shifts, not detunings, and do not
/// enter here.
double mode_frequency(const SystemParams& p, ModeIndex mode);

/// Delta_F from whichever sagnac variant is populated.
double resolve_sagnac_shift(const SystemParams& p);

}  // namespace spincav
