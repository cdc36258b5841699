#pragma once

namespace spincav::constants {

// CODATA 2018
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double boltzmann = 1.380649e-23;     // J/K (exact)
inline constexpr double speed_of_light = 299792458.0; // m/s (exact)

inline constexpr double two_pi = 6.283185307179586476925286766559;

// config files carry ordinary frequencies f = omega/2pi
inline constexpr double rad_per_MHz = two_pi * 1e6;
inline constexpr double rad_per_GHz = two_pi * 1e9;

}  // namespace spincav::constants
