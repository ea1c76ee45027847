#pragma once

namespace aligngain::constants {

inline constexpr double pi = 3.14159265358979323846;

// SI
inline constexpr double boltzmann_J_per_K = 1.380649e-23; // exact (2019 SI)
inline constexpr double debye_Cm = 3.33564e-30;           // 1 Debye in C*m
inline constexpr double epsilon0_F_per_m = 8.8541878128e-12;

// Gaussian polarizability volume in cm^3 -> SI polarizability (C*m^2/V):
// alpha_SI = 4*pi*eps0 * alpha_volume[m^3], with 1 cm^3 = 1e-6 m^3.
inline constexpr double polarizability_cm3_to_SI =
    4.0 * pi * epsilon0_F_per_m * 1e-6;

// cgs, for the sum-over-states polarizability (result in cm^3)
inline constexpr double hbar_erg_s = 1.054571817e-27;
inline constexpr double debye_statC_cm = 1e-18;
inline constexpr double electron_charge_statC = 4.80320425e-10;
inline constexpr double electron_mass_g = 9.1093837015e-28;

} // namespace aligngain::constants
