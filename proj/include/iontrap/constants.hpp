#pragma once

// Physical constants, CODATA 2018 exact/recommended values.

namespace iontrap::constants {

inline constexpr double vacuum_permittivity_f_m = 8.8541878128e-12;
inline constexpr double boltzmann_j_k = 1.380649e-23;
inline constexpr double hbar_j_s = 1.054571817e-34;
inline constexpr double elementary_charge_c = 1.602176634e-19;
inline constexpr double atomic_mass_kg = 1.66053906660e-27;

}  // namespace iontrap::constants
