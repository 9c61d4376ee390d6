#pragma once

// Secular frequency, trap depth and Mathieu drive parameter from the
// characteristic distance and the geometric depth efficiency.

#include "iontrap/rf_power.hpp"
#include "iontrap/trap_model.hpp"

namespace iontrap {

// Radial secular frequency in Hz:
//   omega = q V / (sqrt(2) Omega m Lambda^2), returned as omega / 2 pi.
double radial_frequency_hz(const IonSpecies& species, const RFDrive& drive,
                           const PseudoParams& pseudo);

struct TrapDepth {
    double joules = 0.0;
    double electron_volts = 0.0;
};

// Radial depth D = (1/2) alpha m (2 pi f_secular)^2 Lambda^2.
// alpha = 1 recovers the hyperbolic-geometry bound.
TrapDepth trap_depth(const IonSpecies& species, double secular_hz,
                     const PseudoParams& pseudo);

inline constexpr double mathieu_stability_limit = 0.4;

// q_M = 2 sqrt(2) * (2 pi f_radial) / Omega.
double mathieu_q(const IonSpecies& species, const RFDrive& drive,
                 const PseudoParams& pseudo);

struct PseudoReport {
    double radial_hz = 0.0;
    double depth_ev = 0.0;
    double mathieu_q = 0.0;
    bool stable = false;  // false flags q_M above the stability limit
};

PseudoReport pseudo_report(const IonSpecies& species, const RFDrive& drive,
                           const PseudoParams& pseudo);

}  // namespace iontrap
