#pragma once

// RF power dissipation of the trap and its lead, split into ohmic and
// dielectric parts, plus the discretized RC-ladder check of the
// distributed 1/3 factor and the many-site scaling projection.

#include <string>

#include "iontrap/trap_model.hpp"

namespace iontrap {

struct RFDrive {
    double amplitude_v = 0.0;   // zero-to-peak volts
    double omega_rad_s = 0.0;

    static RFDrive from_hz(double amplitude_v, double frequency_hz);
    double frequency_hz() const;
    void validate() const;
};

struct PowerBreakdown {
    double ohmic_trap_w = 0.0;
    double ohmic_lead_w = 0.0;
    double dielectric_trap_w = 0.0;
    double dielectric_lead_w = 0.0;
    double total_w = 0.0;

    void validate() const;  // components >= 0, total = sum within 1 ppm
};

struct ScalingCoefficients {
    double alpha_o_w = 0.0;       // ohmic coefficient, watts per site^3
    double alpha_d_w = 0.0;       // dielectric coefficient, watts per site
    int sites_per_launch = 1;

    void validate() const;
};

// Open-ended distributed RC line driven from one end:
//   P = (1/2) V^2 Omega^2 C^2 R / 3
double ohmic_power_distributed(const RFDrive& drive, double c_f, double r_ohm);

// Lumped lead resistance carrying the full downstream charging current:
//   P = (1/2) V^2 Omega^2 C^2 R
double ohmic_power_lead(const RFDrive& drive, double c_downstream_f, double r_ohm);

// Loss in the oxide under the electrode:
//   P = (1/2) V^2 Omega C_ox tan(delta)
double dielectric_power(const RFDrive& drive, double c_ox_f, double tan_delta);

PowerBreakdown power_breakdown(const TrapDescription& trap, const RFDrive& drive);

// Discretized ladder of n series resistors (r/n) with shunt capacitors
// (c/n), far end open, solved as a complex phasor network by sequential
// impedance reduction. Returns the time-averaged power dissipated in the
// resistors. Converges to ohmic_power_distributed as n grows.
double ladder_power_oracle(const RFDrive& drive, double c_f, double r_ohm,
                           int n_segments);

// Total power for n_sites split evenly across n_launches independent RF
// feeds: n_launches * (alpha_o * (n/k)^3 + alpha_d * (n/k)).
double scaling_projection(const ScalingCoefficients& coeffs, long long n_sites,
                          int n_launches);

}  // namespace iontrap
