#pragma once

// Side optical access and Gaussian-beam clipping at the isthmus edge.

namespace iontrap {

struct BeamSpec {
    double wavelength_m = 0.0;
    double waist_m = 0.0;       // 1/e^2 intensity radius at focus
    bool focus_at_ion = true;

    void validate() const;
};

// NA of a ray from the ion that grazes the chip edge: sin(atan(h / d)).
double max_side_na(double ion_height_m, double half_width_m);

// Divergence half-angle NA of an ideal Gaussian beam: lambda / (pi w0).
double gaussian_na(const BeamSpec& beam);

struct ClipResult {
    double fraction = 0.0;
    double db = 0.0;  // 10 log10(fraction); -inf when fraction is 0
};

// Power fraction of an ideal Gaussian beam that falls below a half-plane
// edge a distance edge_distance_m from the waist, with the beam axis
// edge_height_m above the plane:
//   w(z) = w0 sqrt(1 + (z/z_R)^2),  fraction = (1/2) erfc(sqrt(2) h / w(z))
ClipResult edge_clip_fraction(const BeamSpec& beam, double edge_distance_m,
                              double edge_height_m);

// 1/e^2 beam radius after propagating z from the waist.
double beam_radius_m(const BeamSpec& beam, double z_m);

}  // namespace iontrap
