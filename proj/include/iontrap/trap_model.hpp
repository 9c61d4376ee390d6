#pragma once

// Geometric and electrical description of a surface-electrode trap:
// metal/oxide layer stack, RF electrode electrical model, drive-side
// pseudopotential parameters, and the ion species. Loaded from a JSON
// config (lengths in micrometers, capacitances in picofarads,
// resistances in ohms) and immutable after validation.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "iontrap/constants.hpp"

namespace iontrap {

enum class LayerMaterial { metal, oxide, vacuum };
enum class LayerRole { none, rf, ground };

struct Layer {
    std::string name;
    LayerMaterial material = LayerMaterial::metal;
    double thickness_m = 0.0;
    double rel_permittivity = 1.0;  // oxide layers only
    LayerRole role = LayerRole::none;
};

struct LayerStack {
    std::vector<Layer> layers;

    void validate() const;
};

struct RFElectrodeModel {
    double c_trap_f = 0.0;      // trap-region RF-to-ground capacitance
    double c_lead_f = 0.0;
    double c_ox_trap_f = 0.0;   // oxide-supported fraction of the trap region
    double c_ox_lead_f = 0.0;
    double r_trap_ohm = 0.0;    // end-to-end distributed resistance of the RF rail network
    double r_lead_ohm = 0.0;    // lumped lead resistance, upstream of the whole trap
    double tan_delta = 0.0;
    double perforation_fraction = 1.0;  // oxide-supported fraction of RF footprint, 1 = solid

    void validate() const;
};

struct IonSpecies {
    std::string name;
    double mass_kg = 0.0;
    double charge_c = 0.0;

    void validate() const;

    // Singly-charged presets.
    static IonSpecies ca40();
    static IonSpecies yb171();
    static IonSpecies ba138();
    // Lookup by name ("Ca-40", "yb171", ...); throws ValidationError if unknown.
    static IonSpecies preset(std::string_view name);
    static std::optional<IonSpecies> try_preset(std::string_view name);
};

struct PseudoParams {
    double lambda_m = 0.0;     // characteristic distance of the RF field curvature
    double alpha_depth = 0.0;  // geometric depth efficiency relative to a hyperbolic trap

    void validate() const;
};

struct TrapGeometry {
    double rf_rail_width_m = 0.0;
    double rf_separation_m = 0.0;
    double ion_height_above_rf_m = 0.0;
    double ion_height_above_control_m = 0.0;
    double isthmus_half_width_m = 0.0;

    void validate() const;
};

struct TrapDescription {
    std::string name;
    LayerStack layer_stack;
    RFElectrodeModel rf_model;
    TrapGeometry geometry;
    PseudoParams pseudo;
    IonSpecies species;

    void validate() const;
};

bool operator==(const Layer&, const Layer&);
bool operator==(const LayerStack&, const LayerStack&);
bool operator==(const RFElectrodeModel&, const RFElectrodeModel&);
bool operator==(const IonSpecies&, const IonSpecies&);
bool operator==(const PseudoParams&, const PseudoParams&);
bool operator==(const TrapGeometry&, const TrapGeometry&);
bool operator==(const TrapDescription&, const TrapDescription&);

// Load and fully validate a trap config file.
TrapDescription load_trap_description(const std::filesystem::path& path);
TrapDescription parse_trap_description(const std::string& json_text);

// Serialize back to the config schema (same units as the file format).
std::string serialize_trap_description(const TrapDescription& trap);

struct PlateLayer {
    double thickness_m = 0.0;
    double rel_permittivity = 1.0;
};

// Fringe-free series stack of parallel-plate capacitances; a sanity
// estimator only, expected to deviate up to ~30% from field-solved values.
double plate_capacitance_estimate(double area_m2, double gap_m,
                                  const std::vector<PlateLayer>& stack_fill);

}  // namespace iontrap
