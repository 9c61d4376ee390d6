#pragma once

// Electric-field noise budget at the ion: technical noise shaped by a
// low-pass filter, Johnson noise of the electrode leads, and anomalous
// surface noise with a power-law spectrum. PSD -> heating rate
// conversion and log-log power-law fitting of heating datasets.

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "iontrap/trap_model.hpp"

namespace iontrap {

enum class FilterKind { chebyshev1, cascaded_rc };

struct FilterSpec {
    FilterKind kind = FilterKind::cascaded_rc;
    int order = 1;
    double f_3db_hz = 0.0;
    double ripple_db = 0.5;  // chebyshev1 only

    void validate() const;
};

// |H(f)|^2. cascaded_rc: product of identical buffered first-order
// sections with the per-stage corner placed so the cascade is -3 dB at
// f_3db. chebyshev1: 1 / (1 + eps^2 T_n^2(f/f_c)) with f_c placed so the
// -3 dB point lands at f_3db.
double filter_gain_sq(const FilterSpec& filter, double frequency_hz);

struct JohnsonElectrode {
    double resistance_ohm = 0.0;
    double epsilon_per_m = 0.0;  // field at the ion per volt on this electrode
};

// White voltage noise at the source, colored only by the filter.
struct TechnicalNoise {
    double white_voltage_psd_v2_hz = 0.0;
    FilterSpec filter;
    double coupling_sum_eps_sq_m2 = 0.0;  // sum over electrodes of eps^2
};

// Thermal noise of the electrode leads, S_V = 4 kB T R per electrode.
struct JohnsonNoise {
    std::vector<JohnsonElectrode> electrodes;
    double temperature_k = 0.0;
};

// Surface-fluctuator noise, A (f/f_ref)^(-exponent) in V^2/m^2/Hz.
struct AnomalousNoise {
    double amplitude_v2_m2_hz = 0.0;
    double reference_frequency_hz = 0.0;
    double exponent = 0.0;
};

struct NoiseSourceSpec {
    std::string label;
    std::variant<TechnicalNoise, JohnsonNoise, AnomalousNoise> source;

    void validate() const;
    std::string kind_name() const;
};

// Field-noise PSD of a single source at the ion, V^2/m^2/Hz.
double source_field_psd(const NoiseSourceSpec& source, double frequency_hz);

// Incoherent sum over sources.
double field_noise_psd(std::span<const NoiseSourceSpec> sources,
                       double frequency_hz);

// ndot = q^2 / (4 m hbar omega) * S_E(omega), omega = 2 pi f_secular.
double heating_rate(const IonSpecies& species, double secular_hz, double psd);

struct HeatingPoint {
    double frequency_hz = 0.0;
    double rate_qps = 0.0;   // quanta per second
    double sigma_qps = 0.0;  // 0 = not provided
};

struct HeatingDataset {
    std::vector<HeatingPoint> points;
    bool has_sigma = false;

    void validate() const;
};

// CSV with header: frequency_hz, rate_quanta_per_s[, sigma].
HeatingDataset load_heating_csv(const std::filesystem::path& path);
HeatingDataset parse_heating_csv(const std::string& text);

struct PowerLawFit {
    double exponent = 0.0;
    double exponent_stderr = 0.0;
    double log_amplitude = 0.0;  // ln(rate) extrapolated to f = 1 Hz
    std::array<std::array<double, 2>, 2> covariance{};  // [intercept, slope]

    void validate() const;
};

// Weighted least squares of ln(rate) vs ln(frequency). Weights from the
// per-point sigmas when all are present, unit weights otherwise; the
// covariance is scaled by the reduced chi-square (residual variance in
// the unweighted case).
PowerLawFit fit_power_law(const HeatingDataset& data);

struct BudgetReport {
    std::vector<std::string> source_labels;
    std::vector<double> frequencies_hz;
    std::vector<std::vector<double>> rates_qps;  // [frequency][source]
    std::vector<double> total_qps;               // per frequency
};

BudgetReport budget_report(const IonSpecies& species,
                           std::span<const double> secular_hz,
                           std::span<const NoiseSourceSpec> sources);

struct NoiseConfig {
    IonSpecies species;
    std::vector<NoiseSourceSpec> sources;
};

NoiseConfig load_noise_config(const std::filesystem::path& path);
NoiseConfig parse_noise_config(const std::string& json_text);

}  // namespace iontrap
