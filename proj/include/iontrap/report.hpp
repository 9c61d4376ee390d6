#pragma once

// Deterministic CSV/JSON/SVG emission helpers shared by the CLI.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace iontrap {

// Frequency grid for sweeps; points >= 1, start < stop when points > 1.
std::vector<double> make_sweep(double start_hz, double stop_hz, int points,
                               bool log_spacing);

// Shortest decimal representation that round-trips the double.
std::string format_double(double value);

// CSV with a header row; no trailing comma, "\n" line endings.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows);

// FNV-1a 64-bit, printed as 16 hex digits.
std::uint64_t fnv1a64(const void* data, std::size_t size);
std::string fnv1a64_hex(const std::string& bytes);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

struct SvgSeries {
    std::vector<double> x;
    std::vector<double> y;
};

struct SvgLine {
    // y = exp(intercept) * x^slope, drawn across the data range
    double intercept = 0.0;
    double slope = 0.0;
    std::string legend;
};

// Minimal log-log scatter plot with decade grid lines and an optional
// fitted power-law line. Deterministic output, no timestamps.
std::string svg_loglog_plot(const SvgSeries& points, const SvgLine* fit,
                            const std::string& x_label,
                            const std::string& y_label);

}  // namespace iontrap
