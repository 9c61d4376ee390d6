#pragma once

#include <string>
#include <string_view>

namespace iontrap::units {

// Parse "50MHz", "206kHz", "2e6" (bare = Hz). Case-insensitive suffix.
double parse_frequency_hz(std::string_view text);

// Parse "300V" or "300" (volts, zero-to-peak).
double parse_voltage_v(std::string_view text);

// Parse "5um", "532nm", "0.825mm", "1e-6" (bare = meters).
double parse_length_m(std::string_view text);

// Parse "5.1pF", "311pF", "2.3e-12" (bare = farads).
double parse_capacitance_f(std::string_view text);

// Parse "0.25" or "0.25ohm" (ohms).
double parse_resistance_ohm(std::string_view text);

}  // namespace iontrap::units
