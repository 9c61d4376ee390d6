#include "iontrap/units.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <initializer_list>
#include <utility>

#include "iontrap/errors.hpp"

namespace iontrap::units {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

struct Suffix {
    const char* text;
    double scale;
};

double parse_with_suffixes(std::string_view text, const char* what,
                           std::initializer_list<Suffix> suffixes) {
    std::string_view s = trim(text);
    if (s.empty()) throw ValidationError(std::string(what) + ": empty value");

    std::string low = lower(s);
    double scale = 1.0;
    // Longest suffix first so "mhz" is not matched as "hz".
    for (const auto& suf : suffixes) {
        std::string_view st(suf.text);
        if (low.size() >= st.size() &&
            std::string_view(low).substr(low.size() - st.size()) == st) {
            scale = suf.scale;
            s = s.substr(0, s.size() - st.size());
            break;
        }
    }

    s = trim(s);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ValidationError(std::string(what) + ": cannot parse \"" +
                              std::string(text) + "\"");
    }
    return value * scale;
}

}  // namespace

double parse_frequency_hz(std::string_view text) {
    return parse_with_suffixes(text, "frequency",
                               {{"ghz", 1e9}, {"mhz", 1e6}, {"khz", 1e3}, {"hz", 1.0}});
}

double parse_voltage_v(std::string_view text) {
    return parse_with_suffixes(text, "voltage", {{"kv", 1e3}, {"mv", 1e-3}, {"v", 1.0}});
}

double parse_length_m(std::string_view text) {
    return parse_with_suffixes(
        text, "length",
        {{"nm", 1e-9}, {"um", 1e-6}, {"µm", 1e-6}, {"mm", 1e-3}, {"cm", 1e-2}, {"m", 1.0}});
}

double parse_capacitance_f(std::string_view text) {
    return parse_with_suffixes(
        text, "capacitance",
        {{"ff", 1e-15}, {"pf", 1e-12}, {"nf", 1e-9}, {"uf", 1e-6}, {"f", 1.0}});
}

double parse_resistance_ohm(std::string_view text) {
    return parse_with_suffixes(
        text, "resistance",
        {{"kohm", 1e3}, {"mohm", 1e-3}, {"ohm", 1.0}});
}

}  // namespace iontrap::units
