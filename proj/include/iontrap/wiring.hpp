#pragma once

// Control-electrode co-wiring maps: signal counting against an
// electrical I/O budget and detection of groups shared between trap
// regions that would be driven simultaneously.

#include <filesystem>
#include <string>
#include <vector>

namespace iontrap {

struct Electrode {
    std::string id;
    std::string region;
};

struct SignalGroup {
    std::string signal;
    std::vector<std::string> members;  // electrode ids
};

struct WiringMap {
    std::vector<Electrode> electrodes;
    std::vector<SignalGroup> groups;
    int io_budget = 0;

    void validate() const;  // every electrode in exactly one group, unique signal ids
};

WiringMap load_wiring_map(const std::filesystem::path& path);
WiringMap parse_wiring_map(const std::string& json_text);
std::string serialize_wiring_map(const WiringMap& map);

int signal_count(const WiringMap& map);

struct BudgetCheck {
    bool pass = false;
    int margin = 0;  // io_budget - signal_count (negative on fail)
};

BudgetCheck check_budget(const WiringMap& map);

struct GroupConflict {
    std::string signal;
    std::vector<std::string> regions;  // distinct active regions touched
};

// Groups whose members span two or more of the active regions.
// Unknown active region tags are an error.
std::vector<GroupConflict> conflict_regions(
    const WiringMap& map, const std::vector<std::string>& active_regions);

}  // namespace iontrap
