#pragma once

#include "cdlat/cd.hpp"
#include "cdlat/constructions.hpp"
#include "cdlat/report.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace cdlat {

// A presentation file: the bit-exact core object plus the optional metadata
// blocks this tool writes ("recipe" for the named constructions,
// "certificates" for extension towers).  Loading and re-serializing one of
// our files reproduces it byte for byte.
struct PresentationFile {
    PcPresentationPtr pres;
    std::optional<ConstructionRecipe> recipe;
    std::optional<nlohmann::ordered_json> certificates;
};

nlohmann::ordered_json presentation_to_json(
    const PcPresentation& p, const std::optional<ConstructionRecipe>& recipe = std::nullopt,
    const std::optional<nlohmann::ordered_json>& certificates = std::nullopt);

PresentationFile presentation_from_json(const nlohmann::json& j);

std::string to_file_string(const nlohmann::ordered_json& j);
PresentationFile load_presentation_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// { "m", "members": [{"order","generators","is_center","is_group"}],
//   "hasse": [[i,j]], "chain_length": int|null }
nlohmann::ordered_json lattice_to_json(const CdLattice& l);

// Hasse diagram; one node per subgroup labeled p^k with its generators.
std::string lattice_to_dot(const CdLattice& l);

nlohmann::ordered_json report_to_json(const VerificationReport& r);

// "certificates" block of an extension tower: generator words for the
// distinguished subgroups.
nlohmann::ordered_json certificates_json(const struct ExtensionData& x);

} // namespace cdlat
