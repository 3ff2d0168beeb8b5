#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gausseer {

using DocId = std::uint64_t;

struct AtomSite {
  std::string element;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const AtomSite&, const AtomSite&) = default;
};

/// Presence flag names and the log line that sets each one.
struct FlagTrigger {
  std::string_view flag;
  std::string_view trigger;
};

inline constexpr std::array<FlagTrigger, 11> kFlagTriggers{{
    {"distance_matrix", "Distance matrix (angstroms):"},
    {"input_orientation", "Input orientation:"},
    {"mulliken_charges", "Mulliken atomic charges:"},
    {"optimized_parameters", "-- Stationary point found."},
    {"frequencies", "Frequencies --"},
    {"thermochemistry", "- Thermochemistry -"},
    {"thermal_energy", "Sum of electronic and thermal Energies="},
    {"shielding_tensors", "Magnetic shielding tensor (ppm):"},
    {"reaction_path", "IRC-IRC-IRC"},
    {"pcm", "Polarizable Continuum Model (PCM)"},
    {"variational_results", "Variational Results"},
}};

/// Names that can appear in GaussianRecord::missing.
namespace attr {
inline constexpr std::string_view kCharge = "charge";
inline constexpr std::string_view kMultiplicity = "multiplicity";
inline constexpr std::string_view kEnergy = "energy";
inline constexpr std::string_view kDegreesOfFreedom = "degrees_of_freedom";
inline constexpr std::string_view kInputOrientation = "input_orientation";
}  // namespace attr

/// Metadata extracted from one Gaussian output file.
struct GaussianRecord {
  DocId id = 0;
  std::string title;
  std::string file_path;
  std::set<std::string> elements;
  std::vector<AtomSite> atom_sites;
  std::set<std::string> methods;
  std::set<std::string> basis_sets;
  std::set<std::string> job_types;
  std::optional<int> charge;
  std::optional<int> multiplicity;
  std::optional<double> energy;
  std::optional<int> degrees_of_freedom;
  std::set<std::string> flags;
  std::set<std::string> missing;

  friend bool operator==(const GaussianRecord&, const GaussianRecord&) = default;
};

/// Canonical JSON form: keys in fixed order, sets sorted, absent scalars null.
nlohmann::ordered_json to_json(const GaussianRecord& record);
GaussianRecord record_from_json(const nlohmann::ordered_json& j);

/// `to_json(record).dump(2)` plus a trailing newline; used for golden files.
std::string canonical_serialization(const GaussianRecord& record);

}  // namespace gausseer
