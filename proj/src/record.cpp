#include "gausseer/record.hpp"

namespace gausseer {

namespace {

template <typename T>
nlohmann::ordered_json optional_value(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <typename T>
std::optional<T> read_optional(const nlohmann::ordered_json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::set<std::string> read_set(const nlohmann::ordered_json& j, const char* key) {
  std::set<std::string> out;
  if (j.contains(key)) {
    for (const auto& v : j.at(key)) out.insert(v.get<std::string>());
  }
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const GaussianRecord& r) {
  nlohmann::ordered_json sites = nlohmann::ordered_json::array();
  for (const auto& s : r.atom_sites) {
    sites.push_back({{"element", s.element}, {"x", s.x}, {"y", s.y}, {"z", s.z}});
  }
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["file_path"] = r.file_path;
  j["elements"] = r.elements;
  j["atom_sites"] = std::move(sites);
  j["methods"] = r.methods;
  j["basis_sets"] = r.basis_sets;
  j["job_types"] = r.job_types;
  j["charge"] = optional_value(r.charge);
  j["multiplicity"] = optional_value(r.multiplicity);
  j["energy"] = optional_value(r.energy);
  j["degrees_of_freedom"] = optional_value(r.degrees_of_freedom);
  j["flags"] = r.flags;
  j["missing"] = r.missing;
  return j;
}

GaussianRecord record_from_json(const nlohmann::ordered_json& j) {
  GaussianRecord r;
  r.id = j.value("id", DocId{0});
  r.title = j.value("title", std::string{});
  r.file_path = j.value("file_path", std::string{});
  r.elements = read_set(j, "elements");
  if (j.contains("atom_sites")) {
    for (const auto& s : j.at("atom_sites")) {
      r.atom_sites.push_back({s.at("element").get<std::string>(), s.at("x").get<double>(),
                              s.at("y").get<double>(), s.at("z").get<double>()});
    }
  }
  r.methods = read_set(j, "methods");
  r.basis_sets = read_set(j, "basis_sets");
  r.job_types = read_set(j, "job_types");
  r.charge = read_optional<int>(j, "charge");
  r.multiplicity = read_optional<int>(j, "multiplicity");
  r.energy = read_optional<double>(j, "energy");
  r.degrees_of_freedom = read_optional<int>(j, "degrees_of_freedom");
  r.flags = read_set(j, "flags");
  r.missing = read_set(j, "missing");
  return r;
}

std::string canonical_serialization(const GaussianRecord& record) {
  return to_json(record).dump(2) + "\n";
}

}  // namespace gausseer
