#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hecke_atlas/centralizer.hpp"
#include "hecke_atlas/hecke.hpp"
#include "hecke_atlas/support.hpp"

namespace hecke_atlas::json_io {

using nlohmann::json;

/// Parses text; malformed JSON becomes InputError.
json parse(const std::string& text);
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);
/// Two-space indent plus trailing newline.
std::string dump(const json& j);

json to_json(const weil::InertialClass& c);
weil::InertialClass class_from_json(const json& j);
json to_json(const weil::Inventory& inv);
weil::Inventory inventory_from_json(const json& j);

json to_json(const UnitMonomial& f);
UnitMonomial monomial_from_json(const json& j);

json to_json(const weil::DualGroupDescriptor& g);
weil::DualGroupDescriptor ambient_from_json(const json& j);

json to_json(const params::LDParameter& phi);
params::LDParameter parameter_from_json(const weil::Inventory& inv, const json& j);

json to_json(const support::Orbit& o, const std::pair<int, int>& entry);
json supports_to_json(const params::LDParameter& phi0, const support::CuspidalPairs& pairs);

json to_json(const hecke::HeckeFactor& f);
json hecke_to_json(const params::LDParameter& phi0);
json table_to_json(hecke::Kind kind, int rank, const std::vector<hecke::TableRow>& rows);

json to_json(const centralizer::ClassicalGroup& g);
json to_json(const centralizer::Triple& t);

}  // namespace hecke_atlas::json_io
