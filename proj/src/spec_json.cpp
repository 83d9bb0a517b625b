#include "spheremap/spec_json.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace spheremap {

namespace {

using nlohmann::ordered_json;

double require_number(const ordered_json& j, const char* type, const char* field) {
  if (!j.contains(field)) {
    throw SpecParseError(std::string(type) + ": missing field \"" + field + "\"");
  }
  if (!j.at(field).is_number()) {
    throw SpecParseError(std::string(type) + ": field \"" + field + "\" must be a number");
  }
  return j.at(field).get<double>();
}

std::string require_string(const ordered_json& j, const char* type, const char* field) {
  if (!j.contains(field)) {
    throw SpecParseError(std::string(type) + ": missing field \"" + field + "\"");
  }
  if (!j.at(field).is_string()) {
    throw SpecParseError(std::string(type) + ": field \"" + field + "\" must be a string");
  }
  return j.at(field).get<std::string>();
}

}  // namespace

ProjectionSpec parse_spec(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecParseError(std::string("spec is not well-formed JSON: ") + e.what());
  }
  if (!j.is_object()) throw SpecParseError("spec must be a JSON object");
  const std::string type = require_string(j, "spec", "type");

  if (type == "stereographic") {
    const std::string pole = require_string(j, "stereographic", "pole");
    if (pole == "north") return Stereographic{Pole::North};
    if (pole == "south") return Stereographic{Pole::South};
    throw SpecParseError("stereographic: field \"pole\" must be \"north\" or \"south\"");
  }

  if (type == "gnomonic") {
    const double lat = require_number(j, "gnomonic", "tangent_lat");
    const double lon = require_number(j, "gnomonic", "tangent_lon");
    if (std::abs(lat) > 90.0) {
      throw SpecParseError("gnomonic: field \"tangent_lat\" must lie in [-90, 90]");
    }
    return Gnomonic{GeoPoint::from_degrees(lat, lon)};
  }

  if (type == "cylindrical") {
    const std::string profile = require_string(j, "cylindrical", "profile");
    CylindricalProfile p;
    if (profile == "equirectangular") {
      p = CylindricalProfile::Equirectangular;
    } else if (profile == "conformal") {
      p = CylindricalProfile::Conformal;
    } else if (profile == "equal_area") {
      p = CylindricalProfile::EqualArea;
    } else {
      throw SpecParseError(
          "cylindrical: field \"profile\" must be \"equirectangular\", \"conformal\" or "
          "\"equal_area\"");
    }
    double ref_lat = 0.0;
    if (j.contains("ref_lat")) ref_lat = require_number(j, "cylindrical", "ref_lat");
    if (!(std::abs(ref_lat) < 90.0)) {
      throw SpecParseError("cylindrical: field \"ref_lat\" must lie in (-90, 90)");
    }
    return Cylindrical(p, deg_to_rad(ref_lat));
  }

  if (type == "delisle") {
    const double phi1 = require_number(j, "delisle", "phi1");
    const double phi2 = require_number(j, "delisle", "phi2");
    if (!(phi1 < phi2)) {
      throw SpecParseError("delisle: field \"phi1\" must be strictly less than \"phi2\"");
    }
    if (!(phi1 > 0.0) || !(phi2 < 90.0)) {
      throw SpecParseError("delisle: standard parallels must lie strictly inside (0, 90)");
    }
    return EquidistantConic{build_conic(deg_to_rad(phi1), deg_to_rad(phi2))};
  }

  throw SpecParseError("unknown projection type \"" + type +
                       "\"; expected stereographic, gnomonic, cylindrical or delisle");
}

ProjectionSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot read spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str());
}

std::string spec_to_json(const ProjectionSpec& spec) {
  ordered_json j;
  if (const auto* s = std::get_if<Stereographic>(&spec)) {
    j["type"] = "stereographic";
    j["pole"] = s->projection_pole == Pole::North ? "north" : "south";
  } else if (const auto* g = std::get_if<Gnomonic>(&spec)) {
    j["type"] = "gnomonic";
    j["tangent_lat"] = rad_to_deg(g->tangent_point.lat());
    j["tangent_lon"] = rad_to_deg(g->tangent_point.lon());
  } else if (const auto* c = std::get_if<Cylindrical>(&spec)) {
    j["type"] = "cylindrical";
    switch (c->profile) {
      case CylindricalProfile::Equirectangular:
        j["profile"] = "equirectangular";
        break;
      case CylindricalProfile::Conformal:
        j["profile"] = "conformal";
        break;
      case CylindricalProfile::EqualArea:
        j["profile"] = "equal_area";
        break;
    }
    j["ref_lat"] = rad_to_deg(c->ref_lat);
  } else {
    const auto& params = std::get<EquidistantConic>(spec).params;
    j["type"] = "delisle";
    j["phi1"] = rad_to_deg(params.phi1);
    j["phi2"] = rad_to_deg(params.phi2);
  }
  return j.dump();
}

}  // namespace spheremap
