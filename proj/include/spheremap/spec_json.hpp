#pragma once

#include <string>

#include "spheremap/projections.hpp"

namespace spheremap {

/// Parse the canonical JSON encoding of a projection spec (angles in
/// degrees):
///
///   {"type":"stereographic","pole":"north"|"south"}
///   {"type":"gnomonic","tangent_lat":L,"tangent_lon":M}
///   {"type":"cylindrical","profile":"equirectangular"|"conformal"|"equal_area",
///    "ref_lat":L}                                    (ref_lat optional, 0)
///   {"type":"delisle","phi1":P1,"phi2":P2}
///
/// Throws SpecParseError naming the offending field and constraint.
ProjectionSpec parse_spec(const std::string& text);

/// Read and parse a spec file; file errors also surface as SpecParseError.
ProjectionSpec load_spec_file(const std::string& path);

/// Canonical encoding of a spec (inverse of parse_spec up to formatting).
std::string spec_to_json(const ProjectionSpec& spec);

}  // namespace spheremap
