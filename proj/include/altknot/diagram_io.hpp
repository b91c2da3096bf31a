#pragma once

#include <string>

#include "altknot/diagram.hpp"
#include "altknot/int_poly.hpp"

namespace altknot {

/// Canonical versioned JSON document:
/// {"version":1,"kind":"knot","vertex_count":V,"darts":[{"id":..,"vertex":..,
///  "twin":..,"dir":"out"}, ...],"rotation":[[d0,d1,d2,d3], ...]}
std::string diagram_to_json(const Diagram& d, int indent = -1);
/// Parses the JSON document. Throws std::invalid_argument on schema errors;
/// structural invariants are left to validate().
Diagram diagram_from_json(const std::string& text);

/// One node per vertex, one arc per edge (loops included).
std::string diagram_to_dot(const Diagram& d, const std::string& name = "diagram");

/// {"coeffs":["-2","-3","0","1"]}, ascending, decimal strings.
std::string poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const std::string& text);

}  // namespace altknot
