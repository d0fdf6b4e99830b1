#pragma once

// JSON encodings. Lattice points are integer arrays; rationals are "p/q"
// strings so no precision is lost. Plain JSON integers are accepted on input.

#include <json.hpp>

#include "centerpole/certifier.hpp"
#include "centerpole/colorings.hpp"
#include "centerpole/covering.hpp"
#include "centerpole/cube.hpp"
#include "centerpole/tshape.hpp"

namespace centerpole {

using Json = nlohmann::ordered_json;

Json to_json(const LatticePoint& p);
Json to_json(const Rational& q);
Json to_json(const RationalPoint& p);
Json to_json(const Hyperplane& h);
Json to_json(const std::vector<LatticePoint>& points);
Json to_json(const std::vector<RationalPoint>& points);

/// Throws std::invalid_argument on malformed input.
LatticePoint lattice_point_from_json(const Json& j);
Rational rational_from_json(const Json& j);
RationalPoint rational_point_from_json(const Json& j);
std::vector<LatticePoint> lattice_points_from_json(const Json& j);
std::vector<RationalPoint> rational_points_from_json(const Json& j);

Json to_json(const CoverReport& report);
Json to_json(const TShapeCertificate& cert);
Json to_json(const TShapeVerdict& verdict);
Json to_json(const TValueReport& report);
Json to_json(const ScanReport& report);
/// Runtime is left out; callers put timing in a separate metadata block.
Json to_json(const WindowVerdict& verdict, bool include_witness = false);
Json to_json(const ScheduleRow& row, bool include_witness = false);

}  // namespace centerpole
