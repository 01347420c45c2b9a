#pragma once

#include "hc/group_law.hpp"
#include "hc/symmetrize.hpp"

#include <json.hpp>

#include <string>

namespace hc {

using Json = nlohmann::ordered_json;

/// Keys c300 … c111 with series literals.  Missing keys and bad literals throw std::invalid_argument naming them.
Json cubic_to_json(const TernaryCubic& f);
TernaryCubic cubic_from_json(const Json& j);

/// Keys q, a, b, c, p1 … p9.
Json params_to_json(const ThetaParams& P);
ThetaParams params_from_json(const Json& j);

Json curve_to_json(const TropicalCubicCurve& c);
TropicalCubicCurve curve_from_json(const Json& j);

Json matrix_to_json(const Mat3& m);
Mat3 matrix_from_json(const Json& j);

/// Cells, f-vector and the torus net.  Reading back yields a complex without location data.
Json complex_to_json(const TGLComplex& C);
TGLComplex complex_from_json(const Json& j);

Json read_json_file(const std::string& path);

} // namespace hc
