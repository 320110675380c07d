#pragma once

#include <json.hpp>

#include "optb/classify.hpp"
#include "optb/matrices.hpp"
#include "optb/torsion.hpp"

namespace optb {

/// [[a, b], [c, d]]
nlohmann::json matrix_to_json(const Mat2& m);

/// Parses [[a, b], [c, d]] with integer entries and |det| = 1; throws
/// std::invalid_argument otherwise.
Mat2 matrix_from_json(const nlohmann::json& j);

nlohmann::json normal_form_to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const nlohmann::json& j);

/// {"matrix": ..., "normal_form": {"n": ..., "p": ...}, "g": "<word>",
///  "terms": [{"w": "<word>", "N": int}, ...]}
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json tunnel_verdict_to_json(const TunnelVerdict& v);

}  // namespace optb
