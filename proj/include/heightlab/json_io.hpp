#pragma once

#include <string>

#include <json.hpp>

#include "heightlab/height.hpp"
#include "heightlab/paperlab.hpp"
#include "heightlab/roots.hpp"

namespace heightlab {

inline constexpr const char* kSchemaTag = "heightlab/1";

// Doubles as hex-float strings for bit-exact replay.
std::string hex_double(double x);
double parse_hex_double(const std::string& s);

nlohmann::ordered_json rootbag_json(const RootBag& bag);
RootBag rootbag_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json height_report_json(const HeightReport& report);
nlohmann::ordered_json transcript_json(const Transcript& tr);

std::string render_transcript_text(const Transcript& tr);

}  // namespace heightlab
