#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cableord/complex.hpp"
#include "cableord/curve.hpp"
#include "cableord/validation.hpp"

namespace cableord {

/// {"ring", "generators": [{"id","gr_u","gr_v"}], "differential": [{"from","to","u","v"}]}
std::string complex_to_json(const BigradedComplex& c);
/// Throws ParseError for malformed JSON, InvalidInput for bad content.
BigradedComplex complex_from_json(std::string_view text);

/// {"components": [{"kind", "crossings", "first_side"}]}; labels are written
/// as an optional "labels" array.
std::string curve_to_json(const PegCurve& pc);
PegCurve curve_from_json(std::string_view text);

std::string report_to_json(const ValidationReport& r);

/// True when the document looks like a curve file rather than a complex file.
bool is_curve_document(std::string_view text);

/// Throws IoError.
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

BigradedComplex load_complex(const std::filesystem::path& path);
PegCurve load_curve(const std::filesystem::path& path);

}  // namespace cableord
