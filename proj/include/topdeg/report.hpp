#pragma once

#include <string>

#include "topdeg/degree.hpp"

namespace topdeg {

// Stable JSON rendering: fixed key order, keys absent when the field is.
// Same report -> byte-identical string.
std::string report_to_json(const Report& r);
Report report_from_json(const std::string& text);
bool report_equal(const Report& a, const Report& b); // serialized fields only

std::string report_to_text(const Report& r);

} // namespace topdeg
