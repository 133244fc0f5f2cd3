#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace invosc::csv {

/// 15 significant digits, shortest of fixed/exponent notation ("%.15g").
std::string format_number(double value);

/// "a=1;b=2" from name/value pairs.
std::string render_params(std::initializer_list<std::pair<std::string_view, double>> items);

/// Replaces characters that would break an unquoted CSV field.
std::string sanitize_field(std::string_view text);

}  // namespace invosc::csv
