#include "invosc/csv.hpp"

#include <cstdio>

namespace invosc::csv {

std::string format_number(double value)
{
    if (value == 0.0) value = 0.0;  // no "-0"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", value);
    return buf;
}

std::string render_params(std::initializer_list<std::pair<std::string_view, double>> items)
{
    std::string out;
    for (const auto& [name, value] : items) {
        if (!out.empty()) out += ';';
        out += name;
        out += '=';
        out += format_number(value);
    }
    return out;
}

std::string sanitize_field(std::string_view text)
{
    std::string out(text);
    for (char& c : out) {
        if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
    }
    return out;
}

}  // namespace invosc::csv
