#include "wavearith/format.hpp"

#include <charconv>
#include <cmath>

namespace wavearith {

std::string format_number(double value)
{
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    if (value == 0.0) {
        return "0";  // folds -0
    }
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

} // namespace wavearith
