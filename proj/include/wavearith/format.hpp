#pragma once

#include <string>

namespace wavearith {

/// 12 significant digits, shortest of fixed/scientific, '.' as the decimal
/// point regardless of locale. Infinities print as inf / -inf.
std::string format_number(double value);

} // namespace wavearith
