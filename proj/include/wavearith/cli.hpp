#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wavearith/kernels.hpp"

namespace wavearith::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

/// `standard`, `alpha:<v>`, `alphabeta:<v>,<v>` or `file:<path>` (kernel JSON).
FourierKernel parse_kernel_spec(const std::string& spec);

/// Parses argv-style arguments (without the program name), runs the verb
/// and writes the result to `out`. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wavearith::cli
