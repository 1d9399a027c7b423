#pragma once

#include "varistar/cseries.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace varistar {

/// Parses `a`, `a+bi` or `a-bi` (decimal reals, optional exponent, no spaces).
std::optional<cplx> parse_complex(std::string_view text);

/// `a+bi` with 12 significant digits; round-trips through parse_complex.
std::string format_complex(cplx z);
std::string format_real(double x);

/// Entry point of the `varistar` executable. args[0] is the program name.
/// Returns 0 on success, 1 when a verification fails, 2 on usage or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace varistar
