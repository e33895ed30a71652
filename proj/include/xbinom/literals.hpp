#pragma once

#include "xbinom/exact_lattice.hpp"
#include "xbinom/gamma_engine.hpp"

#include <string>
#include <string_view>

namespace xbinom {

// Parses a decimal real or complex literal: "3", "-2.5", "1e-3", "1+2i",
// "0.5-0.25i", "2i", "-i". Throws ParseError on anything else.
Complex parse_complex(std::string_view text);

// Parses a signed decimal integer. Throws ParseError.
std::int64_t parse_integer(std::string_view text);

// 15 significant digits; "a", "bi", "a+bi" or "a-bi".
std::string format_complex(Complex v);
std::string format_real(double v);

// Finite values via format_complex; the tags as the reserved tokens "inf"
// and "indeterminate".
std::string format_value(const ExtendedValue& v);
inline constexpr std::string_view kInfToken = "inf";
inline constexpr std::string_view kIndeterminateToken = "indeterminate";

}  // namespace xbinom
