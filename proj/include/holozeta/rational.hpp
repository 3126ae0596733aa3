#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace holozeta {

using Rational = mpq_class;

// Parses "p" or "p/q" with an optional sign; the result is canonical.
Rational parse_rational(std::string_view text);

std::string to_string(Rational const& q);

}  // namespace holozeta
