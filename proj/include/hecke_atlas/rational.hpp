#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace hecke_atlas {

using Rational = boost::rational<std::int64_t>;

/// "p/q" with q > 0; integers print as "p/1".
std::string to_fraction_string(const Rational& r);

/// Accepts "p/q" or "p". Throws InputError on anything else.
Rational parse_fraction(const std::string& text);

/// Exact square root when numerator and denominator are perfect squares.
bool exact_sqrt(const Rational& r, Rational& root);

}  // namespace hecke_atlas
