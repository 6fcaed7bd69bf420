#pragma once

#include <boost/rational.hpp>

#include <string>

namespace varfn {

// Exact rational arithmetic for numeric letters. Equality of numeric
// letters is exact by construction; never route these through floating
// point.
using Rational = boost::rational<long long>;

// Accepts "3", "-3", "1/2", "-7/4". Throws ConfigError on anything else.
Rational parse_rational(const std::string& text);

// "n" when the denominator is 1, otherwise "n/d" in lowest terms.
std::string rational_to_string(const Rational& r);

}  // namespace varfn
