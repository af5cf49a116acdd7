// rational.hpp - exact rational coefficients.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace jacal {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Canonical text form: "n" for integers, "n/d" otherwise, with the sign on the numerator.
inline std::string rat_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace jacal
