#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace stirlab {

// All counting is done in exact arbitrary-precision integers. Rationals
// appear only inside closed-form evaluation, where prefactors like 1/16
// must cancel exactly before the result is accepted.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const Int& v) { return v.str(); }

// Nonnegative residue of v mod m, valid for negative v as well.
inline std::uint64_t residue(const Int& v, std::uint64_t m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r.convert_to<std::uint64_t>();
}

}  // namespace stirlab
