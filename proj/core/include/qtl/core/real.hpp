#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "qtl/core/rational.hpp"

namespace qtl {

// Extended precision for oracle comparisons whose remainders sit far below double resolution.
using Real = boost::multiprecision::cpp_bin_float_50;

inline Real to_real(const Integer& z) { return Real(z.get_str()); }
inline Real to_real(const Rational& r) { return to_real(Integer(r.get_num())) / to_real(Integer(r.get_den())); }

}  // namespace qtl
