#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>

namespace hexlab {

using Integer = boost::multiprecision::cpp_int;

// ~100 significant digits: continued fractions, surd values, Schmidt gaps.
using BigReal = boost::multiprecision::cpp_bin_float_100;

// Deep radial scans need about t/ln(10) digits to resolve points at
// hyperbolic depth t; 300 digits covers t up to ~600.
using DeepReal = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<300>>;

using Complex = std::complex<double>;

inline std::int64_t to_i64(const Integer& x) { return x.convert_to<std::int64_t>(); }

// Floor division for arbitrary-size integers (cpp_int '/' truncates).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer mod_floor(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

inline int mod6(const Integer& x) {
  int r = static_cast<int>(x % 6);
  return r < 0 ? r + 6 : r;
}

inline int mod6(long long x) {
  int r = static_cast<int>(x % 6);
  return r < 0 ? r + 6 : r;
}

}  // namespace hexlab
