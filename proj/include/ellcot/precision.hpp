/*
  ellcot — elliptic generalized cotangent Dirichlet series and
  elliptic Dedekind-Rademacher sums, with a numerical verification CLI

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/
#ifndef ELLCOT_PRECISION_HPP
#define ELLCOT_PRECISION_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <complex>

namespace ellcot {

// Complex scalar types of the two global precision modes.  "Extended" is a
// 113-bit binary significand, well above the 100-bit floor the toolkit
// guarantees.
using CDouble = std::complex<double>;
using CQuad = boost::multiprecision::cpp_complex_quad;
using RQuad = CQuad::value_type;

template <class C>
using real_t = typename C::value_type;

enum class PrecisionMode { Double, Extended };

/// Global numeric mode.  Selected once at startup (before any cached table is
/// built) so that every table is consistent with the mode; defaults to Double.
PrecisionMode precision_mode() noexcept;
void set_precision_mode(PrecisionMode mode) noexcept;

/// Absolute tolerance used by every integrality test (the characteristic
/// function chi and the "not in Z^2" preconditions).
double integrality_tolerance() noexcept;
void set_integrality_tolerance(double tol) noexcept;

template <class R>
inline R pi_const() {
    using std::acos;
    static const R val = acos(R(-1));
    return val;
}

inline double to_double(double x) { return x; }
inline double to_double(long double x) { return static_cast<double>(x); }
inline double to_double(const RQuad& x) { return static_cast<double>(x); }

inline CDouble to_cdouble(const CDouble& z) { return z; }
inline CDouble to_cdouble(const CQuad& z) {
    return CDouble(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

// The internal "wide" real used for angle reduction n*alpha mod 1.  In double
// mode the 64-bit significand of long double keeps |n| <= 1e6 reductions well
// below the small-denominator floor 1/(C|n|).
template <class R>
struct wide_real {
    using type = R;
};
template <>
struct wide_real<double> {
    using type = long double;
};
template <class R>
using wide_real_t = typename wide_real<R>::type;

inline long double to_wide(double x) { return x; }
inline const RQuad& to_wide(const RQuad& x) { return x; }

template <class R>
inline R from_wide(const wide_real_t<R>& w) {
    return static_cast<R>(w);
}
template <>
inline double from_wide<double>(const long double& w) {
    return static_cast<double>(w);
}

} // namespace ellcot

#endif
