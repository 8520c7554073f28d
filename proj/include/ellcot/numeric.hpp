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
#ifndef ELLCOT_NUMERIC_HPP
#define ELLCOT_NUMERIC_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include "ellcot/errors.hpp"
#include "ellcot/precision.hpp"

namespace ellcot {

/// Summation budgets shared by all series evaluators.
struct TruncationPolicy {
    long max_index = 400;     // lattice / series cutoff N
    double tail_tol = 1e-12;  // requested absolute tail bound
    long theta_terms = 64;    // minimum half-width of the theta sum

    void validate() const {
        if (max_index < 1) throw domain_error("TruncationPolicy: max_index must be >= 1");
        if (!(tail_tol > 0)) throw domain_error("TruncationPolicy: tail_tol must be > 0");
        if (theta_terms < 1) throw domain_error("TruncationPolicy: theta_terms must be >= 1");
    }
};

template <class C>
struct SeriesResult {
    C value{};
    double est_tail = 0.0; // estimated absolute truncation error
    long terms_used = 0;
};

namespace detail {
template <class R>
inline void require_finite(const R& x, const char* who) {
    using std::isfinite;
    if (!isfinite(to_double(x))) throw range_error(std::string(who) + ": non-finite value");
}
} // namespace detail

/// e(z) = exp(2 pi i z).  |result| = exp(-2 pi Im z); signals range error when
/// that magnitude is not representable.
template <class C>
C exp2pii(const C& z) {
    using R = real_t<C>;
    using std::exp;
    const R two_pi = 2 * pi_const<R>();
    const double mag_exp = -to_double(two_pi) * to_double(z.imag());
    if (mag_exp > 700.0) throw range_error("exp2pii: overflow, Im z too negative");
    C w = exp(C(0, 1) * two_pi * z);
    detail::require_finite(w.real(), "exp2pii");
    detail::require_finite(w.imag(), "exp2pii");
    return w;
}

/// e(x) for real x: cos(2 pi x) + i sin(2 pi x), with argument reduction.
template <class C>
C exp2pii_real(const real_t<C>& x) {
    using R = real_t<C>;
    using std::cos;
    using std::floor;
    using std::sin;
    R f = x - floor(x);
    R a = 2 * pi_const<R>() * f;
    return C(cos(a), sin(a));
}

template <class R>
struct AngleSplit {
    long long nearest; // [[x]]
    R frac;            // <<x>>, in (-1/2, 1/2]
};

/// x = [[x]] + <<x>> with -1/2 < <<x>> <= 1/2.
template <class R>
AngleSplit<R> angle_split(const R& x) {
    using std::floor;
    detail::require_finite(x, "angle_split");
    if (!(x > R(-9e17) && x < R(9e17)))
        throw capacity_error("angle_split: |x| too large for integer part");
    R n = floor(x + R(1) / 2);
    R f = x - n;
    if (!(f > R(-1) / 2)) { // exactly -1/2 after rounding
        n -= 1;
        f += 1;
    }
    return {static_cast<long long>(to_double(n)), f};
}

/// Characteristic function of the integers, decided with the global tolerance.
template <class R>
int chi_int(const R& x) {
    using std::fabs;
    using std::floor;
    R f = x - floor(x + R(1) / 2);
    return to_double(fabs(f)) <= integrality_tolerance() ? 1 : 0;
}

template <class R>
struct FracParts {
    R angle;    // <x>, in (0, 1]
    R frac;     // {x}, in [0, 1)
    int is_int; // chi(x)
};

/// (<x>, {x}, chi(x)); integer inputs snap to <x> = 1, {x} = 0.
template <class R>
FracParts<R> frac_parts(const R& x) {
    using std::floor;
    detail::require_finite(x, "frac_parts");
    if (chi_int(x)) return {R(1), R(0), 1};
    R f = x - floor(x);
    if (f <= R(0)) f += 1; // rounding below an integer it was not snapped to
    if (f >= R(1)) f -= 1;
    return {f, f, 0};
}

namespace detail {
// B_2, B_4, ..., B_30 as exact integer fractions (Euler-Maclaurin weights).
inline constexpr long long kEvenBernoulliNum[] = {
    1, -1, 1, -1, 5, -691, 7, -3617, 43867, -174611, 854513, -236364091, 8553103,
    -23749461029LL, 8615841276005LL};
inline constexpr long long kEvenBernoulliDen[] = {
    6, 30, 42, 30, 66, 2730, 6, 510, 798, 330, 138, 2730, 6, 870, 14322};
} // namespace detail

/// zeta(s) for integer s >= 2 by Euler-Maclaurin summation.
template <class R>
R riemann_zeta(int s) {
    using std::pow;
    if (s < 2) throw domain_error("riemann_zeta: s must be >= 2");
    const int N = 48;
    R sum(0);
    for (int n = N - 1; n >= 1; --n) sum += pow(R(n), -s);
    sum += pow(R(N), 1 - s) / R(s - 1) + pow(R(N), -s) / 2;
    R rising = R(s);                // s(s+1)...(s+2k-2), updated per k
    R fact(2);                      // (2k)!
    R npow = pow(R(N), -s - 1);     // N^{-s-2k+1}
    for (int k = 1; k <= 15; ++k) {
        R b2k = R(detail::kEvenBernoulliNum[k - 1]) / R(detail::kEvenBernoulliDen[k - 1]);
        sum += b2k * rising / fact * npow;
        rising *= R(s + 2 * k - 1) * R(s + 2 * k);
        fact *= R(2 * k + 1) * R(2 * k + 2);
        npow /= R(N) * R(N);
    }
    return sum;
}

} // namespace ellcot

#endif
