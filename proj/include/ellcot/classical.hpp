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
#ifndef ELLCOT_CLASSICAL_HPP
#define ELLCOT_CLASSICAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <vector>

#include "ellcot/numeric.hpp"

namespace ellcot {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kBernoulliTableBound = 64;

namespace detail {
inline BigInt binomial_big(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline const std::vector<Rational>& bernoulli_table() {
    static const std::vector<Rational> table = [] {
        std::vector<Rational> B(kBernoulliTableBound + 1);
        B[0] = 1;
        B[1] = Rational(-1, 2);
        for (int i = 2; i <= kBernoulliTableBound; ++i) {
            Rational acc = 0;
            for (int k = 0; k < i; ++k) acc += Rational(binomial_big(i + 1, k)) * B[k];
            B[i] = -acc / (i + 1);
        }
        return B;
    }();
    return table;
}
} // namespace detail

/// Exact k-th Bernoulli number (B_1 = -1/2), k <= 64.
inline Rational bernoulli_number(int k) {
    if (k < 0) throw domain_error("bernoulli_number: k must be >= 0");
    if (k > kBernoulliTableBound) throw capacity_error("bernoulli_number: k beyond table bound 64");
    return detail::bernoulli_table()[k];
}

template <class R>
R to_real(const Rational& r) {
    return R(numerator(r)) / R(denominator(r));
}
template <>
inline double to_real<double>(const Rational& r) {
    return static_cast<double>(numerator(r)) / static_cast<double>(denominator(r));
}

/// Bernoulli polynomial B_m(x) = sum_k C(m,k) B_k x^{m-k}.
template <class R>
R bernoulli_poly(int m, const R& x) {
    if (m < 0) throw domain_error("bernoulli_poly: m must be >= 0");
    if (m > kBernoulliTableBound) throw capacity_error("bernoulli_poly: m beyond table bound 64");
    const auto& B = detail::bernoulli_table();
    // Horner over ascending powers of x: coefficient of x^j is C(m,m-j) B_{m-j}
    R acc(0);
    for (int j = m; j >= 0; --j)
        acc = acc * x + to_real<R>(Rational(detail::binomial_big(m, m - j)) * B[m - j]);
    return acc;
}

/// Periodic Bernoulli function B~_m(x) = B_m({x}), with the sawtooth midpoint
/// convention B~_1(n) = 0 for integers n.
template <class R>
R periodic_bernoulli(int m, const R& x) {
    using std::floor;
    if (m == 1 && chi_int(x)) return R(0);
    R f = x - floor(x);
    if (chi_int(f)) f = R(0); // inputs a hair below an integer
    return bernoulli_poly<R>(m, f);
}

/// Clausen-type function of this toolkit: sum s(mx)/m^l for even l and
/// sum c(mx)/m^l for odd l, where s = sin(2 pi .), c = cos(2 pi .).
template <class R>
R clausen(int l, const R& x, double tail_tol = 1e-13) {
    using std::cos;
    using std::fabs;
    using std::floor;
    using std::pow;
    using std::sin;
    if (l < 2) throw domain_error("clausen: l must be >= 2");
    if (chi_int(x)) return (l % 2 == 1) ? riemann_zeta<R>(l) : R(0);
    const R f = x - floor(x);
    const R twopi = 2 * pi_const<R>();
    // Abel tail bound: |sum_{m>M}| <= 2 / (|sin(pi x)| M^l)
    const R sinpix = sin(pi_const<R>() * f);
    const double inv_gap = 1.0 / std::fabs(to_double(sinpix));
    long M = 16;
    while (2.0 * inv_gap * std::pow(static_cast<double>(M), -l) > tail_tol && M < 80000000L)
        M *= 2;
    // incremental rotation, resynced from a wide-precision running angle
    using W = wide_real_t<R>;
    const W fw = to_wide(f);
    W angw = 0;
    const R c1 = cos(twopi * f), s1 = sin(twopi * f);
    R cr = c1, sr = s1;
    R acc(0);
    for (long m = 1; m <= M; ++m) {
        angw += fw;
        if (angw >= 1) angw -= 1;
        if (m > 1) {
            if (m % 4096 == 0) {
                R a = twopi * from_wide<R>(angw);
                cr = cos(a);
                sr = sin(a);
            } else {
                R c2 = cr * c1 - sr * s1;
                sr = sr * c1 + cr * s1;
                cr = c2;
            }
        }
        R mp(1);
        for (int i = 0; i < l; ++i) mp *= R(static_cast<double>(m));
        acc += ((l % 2 == 0) ? sr : cr) / mp;
    }
    return acc;
}

/// Numerator/denominator extraction under gcd(n,d)=1, d>=1 (the canonical
/// form cpp_rational maintains); capacity error beyond 64-bit parts.
struct RationalParts {
    long long num;
    long long den;
};
inline RationalParts rational_parts(const Rational& r) {
    const BigInt n = numerator(r), d = denominator(r);
    if (n > BigInt(9000000000000000000LL) || n < BigInt(-9000000000000000000LL) ||
        d > BigInt(9000000000000000000LL))
        throw capacity_error("rational_parts: value beyond 64-bit range");
    return {static_cast<long long>(n), static_cast<long long>(d)};
}

/// Generalized Dedekind-Rademacher sum
/// S_{m,n}(r,x,y) = sum_{j mod d(r)} B~_m((j+y)/d(r)) B~_n(n(r)(j+y)/d(r) - x).
template <class R>
R gen_dr_sum(int m, int n, const Rational& r, const R& x, const R& y) {
    if (m < 0 || n < 0) throw domain_error("gen_dr_sum: indices must be >= 0");
    const auto [num, den] = rational_parts(r);
    R acc(0);
    for (long long j = 0; j < den; ++j) {
        R u = (R(static_cast<double>(j)) + y) / R(static_cast<double>(den));
        acc += periodic_bernoulli(m, u) * periodic_bernoulli(n, R(static_cast<double>(num)) * u - x);
    }
    return acc;
}

/// Dieter's cotangent sum
/// c(r,x,y) = (1/d(r)) sum'_{j mod d(r)} cot(pi (j+y)/d(r)) cot(pi (n(r)(j+y)/d(r) - x)),
/// the prime excluding j where either cotangent argument is integral.
template <class R>
R cotangent_sum(const Rational& r, const R& x, const R& y) {
    using std::cos;
    using std::sin;
    const auto [num, den] = rational_parts(r);
    const R pi = pi_const<R>();
    R acc(0);
    for (long long j = 0; j < den; ++j) {
        R u = (R(static_cast<double>(j)) + y) / R(static_cast<double>(den));
        R v = R(static_cast<double>(num)) * u - x;
        if (chi_int(u) || chi_int(v)) continue;
        auto fu = frac_parts(u), fv = frac_parts(v);
        acc += cos(pi * fu.frac) / sin(pi * fu.frac) * cos(pi * fv.frac) / sin(pi * fv.frac);
    }
    return acc / R(static_cast<double>(den));
}

} // namespace ellcot

#endif
