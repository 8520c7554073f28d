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
#ifndef ELLCOT_SERIES_HPP
#define ELLCOT_SERIES_HPP

#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

#include "ellcot/quadratic.hpp"
#include "ellcot/thetakron.hpp"

namespace ellcot {

namespace detail {

/// n alpha split as [[n alpha]] + <<n alpha>>, carried out in the wide real
/// type so the centered fraction stays accurate against small denominators.
template <class R>
class AlphaAngles {
  public:
    explicit AlphaAngles(const QuadraticNumber& alpha) {
        using W = wide_real_t<R>;
        using std::sqrt;
        W s = sqrt(W(static_cast<double>(alpha.D())));
        // refine sqrt in wide precision (one Newton step fixes long double libm slack)
        s = (s + W(static_cast<double>(alpha.D())) / s) / 2;
        alpha_w_ = (W(static_cast<double>(alpha.p())) + W(static_cast<double>(alpha.q())) * s) /
                   W(static_cast<double>(alpha.den()));
    }

    /// ([[n alpha]], <<n alpha>>)
    std::pair<long long, R> split(long long n) const {
        using W = wide_real_t<R>;
        using std::floor;
        W v = alpha_w_ * W(static_cast<double>(n));
        W k = floor(v + W(0.5));
        W f = v - k;
        if (!(f > W(-0.5))) {
            k -= 1;
            f += 1;
        }
        return {static_cast<long long>(to_double(k)), from_wide<R>(f)};
    }

  private:
    wide_real_t<R> alpha_w_;
};

inline int pow_sign(int s) { return (s % 2 == 0) ? 1 : -1; } // (-1)^s for any integer s

} // namespace detail

/// Cotangent Dirichlet series sum_{n<=N} cot(pi n alpha)/n^s with a certified
/// tail bound from the badly-approximable constant of alpha.
template <class C>
SeriesResult<C> cot_dirichlet(int s, const QuadraticNumber& alpha, const TruncationPolicy& policy) {
    using R = real_t<C>;
    using std::cos;
    using std::sin;
    policy.validate();
    if (s < 2) throw domain_error("cot_dirichlet: s must be >= 2 for absolute convergence");
    if (alpha.is_rational()) throw domain_error("cot_dirichlet: alpha must be irrational");
    detail::AlphaAngles<R> ang(alpha);
    const R pi = pi_const<R>();
    R acc(0);
    const long N = policy.max_index;
    for (long n = 1; n <= N; ++n) {
        auto [k, f] = ang.split(n);
        (void)k;
        R npow(1);
        for (int i = 0; i < s; ++i) npow *= R(static_cast<double>(n));
        acc += cos(pi * f) / sin(pi * f) / npow;
    }
    const double Ca = approx_constant(alpha);
    double tail = 0.5 * Ca * std::pow(static_cast<double>(N), 2 - s) / (s - 2);
    return {C(acc), tail, N};
}

namespace detail {
/// Exact element u + v sqrt(D) of Q(sqrt(D)) with rational coordinates; just
/// enough arithmetic for Berndt's closed form.
struct QfElem {
    Rational u, v;
    long long D;
    QfElem mul(const QfElem& o) const {
        return {u * o.u + v * o.v * Rational(D), u * o.v + v * o.u, D};
    }
    QfElem inv() const {
        Rational nrm = u * u - v * v * Rational(D);
        return {u / nrm, -v / nrm, D};
    }
    template <class R>
    R to_real() const {
        using std::sqrt;
        return ellcot::to_real<R>(u) + ellcot::to_real<R>(v) * sqrt(R(static_cast<double>(D)));
    }
};
} // namespace detail

/// xi(2l-1, alpha) solved from Berndt's closed form: the finite Bernoulli sum
/// divided by (1 - eps alpha^{2l-2}); alpha = (a + b sqrt(c))/2 must satisfy
/// a^2 - c b^2 = 4 eps.  `validate = false` skips the Pell check so that the
/// falsification drivers can evaluate the formula with a wrong sign.
template <class C>
C berndt_rhs(int l, const QuadraticNumber& alpha, int eps, bool validate = true) {
    using R = real_t<C>;
    if (l < 2) throw domain_error("berndt_rhs: l must be >= 2");
    if (eps != 1 && eps != -1) throw domain_error("berndt_rhs: eps must be +-1");
    // recover integers (a, b) with alpha = (a + b sqrt(c))/2
    if (alpha.den() != 1 && alpha.den() != 2)
        throw domain_error("berndt_rhs: alpha must have the form (a + b sqrt(c))/2");
    const long long scale = 2 / alpha.den();
    const long long a = scale * alpha.p(), b = scale * alpha.q(), c = alpha.D();
    if (validate && a * a - c * b * b != 4 * eps)
        throw domain_error("berndt_rhs: alpha does not satisfy a^2 - c b^2 = 4 eps");

    detail::QfElem al{Rational(a, 2), Rational(b, 2), c};
    // exact powers alpha^{2k-1}, k = 0..l
    std::vector<detail::QfElem> pw(2 * l + 1);
    pw[0] = {Rational(1), Rational(0), c};
    for (int i = 1; i <= 2 * l; ++i) pw[i] = pw[i - 1].mul(al);
    detail::QfElem sum{Rational(0), Rational(0), c};
    for (int k = 0; k <= l; ++k) {
        Rational coef = Rational(detail::binomial_big(2 * l, 2 * k)) * bernoulli_number(2 * k) *
                        bernoulli_number(2 * l - 2 * k);
        detail::QfElem apw = (k == 0) ? al.inv() : pw[2 * k - 1];
        sum.u += coef * apw.u;
        sum.v += coef * apw.v;
    }
    detail::QfElem denom{Rational(1) - (eps == 1 ? pw[2 * l - 2].u : -pw[2 * l - 2].u),
                         (eps == 1 ? -pw[2 * l - 2].v : pw[2 * l - 2].v), c};
    const R pi = pi_const<R>();
    R pref(1);
    for (int i = 0; i < 2 * l - 1; ++i) pref *= 2 * pi;
    R fact(1);
    for (int i = 2; i <= 2 * l; ++i) fact *= R(i);
    R num = sum.template to_real<R>() * pref / fact;
    if (l % 2 == 0) num = -num; // (-1)^{l-1}
    return C(num / denom.template to_real<R>());
}

namespace detail {
/// e(n t alpha) for real t: factored as e(t [[n alpha]]) e(t <<n alpha>>),
/// each argument-reduced, so precision never rides on n t alpha directly.
template <class C, class R>
C phase_nta(const R& t, long long n, const AlphaAngles<R>& ang) {
    auto [k, f] = ang.split(n);
    return exp2pii_real<C>(t * R(static_cast<double>(k))) * exp2pii_real<C>(t * f);
}
} // namespace detail

/// Arakawa's series H(alpha, s, x, y) for integer s < 0 (both sub-series
/// absolutely convergent for quadratic alpha); e(s/2) = (-1)^s exactly.
template <class C>
SeriesResult<C> arakawa_h(const QuadraticNumber& alpha, int s, const real_t<C>& x,
                          const real_t<C>& y, const TruncationPolicy& policy) {
    using R = real_t<C>;
    policy.validate();
    if (s >= 0) throw domain_error("arakawa_h: s must be a negative integer (no analytic continuation)");
    if (alpha.is_rational()) throw domain_error("arakawa_h: alpha must be irrational");
    detail::AlphaAngles<R> ang(alpha);
    const R ax = frac_parts(x).angle;   // <x>
    const R axm = frac_parts(-x).angle; // <-x>
    const long N = policy.max_index;
    const C sgn(static_cast<double>(detail::pow_sign(s)));
    C acc(0);
    for (long n = 1; n <= N; ++n) {
        auto [k, f] = ang.split(n); // n alpha = k + f
        (void)k;
        C den = C(1) - exp2pii_real<C>(f); // 1 - e(n alpha)
        R npow(1);
        for (int i = 0; i < 1 - s; ++i) npow *= R(static_cast<double>(n));
        C t1 = exp2pii_real<C>(R(static_cast<double>(n)) * y) * detail::phase_nta<C>(ax, n, ang);
        C t2 = exp2pii_real<C>(-R(static_cast<double>(n)) * y) * detail::phase_nta<C>(axm, n, ang);
        acc += (t1 + sgn * t2) / (npow * den);
    }
    const double Ca = approx_constant(alpha);
    double tail;
    if (s <= -2)
        tail = 0.5 * Ca * std::pow(static_cast<double>(N), s + 1) / (-s - 1);
    else // s = -1: no certified rate from the crude majorant
        tail = 0.5 * Ca / static_cast<double>(N);
    return {acc, tail, N};
}

/// Generalized cotangent Dirichlet series xi~(s, alpha, x, y), H route
/// (valid for every y): xi~(s,alpha,x,y) = -H(alpha, 1-s, -y, x).
template <class C>
SeriesResult<C> gen_cot_via_h(int s, const QuadraticNumber& alpha, const real_t<C>& x,
                              const real_t<C>& y, const TruncationPolicy& policy) {
    if (s < 3) throw domain_error("gen_cot: s must be an integer >= 3");
    auto h = arakawa_h<C>(alpha, 1 - s, -y, x, policy);
    return {-h.value, h.est_tail, h.terms_used};
}

/// Two-sided route (Eq. valid when y is not an integer):
/// sum'_m e(mx)/m^s e(alpha m <-y>)/(e(alpha m) - 1), with (-m)^s = (-1)^s m^s.
template <class C>
SeriesResult<C> gen_cot_two_sided(int s, const QuadraticNumber& alpha, const real_t<C>& x,
                                  const real_t<C>& y, const TruncationPolicy& policy) {
    using R = real_t<C>;
    policy.validate();
    if (s < 3) throw domain_error("gen_cot: s must be an integer >= 3");
    if (chi_int(y)) throw domain_error("gen_cot_two_sided: requires y not in Z");
    if (alpha.is_rational()) throw domain_error("gen_cot: alpha must be irrational");
    detail::AlphaAngles<R> ang(alpha);
    const R am = frac_parts(-y).angle; // <-y>
    const long N = policy.max_index;
    const C sgn(static_cast<double>(detail::pow_sign(s)));
    C acc(0);
    for (long n = 1; n <= N; ++n) {
        auto [k, f] = ang.split(n);
        (void)k;
        C ena = exp2pii_real<C>(f);
        R npow(1);
        for (int i = 0; i < s; ++i) npow *= R(static_cast<double>(n));
        C phase = detail::phase_nta<C>(am, n, ang);
        C exn = exp2pii_real<C>(R(static_cast<double>(n)) * x);
        acc += exn * phase / ((ena - C(1)) * npow);
        // m = -n term: e(-nx) (-1)^s e(-alpha n <-y>)/(e(-alpha n) - 1) / n^s
        C phaseneg = C(1) / phase;
        C enaneg = C(1) / ena;
        acc += sgn * (C(1) / exn) * phaseneg / ((enaneg - C(1)) * npow);
    }
    const double Ca = approx_constant(alpha);
    double tail = Ca * std::pow(static_cast<double>(N), 2 - s) / (s - 2);
    return {acc, tail, 2 * N};
}

/// xi~(s, alpha, x, y): dispatches on chi(y); both routes agree off integers.
template <class C>
SeriesResult<C> gen_cot(int s, const QuadraticNumber& alpha, const real_t<C>& x, const real_t<C>& y,
                        const TruncationPolicy& policy) {
    if (!chi_int(y)) return gen_cot_two_sided<C>(s, alpha, x, y, policy);
    return gen_cot_via_h<C>(s, alpha, x, y, policy);
}

/// Parameters of the elliptic generalized cotangent Dirichlet series.
template <class C>
struct EllipticSeriesParams {
    int l;
    QuadraticNumber alpha;
    CharMat<real_t<C>> M;
    const ModularParameter<C>* mp;
    TruncationPolicy policy;

    void validate() const {
        policy.validate();
        if (l < 3) throw domain_error("elliptic_gen_cot: l must be an integer >= 3");
        if (alpha.is_rational()) throw domain_error("elliptic_gen_cot: alpha must be irrational");
        if (M.yv.on_z2()) throw domain_error("elliptic_gen_cot: y character must not lie in Z^2");
        if (mp == nullptr) throw domain_error("elliptic_gen_cot: missing modular parameter");
    }
};

namespace detail {
inline int series_threads() {
    if (const char* env = std::getenv("ELLCOT_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}
} // namespace detail

/// The elliptic generalized cotangent Dirichlet series
///   xi~(l, alpha, M; tau) = sum'_{m',m} e(m'x' + m x) / (tau m' + m)^l
///                                       * F(-yvec; alpha(tau m' + m); tau),
/// square-truncated at max(|m'|,|m|) <= max_index, summed shell-major in a
/// fixed order (deterministic for a given policy regardless of thread count).
/// F arguments are reduced into the fundamental cell by quasi-periodicity
/// phases; terms whose reduced argument falls near the pole are evaluated
/// through the Laurent split with the 1/X part explicit.
template <class C>
SeriesResult<C> elliptic_gen_cot(const EllipticSeriesParams<C>& p) {
    using R = real_t<C>;
    using std::abs;
    p.validate();
    const ModularParameter<C>& mp = *p.mp;
    const C& tau = mp.tau();
    KroneckerEvaluator<C> F({-p.M.yv.xp, -p.M.yv.x}, mp);
    detail::AlphaAngles<R> ang(p.alpha);
    const R xp = p.M.xv.xp, x = p.M.xv.x;
    const R yp = p.M.yv.xp, y = p.M.yv.x;
    const long N = p.policy.max_index;

    auto term = [&](long mprime, long m) -> C {
        auto [kp, fp] = ang.split(mprime);
        auto [k, f] = ang.split(m);
        C x_red = tau * fp + C(f);
        // e(-y' [[alpha m']] - y [[alpha m]])
        C phase = exp2pii_real<C>(-yp * R(static_cast<double>(kp))) *
                  exp2pii_real<C>(-y * R(static_cast<double>(k)));
        C fv = phase * F.deriv(0, x_red);
        C den = tau * R(static_cast<double>(mprime)) + C(R(static_cast<double>(m)));
        C denl(1);
        for (int i = 0; i < p.l; ++i) denl *= den;
        return exp2pii_real<C>(xp * R(static_cast<double>(mprime)) + x * R(static_cast<double>(m))) *
               fv / denl;
    };

    auto shell_sum = [&](long k) -> C {
        C s(0);
        for (long mp_ = -k; mp_ <= k; ++mp_) {
            s += term(mp_, -k);
            s += term(mp_, k);
        }
        for (long m = -k + 1; m <= k - 1; ++m) {
            s += term(-k, m);
            s += term(k, m);
        }
        return s;
    };

    std::vector<C> shells(static_cast<size_t>(N) + 1, C(0));
    const int nthreads = std::min<long>(detail::series_threads(), N);
    if (nthreads <= 1) {
        for (long k = 1; k <= N; ++k) shells[k] = shell_sum(k);
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr eptr;
        std::mutex emu;
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (long k = 1 + t; k <= N; k += nthreads) shells[k] = shell_sum(k);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(emu);
                    if (!eptr) eptr = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (eptr) std::rethrow_exception(eptr);
    }

    C total(0), half(0);
    for (long k = 1; k <= N; ++k) {
        total += shells[k];
        if (k == N / 2) half = total;
    }

    long terms = 2 * N * (2 * N + 2); // (2N+1)^2 - 1
    double tail;
    if (p.l >= 4) {
        // |term| <= C_F C_alpha k / (c_tau^{l+1} k^l) over the 8k-point shell
        double cf = 0;
        for (int i = 0; i < 32; ++i) {
            double t0 = -0.5 + (i + 0.5) / 32.0;
            for (C Xb : {tau * R(t0) + C(R(0.5)), tau * R(0.5) + C(R(t0))}) {
                using std::abs;
                cf = std::max(cf, to_double(abs(Xb * F.deriv(0, Xb))));
            }
        }
        cf *= 1.5;
        const double Ca = approx_constant(p.alpha);
        const double ct = to_double(tau.imag()) / std::max(1.0, to_double(abs(tau)));
        tail = 8.0 * cf * Ca / std::pow(ct, p.l + 1) *
               std::pow(static_cast<double>(N), 3 - p.l) / (p.l - 3);
    } else {
        // l = 3: the crude majorant certifies no rate; report the observed
        // difference between the N and N/2 partial sums instead.
        tail = to_double(abs(total - half));
    }
    return {total, tail, terms};
}

/// Right side of the large-Im tau degeneration of the elliptic series:
/// (l+1)!/(2 pi i)^l ( xi~(l,alpha,x,y) - psi(l) chi(y) Cl_l(x) ),
/// psi = 1 for odd l and i for even l.  The value is real.
template <class C>
C degeneration_rhs(int l, const QuadraticNumber& alpha, const CharMat<real_t<C>>& M,
                   const TruncationPolicy& policy) {
    using R = real_t<C>;
    if (l < 3) throw domain_error("degeneration_rhs: l must be >= 3");
    if (M.yv.on_z2()) throw domain_error("degeneration_rhs: y character must not lie in Z^2");
    const R x = M.xv.x, y = M.yv.x;
    C xi = gen_cot<C>(l, alpha, x, y, policy).value;
    C corr(0);
    if (chi_int(y)) {
        R cl = clausen(l, x, policy.tail_tol);
        corr = (l % 2 == 1) ? C(cl) : C(0, 1) * cl;
    }
    C twopii = C(0, 1) * R(2) * pi_const<R>();
    C scale(1);
    for (int i = 0; i < l; ++i) scale *= twopii;
    R fact(1);
    for (int i = 2; i <= l + 1; ++i) fact *= R(i);
    return fact / scale * (xi - corr);
}

} // namespace ellcot

#endif
