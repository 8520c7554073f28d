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
#ifndef ELLCOT_THETAKRON_HPP
#define ELLCOT_THETAKRON_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "ellcot/classical.hpp"
#include "ellcot/modular.hpp"
#include "ellcot/numeric.hpp"

namespace ellcot {

/// tau with Im tau > 0 plus the caches every theta-based evaluator shares:
/// q = e(tau), q^{1/8} = e(tau/8), theta'(0;tau) and the lattice gap of
/// Z + tau Z.  Immutable after construction.
template <class C>
class ModularParameter {
  public:
    using R = real_t<C>;

    explicit ModularParameter(C tau, long theta_terms = 64, double theta_tol = 0.0)
        : tau_(tau), theta_terms_(std::max(8L, theta_terms)), theta_tol_(theta_tol) {
        if (!(to_double(tau.imag()) > 0)) throw domain_error("ModularParameter: Im tau must be > 0");
        if (theta_tol_ <= 0) theta_tol_ = 0.05 * to_double(std::numeric_limits<R>::epsilon());
        q_ = exp2pii(tau_);
        q18_ = exp2pii(tau_ / R(8));
        gap_ = compute_gap();
        theta_prime0_ = compute_theta_prime0();
    }

    const C& tau() const { return tau_; }
    const C& q() const { return q_; }
    const C& q18() const { return q18_; }
    const C& theta_prime0() const { return theta_prime0_; }
    /// Distance from 0 to the nearest nonzero point of Z + tau Z.
    double gap() const { return gap_; }

    /// Jacobi theta(x;tau) = sum_m e((m+1/2)^2 tau/2 + (m+1/2)(x+1/2)).
    C theta(const C& x) const {
        using std::fabs;
        const double imx = fabs(to_double(x.imag()));
        const double imt = to_double(tau_.imag());
        // peak exponent of |terms| is pi (Im x)^2 / Im tau
        if (pi_const<double>() * imx * imx / imt > 690.0)
            throw range_error("theta: |Im x| too large for representable terms");
        C sum(0);
        double ref = 0; // running magnitude scale
        int small_pairs = 0;
        for (long p = 0; p <= 2000000; ++p) {
            C t1 = theta_term(p, x);
            C t2 = theta_term(-1 - p, x);
            sum += t1 + t2;
            using std::abs;
            double m = std::max(to_double(abs(t1)), to_double(abs(t2)));
            ref = std::max(ref, m);
            if (m < theta_tol_ * (ref + 1e-300)) {
                if (++small_pairs >= 2 && p + 1 >= theta_terms_ / 8) return sum;
            } else {
                small_pairs = 0;
            }
        }
        throw range_error("theta: series did not settle");
    }

  private:
    C theta_term(long m, const C& x) const {
        R mh = R(static_cast<double>(m)) + R(1) / 2;
        return exp2pii(tau_ * mh * mh / R(2) + mh * (x + R(1) / 2));
    }

    C compute_theta_prime0() const {
        const C twopii = C(0, 1) * R(2) * pi_const<R>();
        C sum(0);
        for (long p = 0;; ++p) {
            R mh1 = R(static_cast<double>(p)) + R(1) / 2;
            R mh2 = R(static_cast<double>(-1 - p)) + R(1) / 2;
            C t1 = twopii * mh1 * exp2pii(tau_ * mh1 * mh1 / R(2) + mh1 / R(2));
            C t2 = twopii * mh2 * exp2pii(tau_ * mh2 * mh2 / R(2) + mh2 / R(2));
            sum += t1 + t2;
            using std::abs;
            if (p > 4 && to_double(abs(t1)) + to_double(abs(t2)) < 1e-40 * to_double(abs(sum)))
                break;
            if (p > 100000) break;
        }
        return sum;
    }

    double compute_gap() const {
        double best = 1e300;
        const double re = to_double(tau_.real()), im = to_double(tau_.imag());
        for (int m = -2; m <= 2; ++m) {
            long long n0 = static_cast<long long>(std::llround(-m * re));
            for (long long n = n0 - 2; n <= n0 + 2; ++n) {
                if (m == 0 && n == 0) continue;
                double dre = m * re + static_cast<double>(n), dim = m * im;
                best = std::min(best, std::hypot(dre, dim));
            }
        }
        return best;
    }

    C tau_, q_, q18_, theta_prime0_;
    long theta_terms_;
    double theta_tol_;
    double gap_ = 1.0;
};

namespace detail {

/// X = xi + tau xi' decomposed over the real basis (1, tau).
template <class C>
std::pair<real_t<C>, real_t<C>> lattice_coords(const C& X, const C& tau) {
    using R = real_t<C>;
    R xip = X.imag() / tau.imag();
    R xi = X.real() - tau.real() * xip;
    return {xip, xi};
}

/// Reduction of X modulo Z + tau Z into the centered cell:
/// X = X_red + a' tau + a with the coefficients of the quasi-periodicity
/// phases; F(xvec; X) = e(a x + a' x') F(xvec; X_red).
template <class C>
struct LatticeReduction {
    C x_red;
    long long a;  // integer multiple of 1
    long long ap; // integer multiple of tau
    real_t<C> dist; // |X_red| in the cell metric
};

template <class C>
LatticeReduction<C> reduce_to_cell(const C& X, const C& tau) {
    using R = real_t<C>;
    using std::abs;
    auto [xip, xi] = lattice_coords(X, tau);
    auto sp = angle_split(xip);
    auto s = angle_split(xi);
    C x_red = tau * sp.frac + C(s.frac);
    return {x_red, s.nearest, sp.nearest, abs(x_red)};
}

} // namespace detail

/// Elliptic Bernoulli function B_m(xvec; tau) by the explicit q-expansion.
/// The character is reduced into [0,1)^2 first; m = 1,2 on Z^2 signal a
/// domain error (the function is discontinuous there), m >= 3 drop the
/// then-singular third term whose limit is 0.
template <class C>
C elliptic_bernoulli(int m, const CharVec<real_t<C>>& xv, const ModularParameter<C>& mp,
                     double tail_tol = 0.0) {
    using R = real_t<C>;
    using std::abs;
    if (tail_tol <= 0) tail_tol = 0.05 * to_double(std::numeric_limits<R>::epsilon());
    if (m < 0) throw domain_error("elliptic_bernoulli: m must be >= 0");
    if (m > kBernoulliTableBound) throw capacity_error("elliptic_bernoulli: m beyond table bound 64");
    if (m == 0) return C(1);
    const bool on_z2 = xv.on_z2();
    if ((m == 1 || m == 2) && on_z2)
        throw domain_error("elliptic_bernoulli: B_1, B_2 are discontinuous on Z^2");
    auto red = xv.reduced();
    const R xp = red.xp, x = red.x;
    const C& tau = mp.tau();

    C acc(0);
    const C exp_mxt = exp2pii(C(-x) * tau); // e(-x tau)
    const C exp_pxt = exp2pii(C(x) * tau);  // e(x tau)
    const C exp_mxp = exp2pii_real<C>(-xp); // e(-x')
    const C exp_pxp = exp2pii_real<C>(xp);  // e(x')
    const C& q = mp.q();
    C qj(1);
    for (long j = 1; j <= 5000; ++j) {
        qj = qj * q;
        C g1 = exp_mxt * qj; // e((j - x) tau)
        C g2 = exp_pxt * qj; // e((j + x) tau)
        R b1(1), b2(1);      // (x -+ j)^{m-1}
        for (int i = 0; i < m - 1; ++i) {
            b1 *= x - R(static_cast<double>(j));
            b2 *= x + R(static_cast<double>(j));
        }
        C term = b1 * g1 / (exp_mxp - g1) - b2 * g2 / (exp_pxp - g2);
        acc += term;
        if (to_double(abs(g1)) * (1.0 + std::pow(static_cast<double>(j + 1), m - 1)) <
            tail_tol * (1.0 + to_double(abs(acc))))
            break;
    }
    // third term x^{m-1} w/(w-1), w = e(-x' + x tau); singular iff w = 1
    C w = exp_mxp * exp_pxt;
    if (to_double(abs(w - C(1))) > 1e-12) {
        R xm(1);
        for (int i = 0; i < m - 1; ++i) xm *= x;
        acc += xm * w / (w - C(1));
    }
    return R(static_cast<double>(m)) * acc + C(bernoulli_poly<R>(m, x));
}

/// CPV lattice-sum oracle for elliptic Bernoulli functions (k >= 3 only):
/// B_k = -k!/(2 pi i)^k sum'_{m',m} e(m'x' + m x)/(tau m' + m)^k,
/// square-truncated at the given cutoff.
template <class C>
SeriesResult<C> eisenstein_bernoulli_oracle(int k, const CharVec<real_t<C>>& xv,
                                            const ModularParameter<C>& mp, long cutoff) {
    using R = real_t<C>;
    if (k < 3) throw domain_error("eisenstein_bernoulli_oracle: k must be >= 3 (absolute convergence)");
    if (cutoff < 1) throw domain_error("eisenstein_bernoulli_oracle: cutoff must be >= 1");
    const C& tau = mp.tau();
    C sum(0);
    long terms = 0;
    for (long shell = 1; shell <= cutoff; ++shell) {
        C ssum(0);
        auto add = [&](long mprime, long m) {
            C denom = tau * R(static_cast<double>(mprime)) + C(R(static_cast<double>(m)));
            C denk(1);
            for (int i = 0; i < k; ++i) denk *= denom;
            ssum += exp2pii_real<C>(xv.xp * R(static_cast<double>(mprime)) +
                                    xv.x * R(static_cast<double>(m))) /
                    denk;
            ++terms;
        };
        for (long mp_ = -shell; mp_ <= shell; ++mp_) {
            add(mp_, -shell);
            add(mp_, shell);
        }
        for (long m = -shell + 1; m <= shell - 1; ++m) {
            add(-shell, m);
            add(shell, m);
        }
        sum += ssum;
    }
    R factk(1);
    for (int i = 2; i <= k; ++i) factk *= R(i);
    C twopii = C(0, 1) * R(2) * pi_const<R>();
    C scale(1);
    for (int i = 0; i < k; ++i) scale *= twopii;
    C value = -factk / scale * sum;
    const double imt = to_double(mp.tau().imag());
    const double ct = imt / std::max(1.0, to_double(abs(mp.tau())));
    double est = 8.0 * to_double(factk) / std::pow(2 * pi_const<double>(), k) *
                 std::pow(ct, -k) / ((k - 2) * std::pow(static_cast<double>(cutoff), k - 2));
    return {value, est, terms};
}

/// Evaluator for the Kronecker double series F(xvec; X; tau) and its
/// normalized derivatives, bound to one character and one tau.  Arguments are
/// reduced into the fundamental cell with quasi-periodicity phases; near the
/// pole the Laurent expansion with elliptic Bernoulli coefficients is used,
/// elsewhere the theta quotient (derivatives there by a Cauchy circle).
template <class C>
class KroneckerEvaluator {
  public:
    using R = real_t<C>;

    KroneckerEvaluator(const CharVec<R>& xv, const ModularParameter<C>& mp, double pole_cutoff = 1e-8)
        : xv_(xv), mp_(&mp), pole_cutoff_(pole_cutoff) {
        if (xv.on_z2()) throw domain_error("kronecker_F: character vector must not lie in Z^2");
        xi_ = C(-xv.xp) + C(xv.x) * mp.tau();
        theta_xi_ = mp.theta(xi_);
        laurent_radius_ = 0.45 * mp.gap();
    }

    const CharVec<R>& character() const { return xv_; }

    /// F(xvec; X; tau)
    C value(const C& X) const { return deriv(0, X); }

    /// F^{(n)}(xvec; X; tau) = (2 pi i)^{-n} d^n/dX^n F(xvec; X; tau)
    C deriv(int n, const C& X) const {
        if (n < 0) throw domain_error("kronecker_F_deriv: n must be >= 0");
        auto red = detail::reduce_to_cell(X, mp_->tau());
        C phase = exp2pii_real<C>(xv_.x * R(static_cast<double>(red.a)) +
                                  xv_.xp * R(static_cast<double>(red.ap)));
        double d0 = dist_to_lattice(red.x_red);
        if (d0 < pole_cutoff_) throw pole_error("kronecker_F: argument within pole cutoff of the lattice");
        if (to_double(red.dist) <= laurent_radius_) return phase * laurent_eval(n, red.x_red);
        if (n == 0) return phase * theta_eval(red.x_red);
        return phase * cauchy_deriv(n, red.x_red, d0);
    }

    /// Laurent/Taylor evaluation only, restricted to |X| below the lattice gap.
    C deriv_series(int n, const C& X) const {
        using std::abs;
        if (to_double(abs(X)) >= mp_->gap())
            throw radius_error("kronecker_F_deriv: |X| outside the Taylor radius (lattice gap)");
        if (to_double(abs(X)) == 0.0) throw pole_error("kronecker_F_deriv: X = 0 is a pole");
        return laurent_eval(n, X);
    }

    /// Taylor coefficient a_t of X^t in F - 1/X (t >= 0), cached.
    const std::vector<C>& taylor_coefficients(int upto) const {
        build_coeffs(upto);
        return coeffs_;
    }

  private:
    double dist_to_lattice(const C& z) const {
        using std::abs;
        const C& tau = mp_->tau();
        double best = 1e300;
        for (int m = -1; m <= 1; ++m)
            for (int n = -1; n <= 1; ++n)
                best = std::min(best, to_double(abs(z - tau * R(m) - C(R(n)))));
        return best;
    }

    C theta_eval(const C& X) const {
        return exp2pii(C(xv_.x) * X) * mp_->theta_prime0() * mp_->theta(xi_ + X) /
               (theta_xi_ * mp_->theta(X));
    }

    C cauchy_deriv(int n, const C& X, double d0) const {
        // F^{(n)} = n!/(2 pi i)^n (2 pi i)^{-1} contour integral; spectrally
        // accurate trapezoid on a circle of radius rho < d0
        const int K = 64;
        const R rho = R(0.35 * d0);
        C acc(0);
        for (int k = 0; k < K; ++k) {
            C w = rho * exp2pii_real<C>(R(k) / R(K));
            C f = theta_eval(X + w);
            acc += f * exp2pii_real<C>(R(-k * n) / R(K));
        }
        R rhon(1);
        for (int i = 0; i < n; ++i) rhon *= rho;
        C twopii = C(0, 1) * R(2) * pi_const<R>();
        C scale(1);
        for (int i = 0; i < n; ++i) scale *= twopii;
        R factn(1);
        for (int i = 2; i <= n; ++i) factn *= R(i);
        return factn / scale * acc / (R(K) * rhon);
    }

    C laurent_eval(int n, const C& X) const {
        using std::abs;
        const double ratio = to_double(abs(X)) / mp_->gap();
        const double digits = std::numeric_limits<R>::digits10 + 4.0;
        int need = 24;
        if (ratio > 1e-12) {
            double lr = std::log(std::max(ratio, 1e-12));
            need = static_cast<int>(std::ceil(-digits * std::log(10.0) / lr)) + n + 8;
            need = std::min(std::max(need, 24), 400);
        }
        build_coeffs(need);
        // singular part (-1)^n n! / ((2 pi i)^n X^{n+1})
        C twopii = C(0, 1) * R(2) * pi_const<R>();
        C scale(1);
        for (int i = 0; i < n; ++i) scale *= twopii;
        R factn(1);
        for (int i = 2; i <= n; ++i) factn *= R(i);
        C xpow(1);
        for (int i = 0; i <= n; ++i) xpow *= X;
        C val = (n % 2 == 0 ? factn : -factn) / (scale * xpow);
        // regular part: sum_{t>=n} a_t t!/(t-n)! X^{t-n} / (2 pi i)^n
        C xp(1);
        C reg(0);
        for (int t = n; t < static_cast<int>(coeffs_.size()); ++t) {
            R fall(1);
            for (int i = 0; i < n; ++i) fall *= R(t - i);
            reg += coeffs_[t] * fall * xp;
            xp *= X;
        }
        return val + reg / scale;
    }

    // a_t = B_{t+1}(xvec;tau) (2 pi i)^{t+1} / (t+1)!  computed without
    // forming the (potentially huge) B_{t+1} values: the q-expansion terms are
    // accumulated with iteratively scaled polynomial factors, the classical
    // Bernoulli part comes from the polynomial for small t and from the
    // two-sided Eisenstein sum sum'_n e(nx)(-1)^t/n^{t+1} for large t.
    void build_coeffs(int upto) const {
        if (static_cast<int>(coeffs_.size()) >= upto) return;
        auto red = xv_.reduced();
        const R xp = red.xp, x = red.x;
        const C twopii = C(0, 1) * R(2) * pi_const<R>();
        const C& tau = mp_->tau();
        const C exp_mxp = exp2pii_real<C>(-xp);
        const C exp_pxp = exp2pii_real<C>(xp);
        const C exp_mxt = exp2pii(C(-x) * tau);
        const C exp_pxt = exp2pii(C(x) * tau);
        const C& q = mp_->q();

        // geometric factors g1_j = e((j-x)tau)/(e(-x') - e((j-x)tau)), likewise g2
        const int J = q_terms();
        std::vector<C> g1(J + 1), g2(J + 1);
        {
            C qj(1);
            for (int j = 1; j <= J; ++j) {
                qj = qj * q;
                C a = exp_mxt * qj, b = exp_pxt * qj;
                g1[j] = a / (exp_mxp - a);
                g2[j] = b / (exp_pxp - b);
            }
        }
        // w-term: x^{t} w/(w-1) scaled; singular w==1 only on Z^2 (excluded)
        C w = exp_mxp * exp_pxt;
        const bool have_w = to_double(abs(w - C(1))) > 1e-12;
        C wfac = have_w ? w / (w - C(1)) : C(0);

        int t0 = static_cast<int>(coeffs_.size());
        coeffs_.resize(upto);
        for (int t = t0; t < upto; ++t) {
            const int m = t + 1; // B_m order
            // s1_j = (2 pi i)^m (x-j)^{m-1} / (m-1)!  built iteratively
            C acc(0);
            for (int j = 1; j <= J; ++j) {
                C p1 = scaled_power(twopii, x - R(j), m);
                C p2 = scaled_power(twopii, x + R(j), m);
                acc += p1 * g1[j] - p2 * g2[j];
            }
            if (have_w) acc += scaled_power(twopii, x, m) * wfac;
            // classical part: B_m(x)(2 pi i)^m / m!
            acc += classical_coeff(m, x, twopii);
            coeffs_[t] = acc;
        }
    }

    // (2 pi i)^m z^{m-1} / (m-1)! via logarithmic magnitude control
    static C scaled_power(const C& twopii, const R& z, int m) {
        C r = twopii; // m = 1 value: (2 pi i)^1 z^0 / 0!
        for (int i = 1; i < m; ++i) r = r * twopii * z / R(i);
        return r;
    }

    // B_m(x)(2 pi i)^m / m!: direct polynomial for small m; for large m the
    // partial-fraction expansion of e(xX)/(e(X)-1) gives
    // (-1)^{m-1} sum_{n>=1} (e(-nx) + (-1)^m e(nx)) / n^m, converging at n^{-m}.
    C classical_coeff(int m, const R& x, const C& twopii) const {
        using std::abs;
        if (m <= 26) {
            R bm = bernoulli_poly<R>(m, x);
            C scale(1);
            R fact(1);
            for (int i = 1; i <= m; ++i) {
                scale *= twopii;
                fact *= R(i);
            }
            return bm * scale / fact;
        }
        C s(0);
        for (int n = 1; n <= 32; ++n) {
            R npow(1);
            for (int i = 0; i < m; ++i) npow *= R(n);
            C t = (exp2pii_real<C>(-x * R(n)) + (m % 2 == 0 ? C(1) : C(-1)) * exp2pii_real<C>(x * R(n))) / npow;
            s += t;
            if (to_double(abs(t)) < 1e-40 * (1.0 + to_double(abs(s)))) break;
        }
        return (m % 2 == 1 ? C(1) : C(-1)) * s;
    }

    int q_terms() const {
        // e(tau)-powers decay by |q| per step; enough j for the working precision
        using std::abs;
        double lq = 2 * pi_const<double>() * to_double(mp_->tau().imag()); // -log|q|
        double digits = std::numeric_limits<R>::digits10 + 6.0;
        int J = static_cast<int>(std::ceil(digits * std::log(10.0) / std::max(lq, 0.3))) + 4;
        return std::min(J, 4000);
    }

    CharVec<R> xv_;
    const ModularParameter<C>* mp_;
    double pole_cutoff_;
    double laurent_radius_;
    C xi_, theta_xi_;
    mutable std::vector<C> coeffs_;
};

/// F(xvec; X; tau) = e(xX) theta'(0) theta(-x'+x tau+X) / (theta(-x'+x tau) theta(X)).
template <class C>
C kronecker_f(const CharVec<real_t<C>>& xv, const C& X, const ModularParameter<C>& mp) {
    return KroneckerEvaluator<C>(xv, mp).value(X);
}

/// (2 pi i)^{-n} times the n-th X-derivative of F, from the Laurent series
/// with elliptic Bernoulli coefficients; radius error for |X| at or beyond
/// the lattice gap.
template <class C>
C kronecker_f_deriv(int n, const CharVec<real_t<C>>& xv, const C& X, const ModularParameter<C>& mp) {
    KroneckerEvaluator<C> ev(xv, mp);
    using std::abs;
    if (to_double(abs(X)) < 1e-8) throw pole_error("kronecker_F_deriv: X within pole cutoff");
    if (to_double(abs(X)) >= mp.gap())
        throw radius_error("kronecker_F_deriv: |X| not below the lattice gap");
    return ev.deriv_series(n, X);
}

} // namespace ellcot

#endif
