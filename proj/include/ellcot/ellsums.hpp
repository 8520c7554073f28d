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
#ifndef ELLCOT_ELLSUMS_HPP
#define ELLCOT_ELLSUMS_HPP

#include <functional>
#include <vector>

#include "ellcot/modular.hpp"
#include "ellcot/thetakron.hpp"

namespace ellcot {

/// Parameters of an elliptic Dedekind-Rademacher sum S_{m,n}(r, M; tau).
template <class C>
struct EdrParams {
    int m;
    int n;
    Rational r;
    CharMat<real_t<C>> M;
    const ModularParameter<C>* mp;

    void validate() const {
        if (m < 0 || n < 0) throw domain_error("edr_sum: indices must be >= 0");
        if (mp == nullptr) throw domain_error("edr_sum: missing modular parameter");
        if ((m == 1 || m == 2 || n == 1 || n == 2)) {
            auto [nr, dr] = rational_parts(r);
            if (M.yv.on_z2() || (nr * M.yv + (-dr) * M.xv).on_z2())
                throw domain_error("edr_sum: y or n(r)y - d(r)x lies in Z^2 with an index in {1,2}");
        }
    }
};

/// S_{m,n}(r, M; tau) = (1/d(r)) sum_{j',j mod d(r)}
///   B_m((jvec + yvec)/d(r); tau) B_n(n(r)(jvec + yvec)/d(r) - xvec; tau).
template <class C>
C edr_sum(const EdrParams<C>& p) {
    using R = real_t<C>;
    p.validate();
    auto [nr, dr] = rational_parts(p.r);
    const R dR(static_cast<double>(dr)), nR(static_cast<double>(nr));
    C acc(0);
    for (long long jp = 0; jp < dr; ++jp) {
        for (long long j = 0; j < dr; ++j) {
            CharVec<R> u{(R(static_cast<double>(jp)) + p.M.yv.xp) / dR,
                         (R(static_cast<double>(j)) + p.M.yv.x) / dR};
            CharVec<R> v{nR * u.xp - p.M.xv.xp, nR * u.x - p.M.xv.x};
            acc += elliptic_bernoulli(p.m, u, *p.mp) * elliptic_bernoulli(p.n, v, *p.mp);
        }
    }
    return acc / dR;
}

/// The polynomial R_V(l, z, M; tau): coefficients of (-j(V;z))^k for
/// k = -1..l are precomputed at construction (each an elliptic
/// Dedekind-Rademacher sum), so every evaluation is O(l).
template <class C>
class RPoly {
  public:
    using R = real_t<C>;

    RPoly(const UnimodularMatrix& V, int l, const CharMat<R>& M, const ModularParameter<C>& mp)
        : W_(V), l_(l) {
        if (l < 1) throw domain_error("r_poly: l must be >= 1");
        if (!admissible(V, M)) throw domain_error("r_poly: M outside M2(V)");
        if (V.c == 0) {
            zero_ = true;
            return;
        }
        // R_{-V} = R_V: evaluate through the c > 0 representative, whose own
        // automorphic factor appears in the defining sum
        W_ = V.c > 0 ? V : -V;
        // S_{k+1,l-k}(d/c, (-xvec; yvec); tau), prefactor (2 pi i)^{l+1}/(l+1)!
        CharMat<R> Mr{-M.xv, M.yv};
        Rational r(W_.d, W_.c);
        coeffs_.resize(l + 2);
        C twopii = C(0, 1) * R(2) * pi_const<R>();
        C pref(1);
        for (int i = 0; i < l + 1; ++i) pref *= twopii;
        R fact(1);
        for (int i = 2; i <= l + 1; ++i) fact *= R(i);
        pref /= fact;
        for (int k = -1; k <= l; ++k) {
            EdrParams<C> e{k + 1, l - k, r, Mr, &mp};
            coeffs_[k + 1] = pref * to_real<R>(Rational(detail::binomial_big(l + 1, k + 1))) * edr_sum(e);
        }
    }

    bool is_zero() const { return zero_; }

    C operator()(const C& z) const {
        using std::abs;
        if (zero_) return C(0);
        C j = C(static_cast<double>(W_.c)) * z + C(static_cast<double>(W_.d));
        if (to_double(abs(j)) < 1e-13) throw pole_error("r_poly: j(V;z) = 0 (k = -1 term)");
        C mj = -j;
        C acc = coeffs_[0] / mj; // k = -1 term
        C p(1);
        for (int k = 0; k <= l_; ++k) {
            acc += coeffs_[k + 1] * p;
            p *= mj;
        }
        return acc;
    }

  private:
    UnimodularMatrix W_;
    int l_;
    bool zero_ = false;
    std::vector<C> coeffs_;
};

/// One-shot convenience wrapper around RPoly.
template <class C>
C r_poly(const UnimodularMatrix& V, int l, const CharMat<real_t<C>>& M,
         const ModularParameter<C>& mp, const C& z) {
    return RPoly<C>(V, l, M, mp)(z);
}

/// Two-variable hat function (the generalization of the S-hat display):
///   S^_{k+1,lmk+1}(r, M; X, Y; tau) = (1/d(r)) sum_{j',j mod d(r)}
///     F^{(k)}((jvec+yvec)/d(r); n(r)Y - d(r)X) F^{(lmk)}(n(r)(jvec+yvec)/d(r) - xvec; -Y).
/// k and lmk are the derivative orders of the two factors.
template <class C>
C hat_s(int k, int lmk, const Rational& r, const CharMat<real_t<C>>& M, const C& X, const C& Y,
        const ModularParameter<C>& mp) {
    using R = real_t<C>;
    if (k < 0 || lmk < 0) throw domain_error("hat_s: derivative orders must be >= 0");
    auto [nr, dr] = rational_parts(r);
    const R dR(static_cast<double>(dr)), nR(static_cast<double>(nr));
    const C arg1 = nR * Y - dR * X;
    C acc(0);
    for (long long jp = 0; jp < dr; ++jp) {
        for (long long j = 0; j < dr; ++j) {
            CharVec<R> u{(R(static_cast<double>(jp)) + M.yv.xp) / dR,
                         (R(static_cast<double>(j)) + M.yv.x) / dR};
            CharVec<R> v{nR * u.xp - M.xv.xp, nR * u.x - M.xv.x};
            KroneckerEvaluator<C> F1(u, mp), F2(v, mp);
            acc += F1.deriv(k, arg1) * F2.deriv(lmk, -Y);
        }
    }
    return acc / dR;
}

/// The modular-row variant used inside R^_V (sum over j mod |c| with the
/// signed 1/c prefactor):
///   (1/c) sum_{j',j mod |c|}
///     F^{(k)}((jvec+yvec)/c; -cX - dY) F^{(lmk)}(d(jvec+yvec)/c - xvec; Y).
template <class C>
C hat_s_mod(int k, int lmk, long long c, long long d, const CharMat<real_t<C>>& M, const C& X,
            const C& Y, const ModularParameter<C>& mp) {
    using R = real_t<C>;
    if (c == 0) throw domain_error("hat_s_mod: c must be nonzero");
    const R cR(static_cast<double>(c)), dR(static_cast<double>(d));
    const C arg1 = -cR * X - dR * Y;
    C acc(0);
    for (long long jp = 0; jp < std::llabs(c); ++jp) {
        for (long long j = 0; j < std::llabs(c); ++j) {
            CharVec<R> u{(R(static_cast<double>(jp)) + M.yv.xp) / cR,
                         (R(static_cast<double>(j)) + M.yv.x) / cR};
            CharVec<R> v{dR * u.xp - M.xv.xp, dR * u.x - M.xv.x};
            KroneckerEvaluator<C> F1(u, mp), F2(v, mp);
            acc += F1.deriv(k, arg1) * F2.deriv(lmk, Y);
        }
    }
    return acc / cR;
}

/// R^_V(l, r, M; X, Y; tau) =
///   (-1)^l sum_{k=0}^{l-1} C(l-1,k) (-j(V;r))^k
///          S^_{k+1,l-k}(d/c, (-xvec; yvec); X, Y; tau)     (c != 0; 0 otherwise).
template <class C>
C hat_r(const UnimodularMatrix& V, int l, const Rational& r, const CharMat<real_t<C>>& M,
        const C& X, const C& Y, const ModularParameter<C>& mp) {
    using R = real_t<C>;
    if (l < 1) throw domain_error("hat_r: l must be >= 1");
    if (!admissible(V, M)) throw domain_error("hat_r: M outside M2(V)");
    if (V.c == 0) return C(0);
    auto [nr, dr] = rational_parts(r);
    const R jv = (R(static_cast<double>(V.c)) * R(static_cast<double>(nr)) +
                  R(static_cast<double>(V.d)) * R(static_cast<double>(dr))) /
                 R(static_cast<double>(dr));
    CharMat<R> Mr{-M.xv, M.yv};
    C acc(0);
    for (int k = 0; k <= l - 1; ++k) {
        R mjk(1);
        for (int i = 0; i < k; ++i) mjk *= -jv;
        acc += to_real<R>(Rational(detail::binomial_big(l - 1, k))) * mjk *
               hat_s_mod<C>(k, l - 1 - k, V.c, V.d, Mr, X, Y, mp);
    }
    return (l % 2 == 0) ? acc : -acc;
}

/// C_{X^0} C_{Y^0} of a two-variable evaluator by tensor-product discrete
/// Cauchy integrals on |X| = rx, |Y| = ry (K-th roots of unity each).
template <class C>
C taylor00(const std::function<C(const C&, const C&)>& f, double rx, double ry, int K = 16) {
    using R = real_t<C>;
    if (!(rx > 0) || !(ry > 0)) throw domain_error("taylor00: radii must be positive");
    if (K < 4) throw domain_error("taylor00: need at least 4 roots of unity");
    C acc(0);
    for (int i = 0; i < K; ++i) {
        C wx = R(rx) * exp2pii_real<C>(R(i) / R(K));
        for (int j = 0; j < K; ++j) {
            C wy = R(ry) * exp2pii_real<C>(R(j) / R(K));
            acc += f(wx, wy);
        }
    }
    return acc / (R(K) * R(K));
}

} // namespace ellcot

#endif
