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
#ifndef ELLCOT_MODULAR_HPP
#define ELLCOT_MODULAR_HPP

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "ellcot/classical.hpp"
#include "ellcot/numeric.hpp"
#include "ellcot/quadratic.hpp"

namespace ellcot {

/// Element of SL2(Z); the determinant is enforced at construction.
struct UnimodularMatrix {
    long long a, b, c, d;

    UnimodularMatrix(long long a_, long long b_, long long c_, long long d_) : a(a_), b(b_), c(c_), d(d_) {
        using detail::i128;
        if (i128(a) * d - i128(b) * c != 1)
            throw domain_error("UnimodularMatrix: determinant must be 1");
    }

    static UnimodularMatrix I() { return {1, 0, 0, 1}; }
    static UnimodularMatrix T() { return {1, 1, 0, 1}; }
    static UnimodularMatrix Tinv() { return {1, -1, 0, 1}; }
    static UnimodularMatrix S() { return {0, -1, 1, 0}; }

    UnimodularMatrix operator*(const UnimodularMatrix& o) const {
        using detail::i128;
        return {detail::checked_ll(i128(a) * o.a + i128(b) * o.c, "UnimodularMatrix"),
                detail::checked_ll(i128(a) * o.b + i128(b) * o.d, "UnimodularMatrix"),
                detail::checked_ll(i128(c) * o.a + i128(d) * o.c, "UnimodularMatrix"),
                detail::checked_ll(i128(c) * o.b + i128(d) * o.d, "UnimodularMatrix")};
    }
    UnimodularMatrix operator-() const { return {-a, -b, -c, -d}; }
    UnimodularMatrix inverse() const { return {d, -b, -c, a}; }
    bool operator==(const UnimodularMatrix& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    std::string str() const {
        return "(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(c) + "," +
               std::to_string(d) + ")";
    }
};

/// Real character pair (x', x).
template <class R>
struct CharVec {
    R xp{}, x{};
    CharVec operator+(const CharVec& o) const { return {xp + o.xp, x + o.x}; }
    CharVec operator-() const { return {-xp, -x}; }
    friend CharVec operator*(long long s, const CharVec& v) {
        R sr(static_cast<double>(s));
        return {sr * v.xp, sr * v.x};
    }
    friend CharVec operator*(const R& s, const CharVec& v) { return {s * v.xp, s * v.x}; }
    CharVec reduced() const { // mod Z^2 into [0,1)^2
        using std::floor;
        return {xp - floor(xp), x - floor(x)};
    }
    bool on_z2() const { return chi_int(xp) && chi_int(x); }
};

/// The 2x2 character matrix M = (x vec over y vec).
template <class R>
struct CharMat {
    CharVec<R> xv, yv;
};

/// Rows (a x + b y ; c x + d y) of V M.
template <class R>
CharMat<R> act_char(const UnimodularMatrix& V, const CharMat<R>& M) {
    return {V.a * M.xv + V.b * M.yv, V.c * M.xv + V.d * M.yv};
}

/// Membership in M2(V): y, c x + d y not in Z^2.
template <class R>
bool admissible(const UnimodularMatrix& V, const CharMat<R>& M) {
    return !M.yv.on_z2() && !(V.c * M.xv + V.d * M.yv).on_z2();
}

/// Membership in M2(r): x, d(r) x - n(r) y not in Z^2.
template <class R>
bool admissible_r(const Rational& r, const CharMat<R>& M) {
    auto [n, d] = rational_parts(r);
    return !M.xv.on_z2() && !(d * M.xv + (-n) * M.yv).on_z2();
}

/// (Vz, j(V;z)) for complex z; pole error when j = 0.
template <class C>
std::pair<C, C> mobius_with_factor(const UnimodularMatrix& V, const C& z) {
    using std::abs;
    C j = C(static_cast<double>(V.c)) * z + C(static_cast<double>(V.d));
    if (to_double(abs(j)) < 1e-14) throw pole_error("mobius: j(V;z) = 0");
    C num = C(static_cast<double>(V.a)) * z + C(static_cast<double>(V.b));
    return {num / j, j};
}

/// Exact Mobius action on a quadratic number.
inline std::pair<QuadraticNumber, QuadraticNumber> mobius_with_factor(const UnimodularMatrix& V,
                                                                      const QuadraticNumber& z) {
    QuadraticNumber num = QuadraticNumber(V.a, 0, z.D(), 1) * z + QuadraticNumber(V.b, 0, z.D(), 1);
    QuadraticNumber j = QuadraticNumber(V.c, 0, z.D(), 1) * z + QuadraticNumber(V.d, 0, z.D(), 1);
    if (j.is_zero()) throw pole_error("mobius: j(V;z) = 0");
    return {num / j, j};
}

/// Exact Mobius action on a rational.
struct RationalAction {
    Rational vr;
    long long num; // n(Vr)
    long long den; // d(Vr)
    int sign;      // sgn(j(V;r))
};
inline RationalAction act_rational(const UnimodularMatrix& V, const Rational& r) {
    Rational j = Rational(V.c) * r + Rational(V.d);
    if (j == 0) throw pole_error("act_rational: j(V;r) = 0");
    Rational vr = (Rational(V.a) * r + Rational(V.b)) / j;
    auto [n, d] = rational_parts(vr);
    int sign = j > 0 ? 1 : -1;
    // (n(Vr), d(Vr)) = sgn(j(V;r)) V (n(r), d(r))^T
    auto [nr, dr] = rational_parts(r);
    if (n != sign * (V.a * nr + V.b * dr) || d != sign * (V.c * nr + V.d * dr))
        throw error("act_rational: numerator/denominator map inconsistency");
    return {vr, n, d, sign};
}

enum class Gen { T, Tinv, S };

inline UnimodularMatrix gen_matrix(Gen g) {
    switch (g) {
        case Gen::T: return UnimodularMatrix::T();
        case Gen::Tinv: return UnimodularMatrix::Tinv();
        default: return UnimodularMatrix::S();
    }
}

/// Product of a generator word, in word order: result = w[0] w[1] ... w[n-1].
inline UnimodularMatrix recompose(const std::vector<Gen>& word) {
    UnimodularMatrix P = UnimodularMatrix::I();
    for (Gen g : word) P = P * gen_matrix(g);
    return P;
}

/// Decompose V into a word over {T, T^-1, S} whose product (in word order)
/// equals V exactly.  Continued-fraction reduction of the first column; the
/// sign -I is realized as S^2.
inline std::vector<Gen> decompose_generators(const UnimodularMatrix& V) {
    std::vector<Gen> word;
    auto push_t = [&word](long long k) {
        for (long long i = 0; i < std::llabs(k); ++i) word.push_back(k > 0 ? Gen::T : Gen::Tinv);
    };
    long long a = V.a, b = V.b, c = V.c, d = V.d;
    // Maintain V = (word so far) * cur.
    while (c != 0) {
        // choose q with |a - q c| minimal, then cur <- S^-1 T^-q cur
        long long q0 = a / c;
        long long q = q0;
        for (long long cand : {q0 - 1, q0, q0 + 1})
            if (std::llabs(a - cand * c) < std::llabs(a - q * c)) q = cand;
        push_t(q);
        a -= q * c;
        b -= q * d;
        // S^-1 (a,b;c,d) = (c,d;-a,-b); the word gains S.
        word.push_back(Gen::S);
        long long na = c, nb = d, nc = -a, nd = -b;
        a = na; b = nb; c = nc; d = nd;
    }
    if (a == 1) { // cur = T^b
        push_t(b);
    } else { // cur = (-1,b;0,-1) = S^2 T^{-b}
        word.push_back(Gen::S);
        word.push_back(Gen::S);
        push_t(-b);
    }
    // drop S^4 = I runs
    std::vector<Gen> out;
    for (Gen g : word) {
        out.push_back(g);
        size_t n = out.size();
        if (n >= 4 && out[n - 1] == Gen::S && out[n - 2] == Gen::S && out[n - 3] == Gen::S &&
            out[n - 4] == Gen::S)
            out.resize(n - 4);
    }
    return out;
}

} // namespace ellcot

#endif
