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
#ifndef ELLCOT_QUADRATIC_HPP
#define ELLCOT_QUADRATIC_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "ellcot/classical.hpp"
#include "ellcot/numeric.hpp"

namespace ellcot {

namespace detail {
using i128 = __int128;

inline long long checked_ll(i128 v, const char* who) {
    if (v > i128(9000000000000000000LL) || v < -i128(9000000000000000000LL))
        throw capacity_error(std::string(who) + ": integer overflow");
    return static_cast<long long>(v);
}

inline long long isqrt_ll(long long n) {
    if (n < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool squarefree(long long d) {
    for (long long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

inline long long floor_div_ll(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
} // namespace detail

/// Exact element (p + q sqrt(D)) / den of a real quadratic field.
class QuadraticNumber {
  public:
    QuadraticNumber(long long p, long long q, long long D, long long den) : p_(p), q_(q), D_(D), den_(den) {
        if (D_ <= 1) throw domain_error("QuadraticNumber: D must be > 1");
        if (!detail::squarefree(D_)) throw domain_error("QuadraticNumber: D must be squarefree");
        if (den_ == 0) throw domain_error("QuadraticNumber: zero denominator");
        normalize();
    }

    long long p() const { return p_; }
    long long q() const { return q_; }
    long long D() const { return D_; }
    long long den() const { return den_; }

    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }

    QuadraticNumber conj() const { return QuadraticNumber(p_, -q_, D_, den_); }

    friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
        a.require_same_field(b);
        using detail::i128;
        i128 p = i128(a.p_) * b.den_ + i128(b.p_) * a.den_;
        i128 q = i128(a.q_) * b.den_ + i128(b.q_) * a.den_;
        i128 den = i128(a.den_) * b.den_;
        return from_wide(p, q, a.D_, den);
    }
    friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
        return a + QuadraticNumber(-b.p_, -b.q_, b.D_, b.den_);
    }
    friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
        a.require_same_field(b);
        using detail::i128;
        i128 p = i128(a.p_) * b.p_ + i128(a.q_) * b.q_ * a.D_;
        i128 q = i128(a.p_) * b.q_ + i128(a.q_) * b.p_;
        i128 den = i128(a.den_) * b.den_;
        return from_wide(p, q, a.D_, den);
    }
    friend QuadraticNumber operator/(const QuadraticNumber& a, const QuadraticNumber& b) {
        a.require_same_field(b);
        if (b.is_zero()) throw domain_error("QuadraticNumber: division by zero");
        using detail::i128;
        // a / b = a * conj(b) * den(b) / (p_b^2 - q_b^2 D)
        i128 nrm = i128(b.p_) * b.p_ - i128(b.q_) * b.q_ * b.D_; // norm * den^2 scale handled below
        i128 p = (i128(a.p_) * b.p_ - i128(a.q_) * b.q_ * a.D_) * b.den_;
        i128 q = (i128(a.q_) * b.p_ - i128(a.p_) * b.q_) * b.den_;
        i128 den = i128(a.den_) * nrm;
        return from_wide(p, q, a.D_, den);
    }

    bool operator==(const QuadraticNumber& o) const {
        return p_ == o.p_ && q_ == o.q_ && den_ == o.den_ && (q_ == 0 || D_ == o.D_);
    }

    template <class R>
    R to_real() const {
        using std::sqrt;
        R s = sqrt(R(static_cast<double>(D_)));
        return (R(static_cast<double>(p_)) + R(static_cast<double>(q_)) * s) / R(static_cast<double>(den_));
    }

    std::string str() const {
        return "(" + std::to_string(p_) + "+" + std::to_string(q_) + "*sqrt(" + std::to_string(D_) +
               "))/" + std::to_string(den_);
    }

  private:
    void require_same_field(const QuadraticNumber& o) const {
        if (q_ != 0 && o.q_ != 0 && D_ != o.D_)
            throw domain_error("QuadraticNumber: mixed-D operands");
    }

    static QuadraticNumber from_wide(detail::i128 p, detail::i128 q, long long D, detail::i128 den) {
        QuadraticNumber r(0, 0, D, 1);
        r.p_ = detail::checked_ll(p, "QuadraticNumber");
        r.q_ = detail::checked_ll(q, "QuadraticNumber");
        r.den_ = detail::checked_ll(den, "QuadraticNumber");
        r.normalize();
        return r;
    }

    void normalize() {
        if (den_ < 0) {
            p_ = -p_;
            q_ = -q_;
            den_ = -den_;
        }
        long long g = std::gcd(std::gcd(std::llabs(p_), std::llabs(q_)), den_);
        if (g > 1) {
            p_ /= g;
            q_ /= g;
            den_ /= g;
        }
    }

    long long p_, q_, D_, den_;
};

/// Minimal positive solution of a^2 - c b^2 = +-4.
struct PellSolution {
    long long a;
    long long b;
    int eps; // the achieved sign
    long long c;
    /// The unit-like quadratic (a + b sqrt(c)) / 2 of Berndt's theorem.
    QuadraticNumber alpha() const { return QuadraticNumber(a, b, c, 2); }
};

inline PellSolution pell_4(long long c, long long cap = 1000000) {
    if (c <= 1 || !detail::squarefree(c)) throw domain_error("pell_4: c must be squarefree > 1");
    for (long long b = 1; b <= cap; ++b) {
        detail::i128 t = detail::i128(c) * b * b;
        if (t > detail::i128(4e18)) throw capacity_error("pell_4: search overflow");
        long long tm = static_cast<long long>(t) - 4;
        long long tp = static_cast<long long>(t) + 4;
        long long sm = detail::isqrt_ll(tm);
        if (sm >= 0 && sm * sm == tm) return PellSolution{sm, b, -1, c};
        long long sp = detail::isqrt_ll(tp);
        if (sp * sp == tp) return PellSolution{sp, b, +1, c};
    }
    throw capacity_error("pell_4: no solution within cap");
}

namespace detail {
// State of the quadratic-surd continued fraction: alpha_k = (P + sqrt(N)) / Q
// with Q | N - P^2 (maintained by the classical iteration).
struct SurdState {
    long long P, Q, N;
    bool operator<(const SurdState& o) const {
        if (P != o.P) return P < o.P;
        if (Q != o.Q) return Q < o.Q;
        return N < o.N;
    }
};

inline SurdState surd_of(const QuadraticNumber& a) {
    if (a.is_rational()) throw domain_error("cf_expansion: rational argument");
    // (p + q sqrt(D))/den -> (P + sqrt(N))/Q with N = q^2 D den^2, P = p den, Q = den^2
    // (multiplying through by den guarantees Q | N - P^2); q < 0 flips all signs.
    i128 sgn = a.q() > 0 ? 1 : -1;
    i128 P = sgn * i128(a.p()) * a.den();
    i128 N = i128(a.q()) * a.q() * a.D() * a.den() * a.den();
    i128 Q = sgn * i128(a.den()) * a.den();
    return {checked_ll(P, "cf_expansion"), checked_ll(Q, "cf_expansion"), checked_ll(N, "cf_expansion")};
}

inline long long surd_floor(const SurdState& s) {
    long long r = isqrt_ll(s.N); // floor(sqrt(N)), N not a perfect square
    return s.Q > 0 ? floor_div_ll(s.P + r, s.Q) : floor_div_ll(s.P + r + 1, s.Q);
}

inline SurdState surd_step(const SurdState& s, long long a) {
    i128 P2 = i128(a) * s.Q - s.P;
    i128 Q2 = (i128(s.N) - P2 * P2) / s.Q;
    return {checked_ll(P2, "cf_expansion"), checked_ll(Q2, "cf_expansion"), s.N};
}
} // namespace detail

/// First `count` partial quotients of the continued fraction of an exact
/// quadratic irrational.
inline std::vector<long long> cf_expansion(const QuadraticNumber& alpha, int count) {
    auto s = detail::surd_of(alpha);
    std::vector<long long> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        long long a = detail::surd_floor(s);
        out.push_back(a);
        s = detail::surd_step(s, a);
    }
    return out;
}

/// Effective badly-approximable constant: C with |alpha l + k| > 1/(C |l|) for
/// all integers (k,l), l != 0.  Computed from the maximal partial quotient of
/// the (eventually periodic) continued fraction, with a factor-2 margin.
inline double approx_constant(const QuadraticNumber& alpha) {
    auto s = detail::surd_of(alpha);
    std::map<detail::SurdState, int> seen;
    long long amax = 1;
    for (int i = 0; i < 512; ++i) {
        if (i > 0) { // a_0 is the integer part, not a quotient of the tail
            auto it = seen.find(s);
            if (it != seen.end()) break;
            seen[s] = i;
        }
        long long a = detail::surd_floor(s);
        if (i > 0 && a > amax) amax = a;
        s = detail::surd_step(s, a);
    }
    return 2.0 * (static_cast<double>(amax) + 2.0);
}

} // namespace ellcot

#endif
