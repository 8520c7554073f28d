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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ellcot/modular.hpp"

using namespace ellcot;
using C = CDouble;

namespace {
// random SL2(Z) element as a short word in T, T^-1, S
UnimodularMatrix random_sl2(std::mt19937& rng, int max_entry) {
    std::uniform_int_distribution<int> pick(0, 2);
    for (;;) {
        UnimodularMatrix V = UnimodularMatrix::I();
        std::uniform_int_distribution<int> len(1, 12);
        int n = len(rng);
        for (int i = 0; i < n; ++i) {
            switch (pick(rng)) {
                case 0: V = V * UnimodularMatrix::T(); break;
                case 1: V = V * UnimodularMatrix::Tinv(); break;
                default: V = V * UnimodularMatrix::S(); break;
            }
        }
        if (std::llabs(V.a) <= max_entry && std::llabs(V.b) <= max_entry &&
            std::llabs(V.c) <= max_entry && std::llabs(V.d) <= max_entry)
            return V;
    }
}
} // namespace

TEST_CASE("UnimodularMatrix construction enforces det = 1") {
    CHECK_NOTHROW(UnimodularMatrix(2, 1, 1, 1));
    CHECK_THROWS_AS(UnimodularMatrix(2, 1, 1, 2), domain_error);
    CHECK_THROWS_AS(UnimodularMatrix(1, 0, 0, -1), domain_error);
}

TEST_CASE("mobius_with_factor examples") {
    // S fixes i
    auto [Sz, jS] = mobius_with_factor(UnimodularMatrix::S(), C(0, 1));
    CHECK(std::abs(Sz - C(0, 1)) < 1e-15);
    CHECK(std::abs(jS - C(0, 1)) < 1e-15);
    // T translates
    auto [Tz, jT] = mobius_with_factor(UnimodularMatrix::T(), C(0.3, 0.7));
    CHECK(std::abs(Tz - C(1.3, 0.7)) < 1e-15);
    CHECK(std::abs(jT - C(1, 0)) < 1e-15);
    // exact action on sqrt(2)
    QuadraticNumber r2(0, 1, 2, 1);
    auto [Vr, jV] = mobius_with_factor(UnimodularMatrix(2, 1, 1, 1), r2);
    // (2 sqrt2 + 1)/(sqrt2 + 1) = (2 sqrt2 + 1)(sqrt2 - 1) = 3 - sqrt2... checked exactly:
    CHECK(Vr == QuadraticNumber(3, -1, 2, 1));
    CHECK(jV == QuadraticNumber(1, 1, 2, 1));
    CHECK_THROWS_AS(mobius_with_factor(UnimodularMatrix::S(), C(0, 0)), pole_error);
}

TEST_CASE("act_rational examples and consistency") {
    auto r = act_rational(UnimodularMatrix::T(), Rational(2, 3));
    CHECK(r.num == 5);
    CHECK(r.den == 3);
    CHECK(r.sign == 1);
    r = act_rational(UnimodularMatrix::S(), Rational(2, 3));
    CHECK(r.num == -3);
    CHECK(r.den == 2);
    CHECK(r.sign == 1);
    // -I = S^2: sign -1
    r = act_rational(UnimodularMatrix::S() * UnimodularMatrix::S(), Rational(2, 3));
    CHECK(r.num == 2);
    CHECK(r.den == 3);
    CHECK(r.sign == -1);
    CHECK_THROWS_AS(act_rational(UnimodularMatrix::S(), Rational(0)), pole_error);

    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
    for (int i = 0; i < 300; ++i) {
        UnimodularMatrix V = random_sl2(rng, 40);
        Rational rr(num(rng), den(rng));
        if (Rational(V.c) * rr + Rational(V.d) == 0) continue;
        auto act = act_rational(V, rr);
        CHECK(Rational(act.num, act.den) == act.vr); // n(Vr)/d(Vr) = mobius(V,r)
    }
}

TEST_CASE("numerator-denominator bilinear identity") {
    // n(r) eta - d(r) xi = sgn(j(V;r)) (n(Vr)(c xi + d eta) - d(Vr)(a xi + b eta))
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (int i = 0; i < 300; ++i) {
        UnimodularMatrix V = random_sl2(rng, 30);
        Rational r(num(rng), den(rng));
        if (Rational(V.c) * r + Rational(V.d) == 0) continue;
        Rational xi(num(rng), den(rng)), eta(num(rng), den(rng));
        auto [nr, dr] = rational_parts(r);
        auto act = act_rational(V, r);
        Rational lhs = Rational(nr) * eta - Rational(dr) * xi;
        Rational rhs = Rational(act.sign) * (Rational(act.num) * (Rational(V.c) * xi + Rational(V.d) * eta) -
                                             Rational(act.den) * (Rational(V.a) * xi + Rational(V.b) * eta));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("act_char examples and associativity") {
    CharMat<double> M{{0.31, 0.67}, {0.13, 0.44}};
    auto MI = act_char(UnimodularMatrix::I(), M);
    CHECK(MI.xv.xp == M.xv.xp);
    CHECK(MI.yv.x == M.yv.x);
    auto MS = act_char(UnimodularMatrix::S(), M);
    CHECK(MS.xv.xp == doctest::Approx(-0.13));
    CHECK(MS.xv.x == doctest::Approx(-0.44));
    CHECK(MS.yv.xp == doctest::Approx(0.31));
    CHECK(MS.yv.x == doctest::Approx(0.67));

    std::mt19937 rng(86);
    for (int i = 0; i < 100; ++i) {
        UnimodularMatrix V1 = random_sl2(rng, 25), V2 = random_sl2(rng, 25);
        auto lhs = act_char(V2, act_char(V1, M));
        auto rhs = act_char(V2 * V1, M);
        CHECK(lhs.xv.xp == doctest::Approx(rhs.xv.xp));
        CHECK(lhs.yv.x == doctest::Approx(rhs.yv.x));
    }
}

TEST_CASE("admissibility predicates") {
    CharMat<double> M{{0.3, 0.7}, {0.1, 0.4}};
    // V = S: c x + d y = x; admissible iff x not in Z^2
    CHECK(admissible(UnimodularMatrix::S(), M));
    CharMat<double> Mz{{1.0, 2.0}, {0.1, 0.4}};
    CHECK_FALSE(admissible(UnimodularMatrix::S(), Mz));
    // y in Z^2 is never admissible
    CharMat<double> My{{0.3, 0.7}, {0.0, 1.0}};
    CHECK_FALSE(admissible(UnimodularMatrix::T(), My));
    CHECK_FALSE(admissible(UnimodularMatrix::S(), My));
    // M2(r)
    CHECK(admissible_r(Rational(2, 3), M));
    CHECK_FALSE(admissible_r(Rational(2, 3), Mz));
}

TEST_CASE("generator decomposition recomposes exactly") {
    CHECK(decompose_generators(UnimodularMatrix::T()) == std::vector<Gen>{Gen::T});
    CHECK(decompose_generators(UnimodularMatrix::S()) == std::vector<Gen>{Gen::S});
    {
        UnimodularMatrix V(2, 1, 1, 1);
        CHECK(recompose(decompose_generators(V)) == V);
    }
    std::mt19937 rng(20240601);
    for (int i = 0; i < 500; ++i) {
        UnimodularMatrix V = random_sl2(rng, 50);
        auto word = decompose_generators(V);
        CHECK(recompose(word) == V);
    }
}

TEST_CASE("automorphic factor cocycle") {
    std::mt19937 rng(907);
    std::uniform_real_distribution<double> u(-2.0, 2.0), v(0.2, 2.0);
    for (int i = 0; i < 200; ++i) {
        UnimodularMatrix V1 = random_sl2(rng, 30), V2 = random_sl2(rng, 30);
        C z(u(rng), v(rng));
        auto [V1z, j1] = mobius_with_factor(V1, z);
        auto [V2V1z, j2] = mobius_with_factor(V2, V1z);
        auto [Vz, j] = mobius_with_factor(V2 * V1, z);
        CHECK(std::abs(j - j1 * j2) <= 1e-12 * std::abs(j));
        CHECK(std::abs(Vz - V2V1z) <= 1e-10 * (1.0 + std::abs(Vz)));
    }
}
