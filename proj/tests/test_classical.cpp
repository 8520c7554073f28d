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

#include "ellcot/classical.hpp"

using namespace ellcot;

TEST_CASE("bernoulli numbers by recurrence") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(-1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    for (int k = 3; k < 64; k += 2) CHECK(bernoulli_number(k) == 0);
    CHECK_THROWS_AS(bernoulli_number(65), capacity_error);
}

TEST_CASE("bernoulli polynomials and periodic variant") {
    CHECK(bernoulli_poly(1, 0.5) == doctest::Approx(0.0));
    CHECK(periodic_bernoulli(1, 0.5) == doctest::Approx(0.0));
    CHECK(bernoulli_poly(2, 0.0) == doctest::Approx(1.0 / 6));
    double x = 0.25;
    CHECK(periodic_bernoulli(3, 2.25) ==
          doctest::Approx(x * x * x - 1.5 * x * x + 0.5 * x).epsilon(1e-14));
    // sawtooth convention at integers
    CHECK(periodic_bernoulli(1, 3.0) == 0.0);
    CHECK(periodic_bernoulli(1, 0.25) == doctest::Approx(-0.25));
}

TEST_CASE("Raabe distribution for periodic Bernoulli") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int c : {2, 3, 5}) {
        for (int m = 0; m <= 6; ++m) {
            for (int t = 0; t < 20; ++t) {
                double y = u(rng);
                double lhs = 0;
                for (int j = 0; j < c; ++j) lhs += periodic_bernoulli(m, (j + y) / c);
                double rhs = std::pow(c, 1 - m) * periodic_bernoulli(m, y);
                CHECK(std::abs(lhs - rhs) < 1e-11);
            }
        }
    }
}

TEST_CASE("clausen values") {
    CHECK(clausen(3, 0.0) == doctest::Approx(riemann_zeta<double>(3)).epsilon(1e-14));
    CHECK(clausen(2, 0.0) == 0.0);
    CHECK(clausen(2, 1.0) == 0.0);
    // alternating-series oracle: cos(pi m) = (-1)^m
    CHECK(clausen(3, 0.5) == doctest::Approx(-0.75 * riemann_zeta<double>(3)).epsilon(1e-11));
    // exact periodicity by construction (dyadic x so that x+1 is exact)
    CHECK(clausen(4, 0.375 + 1.0) == clausen(4, 0.375));
    CHECK(clausen(4, 1.37) == doctest::Approx(clausen(4, 0.37)).epsilon(1e-14));
    CHECK_THROWS_AS(clausen(1, 0.3), domain_error);
}

TEST_CASE("gen_dr_sum against brute force") {
    // d(r) = 1 reduces to a single term
    double y = 0.37, x = 0.81;
    CHECK(gen_dr_sum(2, 3, Rational(4), x, y) ==
          doctest::Approx(periodic_bernoulli(2, y) * periodic_bernoulli(3, 4 * y - x)));
    // explicit 3-term j-loop
    {
        double xx = 0.2, yy = 0.4;
        double brute = 0;
        for (int j = 0; j < 3; ++j)
            brute += periodic_bernoulli(1, (j + yy) / 3.0) * periodic_bernoulli(1, (j + yy) / 3.0 - xx);
        CHECK(gen_dr_sum(1, 1, Rational(1, 3), xx, yy) == doctest::Approx(brute));
    }
    {
        double xx = 0.1, yy = 0.7;
        double brute = 0;
        for (int j = 0; j < 5; ++j)
            brute += periodic_bernoulli(2, (j + yy) / 5.0) * periodic_bernoulli(0, 2 * (j + yy) / 5.0 - xx);
        CHECK(gen_dr_sum(2, 0, Rational(2, 5), xx, yy) == doctest::Approx(brute));
    }
}

TEST_CASE("classical Dedekind sum via gen_dr_sum") {
    // S_{1,1}(1/q,0,0) = sum_j B~1(j/q)^2 = s(1,q) = (q-1)(q-2)/(12q)
    for (int q : {2, 3, 5, 7}) {
        double textbook = (q - 1.0) * (q - 2.0) / (12.0 * q);
        double ours = gen_dr_sum(1, 1, Rational(1, q), 0.0, 0.0);
        CHECK(ours == doctest::Approx(textbook).epsilon(1e-12));
    }
}

TEST_CASE("cotangent_sum brute force and invariance") {
    // r = 1/2, x = y = 0: the j = 0 term is excluded, j = 1 contributes 0
    CHECK(cotangent_sum(Rational(1, 2), 0.0, 0.0) == doctest::Approx(0.0));
    {
        double x = 0.2, y = 0.4;
        double brute = 0;
        for (int j = 0; j < 3; ++j) {
            double u = (j + y) / 3.0, v = (j + y) / 3.0 - x;
            brute += std::cos(M_PI * u) / std::sin(M_PI * u) * std::cos(M_PI * v) / std::sin(M_PI * v);
        }
        brute /= 3.0;
        CHECK(cotangent_sum(Rational(1, 3), x, y) == doctest::Approx(brute).epsilon(1e-13));
        // invariance under y -> y + d(r)
        CHECK(cotangent_sum(Rational(1, 3), x, y + 3.0) ==
              doctest::Approx(cotangent_sum(Rational(1, 3), x, y)).epsilon(1e-12));
    }
    // the concrete excluded-term case r=2/3, x=1/3, y=1: only j=0 survives
    double v = cotangent_sum(Rational(2, 3), 1.0 / 3, 1.0);
    double c3 = std::cos(M_PI / 3) / std::sin(M_PI / 3);
    CHECK(v == doctest::Approx(c3 * c3 / 3.0).epsilon(1e-13));
}

TEST_CASE("rational_parts normalization") {
    auto p = rational_parts(Rational(3, 6));
    CHECK(p.num == 1);
    CHECK(p.den == 2);
    p = rational_parts(Rational(-4, 6));
    CHECK(p.num == -2);
    CHECK(p.den == 3);
    p = rational_parts(Rational(0));
    CHECK(p.num == 0);
    CHECK(p.den == 1);
}
