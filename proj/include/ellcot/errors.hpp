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
#ifndef ELLCOT_ERRORS_HPP
#define ELLCOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ellcot {

/// Base class for all ellcot errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside the mathematical domain of an operation
/// (rational alpha, character vector on Z^2, s out of range, ...).
struct domain_error : error {
    explicit domain_error(const std::string& what) : error(what) {}
};

/// Evaluation point too close to (or exactly on) a pole lattice.
struct pole_error : error {
    explicit pole_error(const std::string& what) : error(what) {}
};

/// A value would overflow or the series terms are not representable.
struct range_error : error {
    explicit range_error(const std::string& what) : error(what) {}
};

/// A configured capacity (table bound, search cap, integer width) was exceeded.
struct capacity_error : error {
    explicit capacity_error(const std::string& what) : error(what) {}
};

/// Argument outside the convergence radius of a series expansion.
struct radius_error : error {
    explicit radius_error(const std::string& what) : error(what) {}
};

} // namespace ellcot

#endif
