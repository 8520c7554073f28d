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
#include "ellcot/precision.hpp"

#include <atomic>

namespace ellcot {

namespace {
std::atomic<PrecisionMode> g_mode{PrecisionMode::Double};
std::atomic<double> g_int_tol{1e-9};
} // namespace

PrecisionMode precision_mode() noexcept { return g_mode.load(); }
void set_precision_mode(PrecisionMode mode) noexcept { g_mode.store(mode); }

double integrality_tolerance() noexcept { return g_int_tol.load(); }
void set_integrality_tolerance(double tol) noexcept { g_int_tol.store(tol); }

} // namespace ellcot
