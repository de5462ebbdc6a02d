// Copyright 2026 The dafact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dafact/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dafact/encoding.hpp"

namespace dafact {

SchedulePoint schedule_eval(double t, double T) {
  if (!(T > 0.0)) throw InvalidInput("schedule_eval: T must be positive");
  const double slack = 1e-9 * std::max(T, 1.0);
  if (t < -slack || t > T + slack) throw InvalidInput("schedule_eval: t outside [0, T]");
  t = std::clamp(t, 0.0, T);

  const double pi = std::numbers::pi;
  const double B = pi * t / (2.0 * T);
  const double sB = std::sin(B);
  const double A = (pi / 2.0) * sB * sB;
  const double sA = std::sin(A);
  SchedulePoint out;
  out.lambda = sA * sA;
  out.lambda_dot = (pi * pi / (4.0 * T)) * std::sin(2.0 * A) * std::sin(2.0 * B);
  return out;
}

}  // namespace dafact
