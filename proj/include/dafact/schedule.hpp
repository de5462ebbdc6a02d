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

#pragma once

namespace dafact {

// Interpolation schedule lambda(t) = sin^2[(pi/2) sin^2(pi t / 2T)] with its
// analytic derivative. Both endpoints are stationary: lambda(0) = 0,
// lambda(T) = 1, lambda_dot(0) = lambda_dot(T) = 0, so any term proportional
// to lambda_dot vanishes at t = 0 and t = T. lambda is monotone on [0, T].
struct SchedulePoint {
  double lambda = 0.0;
  double lambda_dot = 0.0;
};

// Requires T > 0 and t in [0, T] (a relative slack of 1e-9 absorbs the
// rounding of t = M*dt accumulations); throws InvalidInput otherwise.
SchedulePoint schedule_eval(double t, double T);

}  // namespace dafact
