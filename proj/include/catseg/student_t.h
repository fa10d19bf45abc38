// Copyright 2026 The catseg Authors.
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

#ifndef CATSEG_STUDENT_T_H_
#define CATSEG_STUDENT_T_H_

namespace catseg {

// Regularized incomplete beta function I_x(a, b) for x in [0, 1] and
// a, b > 0, by Lentz's continued fraction. Returns NaN outside the domain.
double RegularizedIncompleteBeta(double x, double a, double b);

// P(|T| >= |t|) for Student's t with `df` degrees of freedom.
double StudentTTwoTailedP(double t, double df);

}  // namespace catseg

#endif  // CATSEG_STUDENT_T_H_
