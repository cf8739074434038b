// Copyright 2026 The qsym Authors
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

namespace qsym {

// Numeric thresholds shared by every check. All defects that vanish in
// exact arithmetic are compared against one of these.
struct Tolerances {
  // Eigenvector residuals, numeric spectrum comparison, sampled twisted
  // relations.
  double residual = 1e-9;
  // Idempotence / symmetry / resolution of identity for eigenprojections.
  double projector = 1e-10;
  // Magic-unitary defects and recovery products.
  double algebraic = 1e-10;
  // Lower bar for calling a commutator norm a noncommutativity certificate.
  double certificate = 1e-2;

  // Overrides every defect threshold, leaving the certificate bar alone.
  static Tolerances uniform(double tol) {
    Tolerances t;
    t.residual = t.projector = t.algebraic = tol;
    return t;
  }
};

}  // namespace qsym
