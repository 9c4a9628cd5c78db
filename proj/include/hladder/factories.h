// Copyright 2026 The hladder Authors
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

// Four-qubit Clifford circuits that turn |H> (and one |+>) inputs into the
// psi0, psi1 and psi2 ladder base states by post-selecting on outcome 000.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hladder/family.h"
#include "hladder/quantum_core.h"
#include "hladder/rng.h"

namespace hladder {

struct FactorySpec {
  Family kind;
  std::vector<Gate> circuit;
  /// One single-qubit input per wire, wire 0 first.
  std::vector<PureRegister> inputs;
  std::array<std::size_t, 3> measured;  ///< post-selected on 000
  std::size_t output_qubit;
  int h_inputs_per_trial;
  double success_prob_closed_form;
  double avg_cost_closed_form;  ///< |H> per produced state
  double output_state_angle;    ///< half the implementable rotation
};

/// Throws std::invalid_argument for Family::kH, which has no factory.
const FactorySpec& factory_spec(Family kind);

/// State angle phi of cos(phi)|0> + sin(phi)|1>. The published closed forms
/// are the rotation angles 2*phi.
double factory_output_angle(Family kind);
double factory_success_probability(Family kind);
double factory_average_cost(Family kind);

/// Stabilizer generators the circuit decodes. psi1 reuses the psi0 code.
std::vector<PauliString> factory_code_generators(Family kind);

/// |H> = cos(pi/8)|0> + sin(pi/8)|1>.
PureRegister h_state();

/// Exact post-selected branch of the circuit, computed with measurement chains.
struct FactoryBranch {
  double success_prob;
  PureRegister output;
};
FactoryBranch simulate_factory_circuit(Family kind);

struct FactoryRun {
  bool success = false;
  std::optional<PureRegister> output;  ///< empty on failure (discarded)
  int h_spent = 0;
};

/// One trial: run the circuit, sample each measured qubit, keep the output
/// only when every outcome is 0.
FactoryRun run_factory(Family kind, Rng& rng);

struct FactoryReport {
  Family kind;
  double projector_prob = 0;
  double circuit_prob = 0;
  double closed_form_prob = 0;
  double decoded_angle = 0;
  double circuit_angle = 0;
  double closed_form_angle = 0;
  std::vector<std::string> failures;  ///< empty when every check passed
  bool ok() const { return failures.empty(); }
};

/// Cross-checks the circuit against its stabilizer code: projector overlap vs
/// circuit success probability, and decoded logical state vs circuit output
/// modulo single-qubit Cliffords.
FactoryReport verify_factory_against_code(Family kind, double tol = 1e-10);

}  // namespace hladder
