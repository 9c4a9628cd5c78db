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

#include "hladder/factories.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hladder {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

// Gate sequences read column by column off the published circuit drawings.
std::vector<Gate> psi0_circuit() {
  return {
      Gate::h(0),       Gate::h(2),     Gate::cnot(1, 2), Gate::cnot(2, 0),
      Gate::cnot(1, 3), Gate::h(1),     Gate::cz(2, 3),   Gate::cnot(0, 3),
      Gate::h(2),
  };
}

std::vector<Gate> psi2_circuit() {
  return {
      Gate::cnot(2, 1), Gate::cnot(0, 3), Gate::cnot(0, 2), Gate::h(0), Gate::cnot(3, 1), Gate::h(1),
  };
}

FactorySpec make_spec(Family kind) {
  const PureRegister h = h_state();
  const PureRegister plus{1.0, 1.0};
  FactorySpec spec{kind, {}, {}, {0, 0, 0}, 0, 0, 0, 0, 0};
  switch (kind) {
    case Family::kPsi0:
      spec.circuit = psi0_circuit();
      spec.inputs = {h, h, h, h};
      spec.measured = {0, 1, 3};
      spec.output_qubit = 2;
      spec.h_inputs_per_trial = 4;
      spec.success_prob_closed_form = 3.0 * (2.0 + kSqrt2) / 32.0;
      // pi/2 - arccot(x) == arctan(x)
      spec.output_state_angle = 0.5 * std::atan((2.0 + 3.0 * kSqrt2) / (6.0 + 5.0 * kSqrt2));
      break;
    case Family::kPsi1:
      spec.circuit = psi0_circuit();
      spec.inputs = {h, plus, h, h};
      spec.measured = {0, 1, 3};
      spec.output_qubit = 2;
      spec.h_inputs_per_trial = 3;
      spec.success_prob_closed_form = (6.0 + kSqrt2) / 32.0;
      spec.output_state_angle = 0.5 * std::atan(2.0 * kSqrt2 / (3.0 + kSqrt2));
      break;
    case Family::kPsi2:
      spec.circuit = psi2_circuit();
      spec.inputs = {h, h, h, h};
      spec.measured = {0, 2, 3};
      spec.output_qubit = 1;
      spec.h_inputs_per_trial = 4;
      spec.success_prob_closed_form = 11.0 / 32.0;
      spec.output_state_angle = 0.5 * std::atan(7.0 / (6.0 * kSqrt2));
      break;
    case Family::kH:
      throw std::invalid_argument("the H family has no factory");
  }
  spec.avg_cost_closed_form = spec.h_inputs_per_trial / spec.success_prob_closed_form;
  return spec;
}

// Measured wires in descending order so earlier removals do not shift later indices.
std::array<std::size_t, 3> descending(std::array<std::size_t, 3> wires) {
  std::sort(wires.begin(), wires.end(), std::greater<>());
  return wires;
}

PureRegister prepared_state(const FactorySpec& spec) {
  return apply_circuit(PureRegister::product(spec.inputs), spec.circuit);
}

}  // namespace

PureRegister h_state() { return PureRegister::real_state(std::numbers::pi / 8.0); }

const FactorySpec& factory_spec(Family kind) {
  static const std::array<FactorySpec, 3> specs = {make_spec(Family::kPsi0), make_spec(Family::kPsi1),
                                                   make_spec(Family::kPsi2)};
  switch (kind) {
    case Family::kPsi0: return specs[0];
    case Family::kPsi1: return specs[1];
    case Family::kPsi2: return specs[2];
    case Family::kH: break;
  }
  throw std::invalid_argument("the H family has no factory");
}

double factory_output_angle(Family kind) { return factory_spec(kind).output_state_angle; }
double factory_success_probability(Family kind) { return factory_spec(kind).success_prob_closed_form; }
double factory_average_cost(Family kind) { return factory_spec(kind).avg_cost_closed_form; }

std::vector<PauliString> factory_code_generators(Family kind) {
  switch (kind) {
    case Family::kPsi0:
    case Family::kPsi1:
      return {PauliString::parse("+XZX."), PauliString::parse("+.XZX"), PauliString::parse("+X.XZ")};
    case Family::kPsi2:
      return {PauliString::parse("+XXXX"), PauliString::parse("+Z.Z."), PauliString::parse("+Z..Z")};
    case Family::kH:
      break;
  }
  throw std::invalid_argument("the H family has no factory");
}

FactoryBranch simulate_factory_circuit(Family kind) {
  const FactorySpec& spec = factory_spec(kind);
  PureRegister state = prepared_state(spec);
  double prob = 1.0;
  for (std::size_t wire : descending(spec.measured)) {
    PureMeasurement m = measure_qubit(state, wire);
    prob *= m.prob0;
    if (!m.post0) throw std::logic_error("factory post-selection branch has zero probability");
    state = *m.post0;
  }
  return {prob, state};
}

FactoryRun run_factory(Family kind, Rng& rng) {
  const FactorySpec& spec = factory_spec(kind);
  FactoryRun run;
  run.h_spent = spec.h_inputs_per_trial;
  PureRegister state = prepared_state(spec);
  for (std::size_t wire : descending(spec.measured)) {
    PureMeasurement m = measure_qubit(state, wire);
    if (!rng.bernoulli(m.prob0)) return run;
    state = *m.post0;
  }
  run.success = true;
  run.output = state;
  return run;
}

FactoryReport verify_factory_against_code(Family kind, double tol) {
  const FactorySpec& spec = factory_spec(kind);
  FactoryReport report;
  report.kind = kind;
  report.closed_form_prob = spec.success_prob_closed_form;
  report.closed_form_angle = spec.output_state_angle;

  const std::vector<PauliString> generators = factory_code_generators(kind);
  const ProjectorOverlap overlap = pauli_projector_overlap(generators, PureRegister::product(spec.inputs));
  const FactoryBranch branch = simulate_factory_circuit(kind);
  report.projector_prob = overlap.probability;
  report.circuit_prob = branch.success_prob;

  auto fail = [&](const std::string& what, double a, double b) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": " << a << " vs " << b;
    report.failures.push_back(os.str());
  };

  if (std::abs(report.projector_prob - report.circuit_prob) > tol) {
    fail("projector probability vs circuit probability", report.projector_prob, report.circuit_prob);
  }
  if (std::abs(report.circuit_prob - report.closed_form_prob) > tol) {
    fail("circuit probability vs closed form", report.circuit_prob, report.closed_form_prob);
  }
  if (!overlap.decoded) {
    report.failures.push_back("code projection produced no logical state");
    return report;
  }
  const CanonicalAngle decoded = canonical_state_angle(*overlap.decoded);
  const CanonicalAngle produced = canonical_state_angle(branch.output);
  report.decoded_angle = decoded.angle;
  report.circuit_angle = produced.angle;
  if (decoded.off_plane > tol || produced.off_plane > tol) {
    fail("state is not Clifford-equivalent to a real state (off-plane component)", decoded.off_plane, produced.off_plane);
  }
  if (std::abs(decoded.angle - produced.angle) > tol) fail("decoded angle vs circuit angle", decoded.angle, produced.angle);
  if (std::abs(produced.angle - report.closed_form_angle) > tol) {
    fail("circuit angle vs closed form", produced.angle, report.closed_form_angle);
  }
  return report;
}

}  // namespace hladder
