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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hladder/factories.h"
#include "hladder/ladder.h"
#include "hladder/quantum_core.h"
#include "oracles.h"
#include "published_tables.h"

namespace hladder {
namespace {

constexpr Family kFactories[] = {Family::kPsi0, Family::kPsi1, Family::kPsi2};

double printed_probability(Family f) {
  switch (f) {
    case Family::kPsi0: return 3 * (2 + std::numbers::sqrt2) / 32;
    case Family::kPsi1: return (6 + std::numbers::sqrt2) / 32;
    default: return 11.0 / 32;
  }
}

TEST(Factory, HasNoHFactory) {
  EXPECT_THROW(factory_spec(Family::kH), std::invalid_argument);
  EXPECT_THROW(factory_code_generators(Family::kH), std::invalid_argument);
}

TEST(Factory, CircuitProbabilityEqualsClosedForm) {
  for (Family f : kFactories) {
    EXPECT_NEAR(simulate_factory_circuit(f).success_prob, printed_probability(f), 1e-10) << family_name(f);
    EXPECT_NEAR(factory_success_probability(f), printed_probability(f), 1e-15);
  }
}

TEST(Factory, AverageCosts) {
  EXPECT_NEAR(factory_average_cost(Family::kPsi0), 12.50, 0.005 * 12.50);
  EXPECT_NEAR(factory_average_cost(Family::kPsi1), 12.95, 0.005 * 12.95);
  EXPECT_NEAR(factory_average_cost(Family::kPsi2), 11.64, 0.005 * 11.64);
  for (Family f : kFactories) {
    const auto& s = factory_spec(f);
    EXPECT_NEAR(s.avg_cost_closed_form, s.h_inputs_per_trial / s.success_prob_closed_form, 1e-12);
    EXPECT_GT(s.success_prob_closed_form, 0);
    EXPECT_LT(s.success_prob_closed_form, 1);
  }
  EXPECT_EQ(factory_spec(Family::kPsi1).h_inputs_per_trial, 3);
}

TEST(Factory, OutputAnglesAreHalfThePrintedRotations) {
  EXPECT_NEAR(factory_output_angle(Family::kPsi0), 0.2228, 1e-4);
  EXPECT_NEAR(factory_output_angle(Family::kPsi1), 0.2849, 1e-4);
  EXPECT_NEAR(factory_output_angle(Family::kPsi2), 0.3449, 1e-4);
  for (int j = 0; j < 3; ++j) {
    const double rot = 2 * factory_output_angle(kFactories[j]);
    EXPECT_NEAR(rot, oracle::psi_base_rotation(j), 1e-14);
    EXPECT_TRUE(testing::matches_four_figures(rot, testing::kTablePsi[j][0]));
  }
}

TEST(Factory, CircuitOutputAngle) {
  for (Family f : kFactories) {
    const auto branch = simulate_factory_circuit(f);
    ASSERT_EQ(branch.output.num_qubits(), 1u);
    const auto c = canonical_state_angle(branch.output);
    EXPECT_NEAR(c.angle, factory_output_angle(f), 1e-10) << family_name(f);
    EXPECT_NEAR(c.off_plane, 0, 1e-10);
  }
}

TEST(Factory, ProjectorOracleAgrees) {
  for (Family f : kFactories) {
    const FactoryReport r = verify_factory_against_code(f);
    EXPECT_TRUE(r.ok()) << family_name(f) << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_NEAR(r.projector_prob, printed_probability(f), 1e-10);
    EXPECT_NEAR(r.decoded_angle, r.circuit_angle, 1e-10);
  }
}

TEST(Factory, GeneratorsCommute) {
  for (Family f : kFactories) {
    const auto g = factory_code_generators(f);
    for (const auto& a : g) {
      for (const auto& b : g) EXPECT_TRUE(a.commutes_with(b));
    }
  }
  EXPECT_EQ(factory_code_generators(Family::kPsi0)[0], PauliString::parse("+XZXI"));
}

TEST(Factory, MonteCarloSuccessFrequency) {
  for (Family f : kFactories) {
    Rng rng(77);
    const int n = 100000;
    int ok = 0;
    for (int k = 0; k < n; ++k) {
      const FactoryRun run = run_factory(f, rng);
      EXPECT_EQ(run.h_spent, factory_spec(f).h_inputs_per_trial);
      EXPECT_EQ(run.success, run.output.has_value());
      if (run.success) {
        ++ok;
        if (ok < 20) {
          EXPECT_NEAR(canonical_state_angle(*run.output).angle, factory_output_angle(f), 1e-10);
        }
      }
    }
    const double p = printed_probability(f);
    EXPECT_NEAR(static_cast<double>(ok) / n, p, 4 * std::sqrt(p * (1 - p) / n)) << family_name(f);
  }
}

// A factory output merged with a fresh |H> climbs to the printed level-1 rotation.
TEST(Factory, FeedsTheLadder) {
  const PureRegister h0 = h_state();
  for (int j = 0; j < 3; ++j) {
    const auto out = simulate_factory_circuit(kFactories[j]).output;
    const PureRegister rung = PureRegister::real_state(canonical_state_angle(out).angle);
    const auto m = measure_qubit(apply_gate(h0.tensor(rung), Gate::cnot(1, 0)), 0);
    ASSERT_TRUE(m.post0.has_value());
    const double rot = 2 * canonical_state_angle(*m.post0).angle;
    EXPECT_NEAR(rot, testing::kTablePsi[j][1], 5e-4);
    EXPECT_NEAR(rot, rotation_angle(kFactories[j], 1), 1e-12);
  }
}

}  // namespace
}  // namespace hladder
