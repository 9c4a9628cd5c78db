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

// Dense linear algebra for registers of at most four qubits.
//
// Qubit 0 is the most significant bit of a basis index, so the amplitude of
// |q0 q1 ... q(n-1)> sits at index q0*2^(n-1) + ... + q(n-1). This matches
// the left-to-right reading of kets such as |01>.

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace hladder {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxPureQubits = 4;
inline constexpr std::size_t kMaxMixedQubits = 2;

/// Normalized state vector on 1 to 4 qubits.
class PureRegister {
 public:
  /// Normalizes `amplitudes`. Throws std::invalid_argument when the length is
  /// not 2^n for n in [1, 4] or the vector is zero.
  explicit PureRegister(Eigen::VectorXcd amplitudes);
  PureRegister(std::initializer_list<Complex> amplitudes);

  static PureRegister basis_state(std::size_t num_qubits, std::size_t index);
  /// cos(angle)|0> + sin(angle)|1>.
  static PureRegister real_state(double angle);
  /// Tensor product of single- or multi-qubit factors, left factor is qubit 0.
  static PureRegister product(std::span<const PureRegister> factors);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t index) const { return amplitudes_(static_cast<Eigen::Index>(index)); }
  double norm() const { return amplitudes_.norm(); }

  PureRegister tensor(const PureRegister& other) const;

 private:
  std::size_t num_qubits_;
  Eigen::VectorXcd amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix on 1 or 2 qubits.
class DensityMatrix {
 public:
  /// Throws std::invalid_argument when the shape is wrong or the matrix is
  /// not Hermitian with unit trace (tolerance 1e-10).
  explicit DensityMatrix(Eigen::MatrixXcd matrix);

  static DensityMatrix from_pure(const PureRegister& state);
  /// (I + x X + y Y + z Z) / 2; the Bloch vector must have length <= 1.
  static DensityMatrix from_bloch(double x, double y, double z);

  std::size_t num_qubits() const { return num_qubits_; }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  double trace() const { return matrix_.trace().real(); }
  double min_eigenvalue() const;
  /// Only defined for one qubit.
  std::array<double, 3> bloch_vector() const;

  DensityMatrix tensor(const DensityMatrix& other) const;

 private:
  std::size_t num_qubits_;
  Eigen::MatrixXcd matrix_;
};

/// Clifford gate set used by the circuits in this library.
enum class GateKind { kH, kX, kY, kZ, kS, kSdg, kCnot, kCz };

struct Gate {
  GateKind kind;
  /// qubits[0] is the acting qubit (or control); qubits[1] is the target for
  /// two-qubit gates and unused otherwise.
  std::array<std::size_t, 2> qubits{0, 0};

  static Gate h(std::size_t q) { return {GateKind::kH, {q, 0}}; }
  static Gate x(std::size_t q) { return {GateKind::kX, {q, 0}}; }
  static Gate y(std::size_t q) { return {GateKind::kY, {q, 0}}; }
  static Gate z(std::size_t q) { return {GateKind::kZ, {q, 0}}; }
  static Gate s(std::size_t q) { return {GateKind::kS, {q, 0}}; }
  static Gate sdg(std::size_t q) { return {GateKind::kSdg, {q, 0}}; }
  static Gate cnot(std::size_t control, std::size_t target) { return {GateKind::kCnot, {control, target}}; }
  static Gate cz(std::size_t a, std::size_t b) { return {GateKind::kCz, {a, b}}; }

  std::size_t arity() const { return kind == GateKind::kCnot || kind == GateKind::kCz ? 2 : 1; }
};

std::string_view gate_name(GateKind kind);

/// 2x2 or 4x4 unitary of a gate kind, two-qubit gates in the |control target> basis.
Eigen::MatrixXcd gate_unitary(GateKind kind);

/// Largest deviation of G^dagger G from identity over all gate kinds.
double gate_table_unitarity_error();

/// Full 2^n x 2^n operator of `gate` acting inside an n-qubit register.
Eigen::MatrixXcd embed_gate(std::size_t num_qubits, const Gate& gate);

PureRegister apply_gate(const PureRegister& reg, const Gate& gate);
DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& gate);
PureRegister apply_circuit(PureRegister reg, std::span<const Gate> circuit);

/// Outcome split of a computational-basis measurement. Post-states have the
/// measured qubit removed; they are empty when the branch has probability
/// zero or no qubit would remain.
struct PureMeasurement {
  double prob0 = 0;
  std::optional<PureRegister> post0;
  double prob1 = 0;
  std::optional<PureRegister> post1;
};

struct MixedMeasurement {
  double prob0 = 0;
  std::optional<DensityMatrix> post0;
  double prob1 = 0;
  std::optional<DensityMatrix> post1;
};

PureMeasurement measure_qubit(const PureRegister& reg, std::size_t qubit);
MixedMeasurement measure_qubit(const DensityMatrix& rho, std::size_t qubit);

/// D(r, s) = 1/2 tr|r - s|. Throws std::invalid_argument on a dimension mismatch.
double trace_distance(const DensityMatrix& r, const DensityMatrix& s);

/// |<a|b>| = 1 within `tol`, i.e. equal up to global phase.
bool equal_up_to_phase(const PureRegister& a, const PureRegister& b, double tol = 1e-10);

/// Single-qubit state reduced modulo single-qubit Cliffords.
///
/// Cliffords permute the Bloch axes up to sign, so sorting the absolute Bloch
/// components as a >= b >= c gives an invariant. A state Clifford-equivalent
/// to cos(t)|0> + sin(t)|1> has c = 0 and angle = atan2(b, a)/2, which is t
/// folded into [0, pi/8] (t and pi/4 - t are related by a Hadamard).
struct CanonicalAngle {
  double angle;      ///< t in [0, pi/8]
  double off_plane;  ///< c; zero for states in a Clifford image of the XZ plane
};

CanonicalAngle canonical_state_angle(const PureRegister& single_qubit);

enum class Pauli : unsigned char { kI, kX, kY, kZ };

/// Signed tensor product of single-qubit Paulis, qubit 0 first.
class PauliString {
 public:
  PauliString(int sign, std::vector<Pauli> letters);

  /// Accepts an optional leading '+' or '-', then one of I X Y Z per qubit;
  /// '.' and '_' are read as I. Example: "+XZX.".
  static PauliString parse(std::string_view text);

  int sign() const { return sign_; }
  std::size_t num_qubits() const { return letters_.size(); }
  const std::vector<Pauli>& letters() const { return letters_; }
  std::size_t weight() const;

  /// Symplectic test: the strings commute iff they differ non-trivially on an
  /// even number of qubits.
  bool commutes_with(const PauliString& other) const;

  Eigen::MatrixXcd matrix() const;
  std::string str() const;

  bool operator==(const PauliString&) const = default;

 private:
  int sign_;
  std::vector<Pauli> letters_;
};

/// Result of projecting a register onto the joint +1 eigenspace of a set of
/// commuting Pauli generators.
struct ProjectorOverlap {
  /// || prod_k (I + s_k)/2 |input> ||^2.
  double probability = 0;
  /// Logical qubit read out with Zbar = Z...Z and the weight-minimal Xbar;
  /// empty when the code has no logical qubit or the projection vanishes.
  std::optional<PureRegister> decoded;
  std::optional<PauliString> logical_x;
};

/// Throws std::invalid_argument if generators do not pairwise commute, are
/// dependent, or their qubit count differs from the input's.
ProjectorOverlap pauli_projector_overlap(std::span<const PauliString> generators, const PureRegister& input);

}  // namespace hladder
