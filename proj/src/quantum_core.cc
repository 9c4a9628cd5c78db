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

#include "hladder/quantum_core.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hladder {

namespace {

constexpr double kShapeTol = 1e-10;

std::size_t qubits_for_dimension(Eigen::Index dim, std::size_t max_qubits) {
  for (std::size_t n = 1; n <= max_qubits; ++n) {
    if (dim == (Eigen::Index{1} << n)) return n;
  }
  throw std::invalid_argument("dimension " + std::to_string(dim) + " is not 2^n for n in [1, " +
                              std::to_string(max_qubits) + "]");
}

std::size_t bit_of(std::size_t num_qubits, std::size_t qubit) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

// Index of the basis state of the n-1 remaining qubits after deleting `qubit`.
std::size_t remove_bit(std::size_t index, std::size_t num_qubits, std::size_t qubit) {
  const std::size_t low_bits = num_qubits - 1 - qubit;
  const std::size_t low = index & ((std::size_t{1} << low_bits) - 1);
  const std::size_t high = index >> (low_bits + 1);
  return (high << low_bits) | low;
}

void check_qubit(std::size_t qubit, std::size_t num_qubits) {
  if (qubit >= num_qubits) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range for " +
                            std::to_string(num_qubits) + "-qubit register");
  }
}

const Complex kI{0.0, 1.0};

}  // namespace

// ---------------------------------------------------------------------------
// PureRegister

PureRegister::PureRegister(Eigen::VectorXcd amplitudes)
    : num_qubits_(qubits_for_dimension(amplitudes.size(), kMaxPureQubits)), amplitudes_(std::move(amplitudes)) {
  const double n = amplitudes_.norm();
  if (!(n > 0) || !std::isfinite(n)) throw std::invalid_argument("register amplitudes must be finite and nonzero");
  amplitudes_ /= n;
}

PureRegister::PureRegister(std::initializer_list<Complex> amplitudes)
    : PureRegister(Eigen::Map<const Eigen::VectorXcd>(amplitudes.begin(), static_cast<Eigen::Index>(amplitudes.size()))) {}

PureRegister PureRegister::basis_state(std::size_t num_qubits, std::size_t index) {
  if (num_qubits == 0 || num_qubits > kMaxPureQubits) throw std::invalid_argument("qubit count must be in [1, 4]");
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) throw std::out_of_range("basis index out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureRegister(std::move(v));
}

PureRegister PureRegister::real_state(double angle) { return PureRegister{std::cos(angle), std::sin(angle)}; }

PureRegister PureRegister::product(std::span<const PureRegister> factors) {
  if (factors.empty()) throw std::invalid_argument("empty tensor product");
  PureRegister out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = out.tensor(factors[k]);
  return out;
}

PureRegister PureRegister::tensor(const PureRegister& other) const {
  if (num_qubits_ + other.num_qubits_ > kMaxPureQubits) throw std::invalid_argument("tensor product exceeds 4 qubits");
  const Eigen::Index db = other.amplitudes_.size();
  Eigen::VectorXcd v(amplitudes_.size() * db);
  for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) v.segment(i * db, db) = amplitudes_(i) * other.amplitudes_;
  return PureRegister(std::move(v));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix) : num_qubits_(0), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("density matrix must be square");
  num_qubits_ = qubits_for_dimension(matrix_.rows(), kMaxMixedQubits);
  if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kShapeTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(matrix_.trace() - Complex(1.0)) > kShapeTol) throw std::invalid_argument("density matrix trace is not 1");
  // Remove rounding asymmetry so later eigen-solves see an exactly Hermitian input.
  matrix_ = 0.5 * (matrix_ + matrix_.adjoint()).eval();
}

DensityMatrix DensityMatrix::from_pure(const PureRegister& state) {
  if (state.num_qubits() > kMaxMixedQubits) throw std::invalid_argument("mixed states are limited to 2 qubits");
  return DensityMatrix(state.amplitudes() * state.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::from_bloch(double x, double y, double z) {
  if (x * x + y * y + z * z > 1.0 + 1e-12) throw std::invalid_argument("Bloch vector longer than 1");
  Eigen::MatrixXcd m(2, 2);
  m << 0.5 * (1.0 + z), 0.5 * Complex(x, -y), 0.5 * Complex(x, y), 0.5 * (1.0 - z);
  return DensityMatrix(std::move(m));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

std::array<double, 3> DensityMatrix::bloch_vector() const {
  if (num_qubits_ != 1) throw std::invalid_argument("Bloch vector requires a single qubit");
  const Complex off = matrix_(1, 0);
  return {2.0 * off.real(), 2.0 * off.imag(), (matrix_(0, 0) - matrix_(1, 1)).real()};
}

DensityMatrix DensityMatrix::tensor(const DensityMatrix& other) const {
  if (num_qubits_ + other.num_qubits_ > kMaxMixedQubits) throw std::invalid_argument("mixed states are limited to 2 qubits");
  const Eigen::Index da = matrix_.rows();
  const Eigen::Index db = other.matrix_.rows();
  Eigen::MatrixXcd m(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) m.block(i * db, j * db, db, db) = matrix_(i, j) * other.matrix_;
  }
  return DensityMatrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Gates

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kH: return "H";
    case GateKind::kX: return "X";
    case GateKind::kY: return "Y";
    case GateKind::kZ: return "Z";
    case GateKind::kS: return "S";
    case GateKind::kSdg: return "S_DAG";
    case GateKind::kCnot: return "CNOT";
    case GateKind::kCz: return "CZ";
  }
  return "?";
}

Eigen::MatrixXcd gate_unitary(GateKind kind) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd u;
  switch (kind) {
    case GateKind::kH:
      u.resize(2, 2);
      u << r, r, r, -r;
      break;
    case GateKind::kX:
      u.resize(2, 2);
      u << 0, 1, 1, 0;
      break;
    case GateKind::kY:
      u.resize(2, 2);
      u << 0, -kI, kI, 0;
      break;
    case GateKind::kZ:
      u.resize(2, 2);
      u << 1, 0, 0, -1;
      break;
    case GateKind::kS:
      u.resize(2, 2);
      u << 1, 0, 0, kI;
      break;
    case GateKind::kSdg:
      u.resize(2, 2);
      u << 1, 0, 0, -kI;
      break;
    case GateKind::kCnot:
      u = Eigen::MatrixXcd::Zero(4, 4);
      u(0, 0) = u(1, 1) = u(2, 3) = u(3, 2) = 1;
      break;
    case GateKind::kCz:
      u = Eigen::MatrixXcd::Identity(4, 4);
      u(3, 3) = -1;
      break;
  }
  return u;
}

double gate_table_unitarity_error() {
  double worst = 0;
  for (GateKind k : {GateKind::kH, GateKind::kX, GateKind::kY, GateKind::kZ, GateKind::kS, GateKind::kSdg,
                     GateKind::kCnot, GateKind::kCz}) {
    const Eigen::MatrixXcd u = gate_unitary(k);
    const Eigen::MatrixXcd e = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    worst = std::max(worst, e.cwiseAbs().maxCoeff());
  }
  return worst;
}

Eigen::MatrixXcd embed_gate(std::size_t num_qubits, const Gate& gate) {
  static const bool table_ok = gate_table_unitarity_error() <= 1e-12;
  if (!table_ok) throw std::logic_error("gate table failed its unitarity check");

  check_qubit(gate.qubits[0], num_qubits);
  if (gate.arity() == 2) {
    check_qubit(gate.qubits[1], num_qubits);
    if (gate.qubits[0] == gate.qubits[1]) throw std::invalid_argument("two-qubit gate on a single wire");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  const Eigen::MatrixXcd u = gate_unitary(gate.kind);
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));

  if (gate.arity() == 1) {
    const std::size_t m = bit_of(num_qubits, gate.qubits[0]);
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t in = (col & m) ? 1 : 0;
      for (std::size_t out = 0; out < 2; ++out) {
        const std::size_t row = out ? (col | m) : (col & ~m);
        full(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = u(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in));
      }
    }
    return full;
  }

  const std::size_t ma = bit_of(num_qubits, gate.qubits[0]);
  const std::size_t mb = bit_of(num_qubits, gate.qubits[1]);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t in = ((col & ma) ? 2 : 0) | ((col & mb) ? 1 : 0);
    const std::size_t rest = col & ~(ma | mb);
    for (std::size_t out = 0; out < 4; ++out) {
      const std::size_t row = rest | ((out & 2) ? ma : 0) | ((out & 1) ? mb : 0);
      full(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = u(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in));
    }
  }
  return full;
}

PureRegister apply_gate(const PureRegister& reg, const Gate& gate) {
  return PureRegister(embed_gate(reg.num_qubits(), gate) * reg.amplitudes());
}

DensityMatrix apply_gate(const DensityMatrix& rho, const Gate& gate) {
  const Eigen::MatrixXcd u = embed_gate(rho.num_qubits(), gate);
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

PureRegister apply_circuit(PureRegister reg, std::span<const Gate> circuit) {
  for (const Gate& g : circuit) reg = apply_gate(reg, g);
  return reg;
}

// ---------------------------------------------------------------------------
// Measurement

PureMeasurement measure_qubit(const PureRegister& reg, std::size_t qubit) {
  const std::size_t n = reg.num_qubits();
  check_qubit(qubit, n);
  const std::size_t m = bit_of(n, qubit);
  const std::size_t dim = reg.dimension();

  std::array<Eigen::VectorXcd, 2> branch;
  if (n > 1) {
    branch[0] = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim / 2));
    branch[1] = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim / 2));
  }
  std::array<double, 2> prob{0.0, 0.0};
  for (std::size_t i = 0; i < dim; ++i) {
    const int b = (i & m) ? 1 : 0;
    const Complex a = reg.amplitude(i);
    prob[b] += std::norm(a);
    if (n > 1) branch[b](static_cast<Eigen::Index>(remove_bit(i, n, qubit))) = a;
  }

  PureMeasurement out;
  out.prob0 = prob[0];
  out.prob1 = prob[1];
  if (n > 1) {
    if (prob[0] > 0) out.post0.emplace(std::move(branch[0]));
    if (prob[1] > 0) out.post1.emplace(std::move(branch[1]));
  }
  return out;
}

MixedMeasurement measure_qubit(const DensityMatrix& rho, std::size_t qubit) {
  const std::size_t n = rho.num_qubits();
  check_qubit(qubit, n);
  const std::size_t m = bit_of(n, qubit);
  const std::size_t dim = std::size_t{1} << n;
  const Eigen::MatrixXcd& mat = rho.matrix();

  std::array<Eigen::MatrixXcd, 2> block;
  if (n > 1) {
    block[0] = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim / 2), static_cast<Eigen::Index>(dim / 2));
    block[1] = block[0];
  }
  std::array<double, 2> prob{0.0, 0.0};
  for (std::size_t i = 0; i < dim; ++i) {
    const int bi = (i & m) ? 1 : 0;
    prob[bi] += mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
    if (n == 1) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (((j & m) ? 1 : 0) != bi) continue;
      block[bi](static_cast<Eigen::Index>(remove_bit(i, n, qubit)), static_cast<Eigen::Index>(remove_bit(j, n, qubit))) =
          mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }

  MixedMeasurement out;
  out.prob0 = prob[0];
  out.prob1 = prob[1];
  if (n > 1) {
    if (prob[0] > 0) out.post0.emplace(block[0] / prob[0]);
    if (prob[1] > 0) out.post1.emplace(block[1] / prob[1]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Distances and canonical forms

double trace_distance(const DensityMatrix& r, const DensityMatrix& s) {
  if (r.num_qubits() != s.num_qubits()) throw std::invalid_argument("trace distance of states with different dimensions");
  const Eigen::MatrixXcd d = r.matrix() - s.matrix();
  if (d.rows() == 2) {
    // Closed form keeps full relative precision for nearly equal states.
    const double mean = 0.5 * (d(0, 0).real() + d(1, 1).real());
    const double radius = std::hypot(0.5 * (d(0, 0).real() - d(1, 1).real()), std::abs(d(0, 1)));
    return 0.5 * (std::abs(mean + radius) + std::abs(mean - radius));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(d, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

bool equal_up_to_phase(const PureRegister& a, const PureRegister& b, double tol) {
  if (a.num_qubits() != b.num_qubits()) return false;
  return std::abs(std::abs(a.amplitudes().dot(b.amplitudes())) - 1.0) <= tol;
}

CanonicalAngle canonical_state_angle(const PureRegister& q) {
  if (q.num_qubits() != 1) throw std::invalid_argument("canonical angle requires a single qubit");
  const Complex a = q.amplitude(0);
  const Complex b = q.amplitude(1);
  const Complex cross = std::conj(a) * b;
  std::array<double, 3> v{std::abs(2.0 * cross.real()), std::abs(2.0 * cross.imag()), std::abs(std::norm(a) - std::norm(b))};
  std::sort(v.begin(), v.end(), std::greater<>());
  return {0.5 * std::atan2(v[1], v[0]), v[2]};
}

// ---------------------------------------------------------------------------
// Pauli strings

PauliString::PauliString(int sign, std::vector<Pauli> letters) : sign_(sign), letters_(std::move(letters)) {
  if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("Pauli string sign must be +1 or -1");
  if (letters_.empty()) throw std::invalid_argument("empty Pauli string");
}

PauliString PauliString::parse(std::string_view text) {
  int sign = 1;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign = text.front() == '-' ? -1 : 1;
    text.remove_prefix(1);
  }
  std::vector<Pauli> letters;
  for (char c : text) {
    switch (c) {
      case 'I': case '.': case '_': letters.push_back(Pauli::kI); break;
      case 'X': letters.push_back(Pauli::kX); break;
      case 'Y': letters.push_back(Pauli::kY); break;
      case 'Z': letters.push_back(Pauli::kZ); break;
      case ' ': break;
      default: throw std::invalid_argument(std::string("bad Pauli letter '") + c + "'");
    }
  }
  return PauliString(sign, std::move(letters));
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(std::count_if(letters_.begin(), letters_.end(), [](Pauli p) { return p != Pauli::kI; }));
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (other.num_qubits() != num_qubits()) throw std::invalid_argument("Pauli strings of different lengths");
  // Encode X -> (1,0), Z -> (0,1), Y -> (1,1); symplectic form x.z' + z.x'.
  int form = 0;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    const int x1 = letters_[k] == Pauli::kX || letters_[k] == Pauli::kY;
    const int z1 = letters_[k] == Pauli::kZ || letters_[k] == Pauli::kY;
    const int x2 = other.letters_[k] == Pauli::kX || other.letters_[k] == Pauli::kY;
    const int z2 = other.letters_[k] == Pauli::kZ || other.letters_[k] == Pauli::kY;
    form ^= (x1 & z2) ^ (z1 & x2);
  }
  return form == 0;
}

Eigen::MatrixXcd PauliString::matrix() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1) * static_cast<double>(sign_);
  for (Pauli p : letters_) {
    Eigen::MatrixXcd f = Eigen::MatrixXcd::Identity(2, 2);
    if (p == Pauli::kX) f = gate_unitary(GateKind::kX);
    if (p == Pauli::kY) f = gate_unitary(GateKind::kY);
    if (p == Pauli::kZ) f = gate_unitary(GateKind::kZ);
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = m(i, j) * f;
    }
    m = std::move(next);
  }
  return m;
}

std::string PauliString::str() const {
  std::string s(1, sign_ > 0 ? '+' : '-');
  for (Pauli p : letters_) s += "IXYZ"[static_cast<int>(p)];
  return s;
}

ProjectorOverlap pauli_projector_overlap(std::span<const PauliString> generators, const PureRegister& input) {
  const std::size_t n = input.num_qubits();
  for (const PauliString& g : generators) {
    if (g.num_qubits() != n) throw std::invalid_argument("generator length does not match the register");
  }
  for (std::size_t a = 0; a < generators.size(); ++a) {
    for (std::size_t b = a + 1; b < generators.size(); ++b) {
      if (!generators[a].commutes_with(generators[b])) {
        throw std::invalid_argument("non-commuting generators " + generators[a].str() + " and " + generators[b].str());
      }
    }
  }
  if (generators.size() > n) throw std::invalid_argument("more generators than qubits");

  const auto dim = static_cast<Eigen::Index>(input.dimension());
  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(dim, dim);
  Eigen::MatrixXcd projector = identity;
  for (const PauliString& g : generators) projector = (projector * (identity + g.matrix()) * 0.5).eval();

  const std::size_t logical = n - generators.size();
  const double expected_rank = static_cast<double>(std::size_t{1} << logical);
  if (std::abs(projector.trace().real() - expected_rank) > 1e-9) {
    throw std::invalid_argument("generators are not independent");
  }

  const Eigen::VectorXcd projected = projector * input.amplitudes();
  ProjectorOverlap out;
  out.probability = projected.squaredNorm();
  if (logical == 0) return out;
  if (logical > 1) throw std::invalid_argument("codes with more than one logical qubit are not supported");

  const PauliString logical_z(1, std::vector<Pauli>(n, Pauli::kZ));
  for (const PauliString& g : generators) {
    if (!g.commutes_with(logical_z)) throw std::invalid_argument("Z...Z is not a logical operator of this code");
  }

  // Weight-minimal Xbar, ties broken lexicographically with qubit 0 most significant.
  std::vector<PauliString> candidates;
  const std::size_t total = std::size_t{1} << (2 * n);
  for (std::size_t code = 1; code < total; ++code) {
    std::vector<Pauli> letters(n);
    for (std::size_t k = 0; k < n; ++k) letters[k] = static_cast<Pauli>((code >> (2 * (n - 1 - k))) & 3);
    candidates.emplace_back(1, std::move(letters));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const PauliString& a, const PauliString& b) { return a.weight() < b.weight(); });
  std::optional<PauliString> logical_x;
  for (const PauliString& c : candidates) {
    if (c.commutes_with(logical_z)) continue;
    if (std::all_of(generators.begin(), generators.end(), [&](const PauliString& g) { return c.commutes_with(g); })) {
      logical_x = c;
      break;
    }
  }
  if (!logical_x) throw std::logic_error("no logical X operator found");
  out.logical_x = logical_x;

  const Eigen::MatrixXcd zero_projector = projector * (identity + logical_z.matrix()) * 0.5;
  if (std::abs(zero_projector.trace().real() - 1.0) > 1e-9) throw std::invalid_argument("Z...Z acts trivially on the code");
  Eigen::Index pivot = 0;
  zero_projector.colwise().norm().maxCoeff(&pivot);
  const Eigen::VectorXcd zero_l = zero_projector.col(pivot).normalized();
  const Eigen::VectorXcd one_l = logical_x->matrix() * zero_l;

  if (out.probability > 0) out.decoded.emplace(PureRegister{zero_l.dot(projected), one_l.dot(projected)});
  return out;
}

}  // namespace hladder
