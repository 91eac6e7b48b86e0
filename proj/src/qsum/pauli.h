// Copyright 2026 The qsum authors
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

#ifndef QSUM_PAULI_H
#define QSUM_PAULI_H

#include <array>
#include <cstdint>

namespace qsum {

/// A classical bit. The protocol only ever combines bits with XOR.
using Bit = std::uint8_t;

/// Two classical bits naming a Bell state:
///
///   |B_xy> = (|0,x> + (-1)^y |1,x^1>) / sqrt(2)
///
/// x is the bit-flip component (computational-basis halves differ iff x=1),
/// y is the phase component (diagonal-basis halves differ iff y=1).
/// Component-wise XOR makes the four labels a group isomorphic to Z2 x Z2.
struct BellLabel {
  Bit x = 0;
  Bit y = 0;

  friend constexpr BellLabel operator^(BellLabel a, BellLabel b) {
    return BellLabel{static_cast<Bit>(a.x ^ b.x), static_cast<Bit>(a.y ^ b.y)};
  }
  constexpr bool operator==(const BellLabel&) const = default;
};

/// Index in [0,4): x*2 + y. Used for tallying and (de)serialization.
constexpr int bell_index(BellLabel l) { return l.x * 2 + l.y; }
constexpr BellLabel bell_from_index(int i) {
  return BellLabel{static_cast<Bit>((i >> 1) & 1), static_cast<Bit>(i & 1)};
}

inline constexpr std::array<BellLabel, 4> kAllBellLabels = {
    BellLabel{0, 0}, BellLabel{0, 1}, BellLabel{1, 0}, BellLabel{1, 1}};

/// Single-qubit Pauli operator in the canonical form
///
///   i^phase * Z^z * X^x
///
/// The phase is an exponent of the imaginary unit mod 4 rather than a sign,
/// so that U = ZX composes exactly (ZX * ZX = -I has phase exponent 2).
struct PauliOp {
  std::uint8_t phase = 0;  // exponent of i, mod 4
  Bit z = 0;
  Bit x = 0;

  constexpr bool operator==(const PauliOp&) const = default;

  static constexpr PauliOp identity() { return PauliOp{0, 0, 0}; }
  static constexpr PauliOp pauli_x() { return PauliOp{0, 0, 1}; }
  static constexpr PauliOp pauli_z() { return PauliOp{0, 1, 0}; }
  /// The encoding unitary U = ZX. U^2 = -I.
  static constexpr PauliOp encode_u() { return PauliOp{0, 1, 1}; }
};

/// Canonical-form product p*q. Moving q's X factor past p's Z factor
/// contributes (-1) per commutation (X Z = -Z X), i.e. +2 on the i exponent.
constexpr PauliOp pauli_compose(PauliOp p, PauliOp q) {
  return PauliOp{
      static_cast<std::uint8_t>((p.phase + q.phase + 2 * (p.x & q.z)) & 3),
      static_cast<Bit>(p.z ^ q.z), static_cast<Bit>(p.x ^ q.x)};
}

enum class MeasBasis : std::uint8_t { Computational, Diagonal };

/// One of the four reference states {|0>,|1>,|+>,|->}.
enum class PreparedState : std::uint8_t { Zero, One, Plus, Minus };

inline constexpr std::array<PreparedState, 4> kAllPreparedStates = {
    PreparedState::Zero, PreparedState::One, PreparedState::Plus,
    PreparedState::Minus};

constexpr MeasBasis basis_of(PreparedState s) {
  return (s == PreparedState::Zero || s == PreparedState::One)
             ? MeasBasis::Computational
             : MeasBasis::Diagonal;
}

/// The E encoding: {|0>,|+>} -> 0 and {|1>,|->} -> 1. Applying U XORs 1
/// into this bit, which is what turns the final readout into a sum bit.
constexpr Bit e_bit(PreparedState s) {
  return (s == PreparedState::One || s == PreparedState::Minus) ? 1 : 0;
}

/// Inverse of (basis_of, e_bit): the prepared state in `basis` with E bit `e`.
constexpr PreparedState prepared_state(MeasBasis basis, Bit e) {
  if (basis == MeasBasis::Computational)
    return e ? PreparedState::One : PreparedState::Zero;
  return e ? PreparedState::Minus : PreparedState::Plus;
}

/// i^phase * |state|; the result of pushing a Pauli through a prepared state.
struct PhasedPrepared {
  PreparedState state;
  std::uint8_t phase;  // exponent of i, mod 4
  constexpr bool operator==(const PhasedPrepared&) const = default;
};

/// Applies i^phase Z^z X^x to one of the four prepared states. Both bases are
/// closed under {I, X, Z, U}; the accumulated global phase is returned so
/// oracle comparisons can account for it, but protocol logic never uses it.
PhasedPrepared apply_pauli(PauliOp p, PreparedState s);

/// Residual correction of one teleportation hop: teleporting through a link
/// distributed as |B_ab> with BSM outcome (x,y) leaves Z^{y^b} X^{x^a} on the
/// far qubit. The (-1)^{b*x} prefactor is a global phase and is dropped.
constexpr PauliOp teleport_hop_residual(BellLabel link, BellLabel bsm) {
  return PauliOp{0, static_cast<Bit>(bsm.y ^ link.y),
                 static_cast<Bit>(bsm.x ^ link.x)};
}

/// Bell entanglement swapping: a BSM joining pairs |B_left> and |B_right>
/// with outcome `bsm` collapses the two outer qubits to the label XOR.
constexpr BellLabel entanglement_swap(BellLabel outer_left,
                                      BellLabel outer_right, BellLabel bsm) {
  return outer_left ^ outer_right ^ bsm;
}

enum class Parity : std::uint8_t { Same, Opposite };

/// Measurement parity of the two halves of |B_label> when both are measured
/// in `basis`: computational results agree iff x=0, diagonal iff y=0.
constexpr Parity correlation_expected(BellLabel label, MeasBasis basis) {
  Bit differ = (basis == MeasBasis::Computational) ? label.x : label.y;
  return differ ? Parity::Opposite : Parity::Same;
}

}  // namespace qsum

#endif  // QSUM_PAULI_H
