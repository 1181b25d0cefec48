#pragma once

#include "tq/matrix.hpp"

namespace tq {

// Canonical basis order: |11>, |10>, |01>, |00>.
// Collective basis order: |e>, |s>, |a>, |g> with
//   |e> = |11>, |g> = |00>, |s> = (|10>+|01>)/sqrt2, |a> = (|10>-|01>)/sqrt2.
enum class Basis { Canonical, Collective };

// Collective-state positions inside a collective-basis matrix.
inline constexpr int kE = 0;
inline constexpr int kS = 1;
inline constexpr int kA = 2;
inline constexpr int kG = 3;

// Unitary whose columns are |e>,|s>,|a>,|g> in canonical coordinates;
// maps collective coordinates to canonical ones.
const Mat4& collective_to_canonical();

// The singlet |a> in canonical coordinates.
const Vec4& singlet_ket();

const char* basis_name(Basis b);

}  // namespace tq
