#pragma once

#include <string>
#include <string_view>

#include "tq/states.hpp"

namespace tq {

// Grammar (whitespace-insensitive, angles in radians, decimal literals):
//   e | g | s | a
//   product:thetaA,phiA,thetaB,phiB
//   gibbs:T0
//   maxent:a,theta1,theta2
//   xclass:x,z
//   eta:eta
//   file:PATH
// Throws SpecParseError (with position) on syntax errors and ConstraintError
// (naming the parameter) on out-of-range values.
StateSpec parse_state_spec(std::string_view text);

// Canonical textual form; parse_state_spec(spec_to_string(s)) reproduces s.
std::string spec_to_string(const StateSpec& spec);

}  // namespace tq
