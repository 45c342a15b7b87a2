#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lagrel/circuit.hpp"

namespace lagrel {

struct GraphForm {
  // Symmetric: the state is {(t, t Z)} for row vectors t.
  Matrix z_block;
  // Wires rotated before elimination, in the order applied.
  std::vector<std::size_t> pregates;
};

// Reduces a Lagrangian state to x block identity, z block symmetric,
// rotating wires whose x column vanishes.
GraphForm graph_form(const GradedRelation& state);

// Preparation circuit for a Lagrangian state: preparations, shears and
// rotations whose evaluation reproduces the state exactly.
std::vector<Op> synthesize(const GradedRelation& state);

// Drops identity gates and cancels adjacent inverse rotation pairs.
void peephole(std::vector<Op>& ops);

struct Purification {
  // Every Lagrangian relation factors as a doubled flat relation followed
  // by weighted discards on trailing codomain wires.
  LinearRelation pure;
  std::vector<std::pair<std::size_t, Scalar>> discards;
};

Purification purify(const GradedRelation& r);

// Applies the recorded discards to doubled(p.pure); purify is a section
// of this map.
GradedRelation reassemble(const Purification& p);

}  // namespace lagrel
