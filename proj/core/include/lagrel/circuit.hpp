#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "lagrel/affine.hpp"

namespace lagrel {

struct OpF {
  std::size_t i;
};
struct OpFinv {
  std::size_t i;
};
struct OpS {
  Scalar a;
  std::size_t i;
};
struct OpV {
  Scalar a;
  std::size_t i;
};
struct OpC {
  Scalar a;
  std::size_t i, j;
};
struct OpDiscard {
  Scalar a;
  std::size_t i;
};
struct OpZero {
  std::size_t i;
};
struct OpXShift {
  Scalar a;
  std::size_t i;
};
struct OpZShift {
  Scalar a;
  std::size_t i;
};
struct OpPost {
  std::size_t i;
};

using Op = std::variant<OpF, OpFinv, OpS, OpV, OpC, OpDiscard, OpZero,
                        OpXShift, OpZShift, OpPost>;

// A sequence of operations on `wires` rails.  A rail whose first
// operation is a preparation starts fresh; every other rail is an open
// input.  Discards and postselections retire a rail, after which it may
// be prepared again.
struct Circuit {
  Field field;
  std::size_t wires = 0;
  std::vector<Op> ops;
};

struct EvaluatedCircuit {
  AffineGradedRelation relation;
  // Rails serving as open inputs and as surviving outputs, both ascending;
  // relation wires are ordered accordingly.
  std::vector<std::size_t> dom_rails;
  std::vector<std::size_t> cod_rails;
};

EvaluatedCircuit evaluate(const Circuit& c);

bool operator==(const Op& a, const Op& b);

}  // namespace lagrel
