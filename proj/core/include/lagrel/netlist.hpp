#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lagrel/affine.hpp"

namespace lagrel {

enum class NetKind { wire, resistor, inductor, capacitor, vsource, isource };

// Two-terminal element; the component current is measured from a to b.
struct NetComponent {
  NetKind kind;
  Scalar value;
  std::size_t a = 0;
  std::size_t b = 0;
};

struct Netlist {
  std::vector<std::string> nodes;
  std::vector<NetComponent> components;
  // Node indices exposed as external terminals, in declaration order.
  std::vector<std::size_t> ports;
};

// Node with dom + cod legs: voltages agree across all legs and the leg
// currents balance.
AffineGradedRelation junction(const Field& f, std::size_t dom,
                              std::size_t cod);

// Ideal transformer with ratio a: voltage scales by 1/a, current by a.
AffineGradedRelation transformer(const Field& f, const Scalar& a);

// One-legged current pin: the leg carries current u, voltage free.
AffineGradedRelation current_effect(const Field& f, const Scalar& u);
AffineGradedRelation current_state(const Field& f, const Scalar& u);

// Semantics of a two-terminal element on one doubled wire, voltage on the
// x grading and current on the z grading.  Resistors, inductors and
// capacitors carry the series weights a, a*x and -a*x for a nonnegative
// rational constant a; a voltage source offsets the voltage by its value
// and a current source pins the through current to its value.
AffineGradedRelation component_semantics(const Field& f, NetKind k,
                                         const Scalar& value);

// Solves the network against the node-voltage / component-current system
// and projects onto the port terminals, in port order.  An over-constrained
// network yields the empty relation.
AffineGradedRelation analyze(const Netlist& n);

}  // namespace lagrel
