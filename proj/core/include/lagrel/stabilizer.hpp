#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "lagrel/circuit.hpp"

namespace lagrel {

// State vector over an odd prime dimension per wire.  Amplitudes are
// indexed with the first live rail as the most significant digit.
struct DenseState {
  std::uint64_t p = 0;
  std::vector<std::size_t> rails;
  std::vector<std::complex<double>> amp;
};

// Simulates the pure fragment of a circuit (no discards).  Rails start in
// the point state |0>; a preparation resets an untouched or retired rail
// to the uniform superposition.  Postselections contract against it and
// may annihilate the vector.
DenseState simulate_dense(const Circuit& c);

std::complex<double> inner(const DenseState& a, const DenseState& b);
double norm(const DenseState& s);

struct WeylElement {
  std::vector<std::uint64_t> shift;
  std::vector<std::uint64_t> phase;
  std::complex<double> eigenvalue;
};

// Phase-space points whose displacement operator fixes the state up to a
// unimodular factor.  A stabilizer state on w wires yields exactly p^w
// points; anything else throws.
std::vector<WeylElement> stabilizer_group(const DenseState& s, double eps);

struct VerifyReport {
  std::size_t checked_points = 0;
  bool empty_relation = false;
};

// Evaluates a fully prepared circuit both relationally and densely and
// checks that the relation is empty exactly when the vector vanishes, and
// that otherwise its linear part equals the dense stabilizer support.
VerifyReport verify_correspondence(const Circuit& c, double eps);

}  // namespace lagrel
