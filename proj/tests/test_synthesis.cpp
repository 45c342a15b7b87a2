#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "lagrel/synthesis.hpp"

using namespace lagrel;

namespace {

Scalar sc(const Field& f, std::uint64_t v) { return Scalar::from_int(f, v); }

// A random Lagrangian state reached by gates from the zero-outcome
// preparation, so synthesis always has a target to hit.
GradedRelation random_state(const Field& f, std::size_t n,
                            std::mt19937_64& gen) {
  GradedRelation state = GradedRelation::zero_state(f, n);
  std::uniform_int_distribution<std::uint64_t> coef(0, f.modulus() - 1);
  std::uniform_int_distribution<std::size_t> wire(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 3);
  for (std::size_t step = 0; step < 3 * n + 2; ++step) {
    switch (kind(gen)) {
      case 0:
        state = state.then(GradedRelation::gate_f(f, n, wire(gen)));
        break;
      case 1:
        state = state.then(GradedRelation::gate_s(f, n, sc(f, coef(gen)),
                                                  wire(gen)));
        break;
      case 2:
        state = state.then(GradedRelation::gate_v(f, n, sc(f, coef(gen)),
                                                  wire(gen)));
        break;
      default: {
        if (n < 2) break;
        std::size_t i = wire(gen), j = wire(gen);
        if (i == j) j = (i + 1) % n;
        state = state.then(GradedRelation::gate_c(f, n, sc(f, coef(gen)),
                                                  i, j));
        break;
      }
    }
  }
  return state;
}

}  // namespace

TEST_CASE("graph form of reachable states") {
  Field f = Field::fp(5);

  SUBCASE("zero-outcome preparations have a zero block") {
    GraphForm gf = graph_form(GradedRelation::zero_state(f, 2));
    CHECK(gf.pregates.empty());
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        CHECK(gf.z_block.at(i, j).is_zero());
      }
    }
  }

  SUBCASE("a vanished x column forces a rotation") {
    GradedRelation rotated = GradedRelation::zero_state(f, 1).then(
        GradedRelation::gate_f(f, 1, 0));
    GraphForm gf = graph_form(rotated);
    CHECK(gf.pregates == std::vector<std::size_t>{0});
    CHECK(gf.z_block.at(0, 0).is_zero());
  }

  SUBCASE("the block records shear phases symmetrically") {
    // A controlled gate entangles only once some z column is occupied, so
    // shear wire 1 first and then couple the wires.
    Scalar a = sc(f, 3);
    GradedRelation sheared =
        GradedRelation::zero_state(f, 2)
            .then(GradedRelation::gate_s(f, 2, sc(f, 1), 1))
            .then(GradedRelation::gate_c(f, 2, a, 0, 1));
    GraphForm gf = graph_form(sheared);
    CHECK(gf.z_block.at(0, 1) == gf.z_block.at(1, 0));
    CHECK_FALSE(gf.z_block.at(0, 1).is_zero());
    CHECK(gf.z_block.at(0, 1) == a);
  }
}

TEST_CASE("graph form rejects bad inputs") {
  Field f = Field::fp(3);

  GradedRelation morphism = GradedRelation::gate_f(f, 1, 0);
  CHECK_THROWS_WITH_AS(graph_form(morphism), "invalid argument: graph form needs a state",
                       Error);

  GradedRelation small(0, 1, Matrix(f, 0, 2));
  CHECK_THROWS_WITH_AS(graph_form(small), "not lagrangian: graph form", Error);

  Matrix full(f, 2, 2);
  full.at(0, 0) = sc(f, 1);
  full.at(1, 1) = sc(f, 1);
  CHECK_THROWS_AS(graph_form(GradedRelation(0, 1, full)), Error);
}

TEST_CASE("peephole drops identities and cancels rotations") {
  Field f = Field::fp(7);
  Scalar zero = sc(f, 0);
  Scalar a = sc(f, 4);

  std::vector<Op> ops = {OpF{0}, OpFinv{0}, OpS{zero, 1}, OpC{zero, 0, 1},
                         OpV{a, 1}};
  peephole(ops);
  CHECK(ops == std::vector<Op>{OpV{a, 1}});

  // Cancellation cascades once an inner pair disappears.
  std::vector<Op> nested = {OpF{0}, OpF{1}, OpFinv{1}, OpFinv{0}};
  peephole(nested);
  CHECK(nested.empty());

  // Rotations on distinct wires do not cancel.
  std::vector<Op> distinct = {OpF{0}, OpFinv{1}};
  peephole(distinct);
  CHECK(distinct.size() == 2);
}

TEST_CASE("synthesized circuits reproduce their state") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    Field f = Field::fp(p);
    std::mt19937_64 gen(0x5eed0000 + p);
    for (std::size_t trial = 0; trial < 30; ++trial) {
      std::size_t n = 1 + trial % 3;
      GradedRelation state = random_state(f, n, gen);
      std::vector<Op> ops = synthesize(state);
      EvaluatedCircuit ev = evaluate(Circuit{f, n, ops});
      CHECK(ev.dom_rails.empty());
      CHECK(ev.relation == AffineGradedRelation::from_graded(state));
    }
  }
}

TEST_CASE("synthesis emits only preparations, shears and rotations") {
  Field f = Field::fp(5);
  std::mt19937_64 gen(99);
  GradedRelation state = random_state(f, 3, gen);
  for (const Op& op : synthesize(state)) {
    bool allowed = std::holds_alternative<OpZero>(op) ||
                   std::holds_alternative<OpS>(op) ||
                   std::holds_alternative<OpC>(op) ||
                   std::holds_alternative<OpF>(op) ||
                   std::holds_alternative<OpFinv>(op);
    CHECK(allowed);
  }
}

TEST_CASE("purification splits doubled relations without discards") {
  Field f = Field::fp(5);
  Matrix shear(f, 2, 4);
  shear.at(0, 0) = sc(f, 1);
  shear.at(0, 2) = sc(f, 1);
  shear.at(1, 0) = sc(f, 3);
  shear.at(1, 1) = sc(f, 1);
  shear.at(1, 3) = sc(f, 1);
  LinearRelation flat(2, 2, shear);

  Purification p = purify(GradedRelation::doubled(flat));
  CHECK(p.discards.empty());
  CHECK(p.pure == flat);
  CHECK(reassemble(p) == GradedRelation::doubled(flat));
}

TEST_CASE("purification handles genuinely leaky relations") {
  Field f = Field::fp(5);
  Scalar a = sc(f, 2);

  SUBCASE("shear gates need at least one discard") {
    GradedRelation s = GradedRelation::gate_s(f, 1, a, 0);
    Purification p = purify(s);
    CHECK_FALSE(p.discards.empty());
    CHECK(reassemble(p) == s);
  }

  SUBCASE("discards purify to a branch plus themselves") {
    GradedRelation d = GradedRelation::discard(a);
    Purification p = purify(d);
    CHECK(reassemble(p) == d);
  }
}

TEST_CASE("reassembly is exact on random relations") {
  for (std::uint64_t p : {3, 5}) {
    Field f = Field::fp(p);
    std::mt19937_64 gen(0xac5e + p);
    for (std::size_t trial = 0; trial < 25; ++trial) {
      std::size_t dom = trial % 3;
      std::size_t w = dom + 1 + trial % 2;
      GradedRelation r = random_state(f, w, gen).uncurry(dom);
      Purification pf = purify(r);
      CHECK(pf.pure.dom() == r.dom());
      CHECK(reassemble(pf) == r);
    }
  }
}

TEST_CASE("purification rejects non-Lagrangian inputs") {
  Field f = Field::fp(3);
  CHECK_THROWS_WITH_AS(purify(GradedRelation(0, 1, Matrix(f, 0, 2))),
                       "not lagrangian: purification", Error);
}
