#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lagrel/circuit.hpp"
#include "lagrel/netlist.hpp"
#include "lagrel/stabilizer.hpp"
#include "lagrel/synthesis.hpp"

using namespace lagrel;

namespace {

Scalar random_residue(const Field& f, std::mt19937_64& gen) {
  std::uniform_int_distribution<std::uint64_t> d(0, f.modulus() - 1);
  return Scalar::from_int(f, static_cast<long long>(d(gen)));
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols,
                     std::mt19937_64& gen) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.at(r, c) = random_residue(f, gen);
    }
  }
  return m;
}

GradedRelation random_state(const Field& f, std::size_t n,
                            std::mt19937_64& gen) {
  GradedRelation state = GradedRelation::zero_state(f, n);
  std::uniform_int_distribution<std::size_t> wire(0, n - 1);
  std::uniform_int_distribution<int> kind(0, 3);
  for (std::size_t step = 0; step < 3 * n + 2; ++step) {
    switch (kind(gen)) {
      case 0:
        state = state.then(GradedRelation::gate_f(f, n, wire(gen)));
        break;
      case 1:
        state = state.then(
            GradedRelation::gate_s(f, n, random_residue(f, gen), wire(gen)));
        break;
      case 2:
        state = state.then(
            GradedRelation::gate_v(f, n, random_residue(f, gen), wire(gen)));
        break;
      default: {
        if (n < 2) break;
        std::size_t i = wire(gen), j = wire(gen);
        if (i == j) j = (i + 1) % n;
        state = state.then(
            GradedRelation::gate_c(f, n, random_residue(f, gen), i, j));
        break;
      }
    }
  }
  return state;
}

Circuit random_circuit(const Field& f, std::size_t wires,
                       std::mt19937_64& gen) {
  Circuit c{f, wires, {}};
  for (std::size_t r = 0; r < wires; ++r) c.ops.push_back(OpZero{r});
  std::uniform_int_distribution<std::size_t> wire(0, wires - 1);
  std::uniform_int_distribution<int> kind(0, 4);
  for (std::size_t step = 0; step < 4 * wires; ++step) {
    std::size_t i = wire(gen);
    switch (kind(gen)) {
      case 0:
        c.ops.push_back(OpF{i});
        break;
      case 1:
        c.ops.push_back(OpS{random_residue(f, gen), i});
        break;
      case 2:
        c.ops.push_back(OpV{random_residue(f, gen), i});
        break;
      case 3:
        c.ops.push_back(OpZShift{random_residue(f, gen), i});
        break;
      default: {
        if (wires < 2) {
          c.ops.push_back(OpFinv{i});
          break;
        }
        std::size_t j = wire(gen);
        if (i == j) j = (i + 1) % wires;
        c.ops.push_back(OpC{random_residue(f, gen), i, j});
        break;
      }
    }
  }
  return c;
}

// Chain of alternating series elements between ports at both ends.
Netlist ladder(const Field& f, std::size_t rungs) {
  Netlist n;
  n.nodes.push_back("n0");
  for (std::size_t k = 0; k < rungs; ++k) {
    n.nodes.push_back("n" + std::to_string(k + 1));
    NetKind kind = k % 3 == 0   ? NetKind::resistor
                   : k % 3 == 1 ? NetKind::inductor
                                : NetKind::capacitor;
    n.components.push_back(NetComponent{
        kind, Scalar::from_int(f, static_cast<long long>(2 + k % 3)), k,
        k + 1});
  }
  n.ports = {0, rungs};
  return n;
}

void BM_rref(benchmark::State& state) {
  Field f = Field::fp(7);
  std::mt19937_64 gen(1);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(f, n, 2 * n, gen);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.rref());
  }
}
BENCHMARK(BM_rref)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_compose_graded(benchmark::State& state) {
  Field f = Field::fp(7);
  std::mt19937_64 gen(2);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  GradedRelation a = random_state(f, 2 * n, gen).uncurry(n);
  GradedRelation b = random_state(f, 2 * n, gen).uncurry(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(a, b));
  }
}
BENCHMARK(BM_compose_graded)->Arg(2)->Arg(4)->Arg(8);

void BM_synthesize(benchmark::State& state) {
  Field f = Field::fp(7);
  std::mt19937_64 gen(3);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  GradedRelation s = random_state(f, n, gen);
  for (auto _ : state) {
    benchmark::DoNotOptimize(synthesize(s));
  }
}
BENCHMARK(BM_synthesize)->Arg(2)->Arg(4)->Arg(8);

void BM_evaluate(benchmark::State& state) {
  Field f = Field::fp(7);
  std::mt19937_64 gen(4);
  std::size_t wires = static_cast<std::size_t>(state.range(0));
  Circuit c = random_circuit(f, wires, gen);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(c));
  }
}
BENCHMARK(BM_evaluate)->Arg(2)->Arg(4)->Arg(8);

void BM_purify(benchmark::State& state) {
  Field f = Field::fp(5);
  std::mt19937_64 gen(5);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  GradedRelation r = random_state(f, 2 * n, gen).uncurry(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(purify(r));
  }
}
BENCHMARK(BM_purify)->Arg(1)->Arg(2)->Arg(4);

void BM_analyze(benchmark::State& state) {
  Field f = Field::qx();
  Netlist n = ladder(f, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(n));
  }
}
BENCHMARK(BM_analyze)->Arg(3)->Arg(6)->Arg(12);

void BM_simulate_dense(benchmark::State& state) {
  Field f = Field::fp(3);
  std::mt19937_64 gen(6);
  Circuit c = random_circuit(f, static_cast<std::size_t>(state.range(0)),
                             gen);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_dense(c));
  }
}
BENCHMARK(BM_simulate_dense)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
