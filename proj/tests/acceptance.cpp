#include <chrono>
#include <complex>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lagrel/circuit.hpp"
#include "lagrel/netlist.hpp"
#include "lagrel/stabilizer.hpp"
#include "lagrel/synthesis.hpp"

using namespace lagrel;

namespace {

constexpr double kEps = 1e-9;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<Field> all_fields() {
  return {Field::fp(2), Field::fp(3), Field::fp(5), Field::fp(7),
          Field::qx()};
}

// Uniform residue over a prime field; a small integer polynomial of degree
// at most one over the rational-function field.
Scalar random_scalar(const Field& f, std::mt19937_64& gen) {
  if (f.is_prime()) {
    std::uniform_int_distribution<std::uint64_t> d(0, f.modulus() - 1);
    return Scalar::from_int(f, static_cast<long long>(d(gen)));
  }
  std::uniform_int_distribution<int> d(-2, 2);
  return Scalar::from_int(f, d(gen)) +
         Scalar::from_int(f, d(gen)) * Scalar::variable(f);
}

GradedRelation random_lagrangian_state(const Field& f, std::size_t n,
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
            GradedRelation::gate_s(f, n, random_scalar(f, gen), wire(gen)));
        break;
      case 2:
        state = state.then(
            GradedRelation::gate_v(f, n, random_scalar(f, gen), wire(gen)));
        break;
      default: {
        if (n < 2) break;
        std::size_t i = wire(gen), j = wire(gen);
        if (i == j) j = (i + 1) % n;
        state = state.then(
            GradedRelation::gate_c(f, n, random_scalar(f, gen), i, j));
        break;
      }
    }
  }
  return state;
}

LinearRelation random_linear(const Field& f, std::size_t dom, std::size_t cod,
                             std::mt19937_64& gen) {
  std::uniform_int_distribution<std::size_t> rows(0, dom + cod);
  Matrix m(f, rows(gen), dom + cod);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m.at(r, c) = random_scalar(f, gen);
    }
  }
  return LinearRelation(dom, cod, m);
}

void report(int number, const std::string& label, bool pass,
            const std::string& extra) {
  std::cout << "criterion " << number << " (" << label
            << "): " << (pass ? "PASS" : "FAIL");
  if (!extra.empty()) {
    std::cout << " " << extra;
  }
  std::cout << "\n";
}

// Random circuit over rotations, shears, weighted discards and
// preparations, respecting rail liveness so evaluation cannot throw.
Circuit random_open_circuit(const Field& f, std::size_t wires,
                            std::mt19937_64& gen) {
  enum class Rail { untouched, live, retired };
  std::vector<Rail> st(wires, Rail::untouched);
  Circuit c{f, wires, {}};
  std::uniform_int_distribution<int> kind(0, 5);
  auto pick = [&](bool allow_live, bool allow_untouched, bool allow_retired)
      -> std::ptrdiff_t {
    std::vector<std::size_t> pool;
    for (std::size_t r = 0; r < wires; ++r) {
      bool ok = (st[r] == Rail::live && allow_live) ||
                (st[r] == Rail::untouched && allow_untouched) ||
                (st[r] == Rail::retired && allow_retired);
      if (ok) pool.push_back(r);
    }
    if (pool.empty()) return -1;
    std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
    return static_cast<std::ptrdiff_t>(pool[d(gen)]);
  };
  for (std::size_t step = 0; step < 3 * wires + 3; ++step) {
    int k = kind(gen);
    if (k == 5) {
      std::ptrdiff_t r = pick(false, true, true);
      if (r < 0) continue;
      c.ops.push_back(OpZero{static_cast<std::size_t>(r)});
      st[static_cast<std::size_t>(r)] = Rail::live;
      continue;
    }
    std::ptrdiff_t r = pick(true, true, false);
    if (r < 0) continue;
    std::size_t i = static_cast<std::size_t>(r);
    st[i] = Rail::live;
    switch (k) {
      case 0:
        c.ops.push_back(OpF{i});
        break;
      case 1:
        c.ops.push_back(OpS{random_scalar(f, gen), i});
        break;
      case 2:
        c.ops.push_back(OpV{random_scalar(f, gen), i});
        break;
      case 3: {
        std::ptrdiff_t q = pick(true, true, false);
        if (q < 0 || static_cast<std::size_t>(q) == i) {
          c.ops.push_back(OpF{i});
          break;
        }
        std::size_t j = static_cast<std::size_t>(q);
        st[j] = Rail::live;
        c.ops.push_back(OpC{random_scalar(f, gen), i, j});
        break;
      }
      default:
        c.ops.push_back(OpDiscard{random_scalar(f, gen), i});
        st[i] = Rail::retired;
        break;
    }
  }
  return c;
}

bool criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  bool ok = true;
  for (std::uint64_t p : {2, 3, 5, 7}) {
    Field f = Field::fp(p);
    std::mt19937_64 gen(0xc1000000 + p);
    for (std::size_t trial = 0; trial < 500; ++trial) {
      std::size_t wires = 1 + trial % 4;
      Circuit c = random_open_circuit(f, wires, gen);
      EvaluatedCircuit ev = evaluate(c);
      ok = ok && !ev.relation.is_empty();
      if (!ok) break;
      GradedRelation lin = ev.relation.linear_part();
      ok = ok && lin.span().rows() == lin.dom() + lin.cod();
      ok = ok && lin.symplectic_dual() == lin;
      ++checked;
      if (!ok) break;
    }
    if (!ok) break;
  }
  double dt = seconds_since(t0);
  ok = ok && dt < 30.0;
  std::ostringstream os;
  os << "(" << checked << " circuits in " << dt << " s)";
  report(1, "lagrangian closure", ok, os.str());
  return ok;
}

bool criterion_2() {
  bool ok = true;
  std::size_t checked = 0;
  for (std::uint64_t p : {3, 5, 7}) {
    Field f = Field::fp(p);
    std::mt19937_64 gen(0xc2000000 + p);
    for (std::size_t trial = 0; trial < 200 && ok; ++trial) {
      std::size_t n = 1 + trial % 4;
      GradedRelation state = random_lagrangian_state(f, n, gen);
      GraphForm gf = graph_form(state);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          ok = ok && gf.z_block.at(i, j) == gf.z_block.at(j, i);
        }
      }
      EvaluatedCircuit ev = evaluate(Circuit{f, n, synthesize(state)});
      ok = ok && ev.dom_rails.empty();
      ok = ok && ev.relation == AffineGradedRelation::from_graded(state);
      ++checked;
    }
  }
  std::ostringstream os;
  os << "(" << checked << " states)";
  report(2, "synthesis round trip", ok, os.str());
  return ok;
}

bool criterion_3() {
  bool ok = true;
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    Field f = Field::fp(p);
    Scalar one = Scalar::one(f);
    GradedRelation s = GradedRelation::gate_s(f, 1, one, 0);
    GradedRelation v = GradedRelation::gate_v(f, 1, one, 0);
    ok = ok && compose(compose(s, v), s) == GradedRelation::gate_f(f, 1, 0);
  }
  report(3, "euler identity", ok, "(p in {2,3,5,7,11})");
  return ok;
}

bool criterion_4() {
  bool ok = true;
  std::size_t checked = 0;
  std::uint64_t salt = 0;
  for (const Field& f : all_fields()) {
    std::mt19937_64 gen(0xc4000000 + ++salt);
    std::uniform_int_distribution<std::size_t> dim(0, 3);
    for (std::size_t trial = 0; trial < 200 && ok; ++trial) {
      std::size_t a = dim(gen), b = dim(gen), c = dim(gen);
      LinearRelation v = random_linear(f, a, b, gen);
      LinearRelation w = random_linear(f, b, c, gen);
      ok = ok && v.orthocomplement().orthocomplement() == v;
      ok = ok && w.orthocomplement().orthocomplement() == w;
      ok = ok && v.then(w).orthocomplement() ==
                     v.orthocomplement().then(w.orthocomplement());
      ++checked;
    }
  }
  std::ostringstream os;
  os << "(" << checked << " pairs)";
  report(4, "orthocomplement functor laws", ok, os.str());
  return ok;
}

bool criterion_5() {
  bool ok = true;
  for (std::uint64_t p : {3, 5, 7}) {
    Field f = Field::fp(p);
    for (std::uint64_t n = 0; n < p; ++n) {
      ok = ok && GradedRelation::discard_from_cap(f, n) ==
                     GradedRelation::discard(
                         Scalar::from_int(f, static_cast<long long>(n)));
    }
  }
  report(5, "discard generation", ok, "(all weights, p in {3,5,7})");
  return ok;
}

bool criterion_6() {
  bool ok = true;
  std::size_t checked = 0;
  for (std::uint64_t p : {3, 5}) {
    Field f = Field::fp(p);
    std::mt19937_64 gen(0xc6000000 + p);
    for (std::size_t trial = 0; trial < 100 && ok; ++trial) {
      std::size_t dom = trial % 3;
      std::size_t wires = dom + 1 + trial % 2;
      GradedRelation r =
          random_lagrangian_state(f, wires, gen).uncurry(dom);
      ok = ok && reassemble(purify(r)) == r;
      ++checked;
    }
  }
  std::ostringstream os;
  os << "(" << checked << " relations)";
  report(6, "purification", ok, os.str());
  return ok;
}

Circuit random_prepared_circuit(const Field& f, std::size_t wires,
                                std::mt19937_64& gen) {
  Circuit c{f, wires, {}};
  for (std::size_t r = 0; r < wires; ++r) c.ops.push_back(OpZero{r});
  std::uniform_int_distribution<int> kind(0, 5);
  std::uniform_int_distribution<std::size_t> wire(0, wires - 1);
  for (std::size_t step = 0; step < 3 * wires + 2; ++step) {
    std::size_t i = wire(gen);
    switch (kind(gen)) {
      case 0:
        c.ops.push_back(OpF{i});
        break;
      case 1:
        c.ops.push_back(OpS{random_scalar(f, gen), i});
        break;
      case 2:
        c.ops.push_back(OpV{random_scalar(f, gen), i});
        break;
      case 3: {
        if (wires < 2) {
          c.ops.push_back(OpFinv{i});
          break;
        }
        std::size_t j = wire(gen);
        if (i == j) j = (i + 1) % wires;
        c.ops.push_back(OpC{random_scalar(f, gen), i, j});
        break;
      }
      case 4:
        c.ops.push_back(OpXShift{random_scalar(f, gen), i});
        break;
      default:
        c.ops.push_back(OpZShift{random_scalar(f, gen), i});
        break;
    }
  }
  return c;
}

bool criterion_7() {
  auto t0 = std::chrono::steady_clock::now();
  Field f = Field::fp(3);
  Scalar one = Scalar::one(f);
  bool ok = true;
  std::string detail;

  struct Sample {
    EvaluatedCircuit ev;
    DenseState ds;
  };
  std::vector<Sample> batch;
  std::vector<Circuit> circuits;

  // Two scalar-valued circuits that annihilate the state and one that
  // keeps it; the rest are random gate sequences on fully prepared rails.
  circuits.push_back(
      Circuit{f, 1, {OpZero{0}, OpZShift{one, 0}, OpPost{0}}});
  circuits.push_back(
      Circuit{f, 1, {OpZero{0}, OpZShift{-one, 0}, OpPost{0}}});
  circuits.push_back(Circuit{f, 1, {OpZero{0}, OpPost{0}}});
  std::mt19937_64 gen(0xc7000000);
  while (circuits.size() < 50) {
    circuits.push_back(random_prepared_circuit(f, 1, gen));
  }
  while (circuits.size() < 100) {
    circuits.push_back(random_prepared_circuit(f, 2, gen));
  }

  std::size_t checked_points = 0;
  for (const Circuit& c : circuits) {
    try {
      VerifyReport rep = verify_correspondence(c, kEps);
      checked_points += rep.checked_points;
    } catch (const Error& e) {
      ok = false;
      detail = e.what();
      break;
    }
    batch.push_back(Sample{evaluate(c), simulate_dense(c)});
  }

  std::size_t pairs = 0;
  for (std::size_t i = 0; ok && i < batch.size(); ++i) {
    for (std::size_t j = i + 1; ok && j < batch.size(); ++j) {
      if (batch[i].ev.cod_rails != batch[j].ev.cod_rails) continue;
      bool rel_eq = batch[i].ev.relation == batch[j].ev.relation;
      double ni = norm(batch[i].ds);
      double nj = norm(batch[j].ds);
      bool dense_eq;
      if (ni <= kEps || nj <= kEps) {
        dense_eq = ni <= kEps && nj <= kEps;
      } else {
        dense_eq =
            std::abs(inner(batch[i].ds, batch[j].ds)) >= (1 - kEps) * ni * nj;
      }
      ok = ok && rel_eq == dense_eq;
      ++pairs;
    }
  }

  double dt = seconds_since(t0);
  ok = ok && dt < 60.0;
  std::ostringstream os;
  os << "(" << checked_points << " points, " << pairs << " pairs in " << dt
     << " s)" << (detail.empty() ? "" : " " + detail);
  report(7, "stabilizer correspondence", ok, os.str());
  return ok;
}

bool criterion_8() {
  bool ok = true;
  for (std::uint64_t p : {3, 5, 7}) {
    Field f = Field::fp(p);
    for (const AxiomCheck& chk : one_state_axioms(f)) {
      ok = ok && chk.ok;
    }
    for (std::uint64_t a1 = 0; a1 < p && ok; ++a1) {
      for (std::uint64_t b1 = 0; b1 < p && ok; ++b1) {
        for (std::uint64_t a2 = 0; a2 < p && ok; ++a2) {
          for (std::uint64_t b2 = 0; b2 < p && ok; ++b2) {
            Scalar sa1 = Scalar::from_int(f, static_cast<long long>(a1));
            Scalar sb1 = Scalar::from_int(f, static_cast<long long>(b1));
            Scalar sa2 = Scalar::from_int(f, static_cast<long long>(a2));
            Scalar sb2 = Scalar::from_int(f, static_cast<long long>(b2));
            AffineGradedRelation fused =
                z_phased_spider(f, 1, 1, sa1 + sa2, sb1 + sb2);
            ok = ok && compose(z_phased_spider(f, 1, 1, sa1, sb1),
                               z_phased_spider(f, 1, 1, sa2, sb2)) == fused;
            ok = ok && compose(z_phased_spider(f, 1, 2, sa1, sb1),
                               z_phased_spider(f, 2, 1, sa2, sb2)) == fused;
            ok = ok && compose(x_phased_spider(f, 1, 1, sa1, sb1),
                               x_phased_spider(f, 1, 1, sa2, sb2)) ==
                           x_phased_spider(f, 1, 1, sa1 + sa2, sb1 + sb2);
          }
        }
      }
    }
  }
  report(8, "affine axioms", ok, "(p in {3,5,7})");
  return ok;
}

bool criterion_9() {
  Field f = Field::qx();
  auto q = [&](const char* t) { return parse_scalar(f, t); };
  bool ok = true;

  auto resnet = [&](std::initializer_list<const char*> weights) {
    Netlist n;
    n.nodes.push_back("n0");
    std::size_t prev = 0;
    for (const char* w : weights) {
      n.nodes.push_back("n" + std::to_string(n.nodes.size()));
      n.components.push_back(
          NetComponent{NetKind::resistor, q(w), prev, prev + 1});
      ++prev;
    }
    n.ports = {0, prev};
    return n;
  };

  // Series: a + b.  Parallel: ab / (a+b), exercised with symbolic weights
  // through the inductor pair as well.
  ok = ok && analyze(resnet({"2", "3"})) == analyze(resnet({"5"}));
  Netlist par{{"p", "q"},
              {NetComponent{NetKind::resistor, q("2"), 0, 1},
               NetComponent{NetKind::resistor, q("3"), 0, 1}},
              {0, 1}};
  ok = ok && analyze(par) == analyze(resnet({"6/5"}));
  Netlist lpar{{"p", "q"},
               {NetComponent{NetKind::inductor, q("2"), 0, 1},
                NetComponent{NetKind::inductor, q("3"), 0, 1}},
               {0, 1}};
  Netlist lmean{{"p", "q"},
                {NetComponent{NetKind::inductor, q("6/5"), 0, 1}},
                {0, 1}};
  ok = ok && analyze(lpar) == analyze(lmean);

  // Reactive elements are the resistor relation with weight a*x or -a*x.
  auto series_relation = [&](const Scalar& w) {
    Matrix span(f, 2, 4);
    span.at(0, 0) = q("1");
    span.at(0, 1) = q("1");
    span.at(1, 1) = w;
    span.at(1, 2) = q("1");
    span.at(1, 3) = q("1");
    return AffineGradedRelation(1, 1, std::vector<Scalar>(4, q("0")), span);
  };
  ok = ok && component_semantics(f, NetKind::resistor, q("3")) ==
                 series_relation(q("3"));
  ok = ok && component_semantics(f, NetKind::inductor, q("3")) ==
                 series_relation(q("3*x"));
  ok = ok && component_semantics(f, NetKind::capacitor, q("3")) ==
                 series_relation(q("-3*x"));

  // Source chains: shifts add, pins survive transformer conjugation.
  AffineGradedRelation v5 = component_semantics(f, NetKind::vsource, q("5"));
  ok = ok && compose(component_semantics(f, NetKind::vsource, q("2")),
                     component_semantics(f, NetKind::vsource, q("3"))) == v5;
  ok = ok && compose(compose(transformer(f, q("1/2")), v5),
                     transformer(f, q("2"))) ==
                 component_semantics(f, NetKind::vsource, q("5/2"));
  AffineGradedRelation i2 = component_semantics(f, NetKind::isource, q("2"));
  ok = ok && i2 == compose(current_effect(f, q("2")),
                           current_state(f, q("2")));
  ok = ok && compose(compose(transformer(f, q("1/2")),
                             component_semantics(f, NetKind::isource,
                                                 q("1"))),
                     transformer(f, q("2"))) == i2;

  report(9, "electrical laws", ok, "(symbolic over the rational functions)");
  return ok;
}

bool criterion_10() {
  bool ok = true;
  std::size_t checked = 0;
  std::uint64_t salt = 0;
  for (const Field& f : all_fields()) {
    std::mt19937_64 gen(0xca000000 + ++salt);
    for (std::size_t trial = 0; trial < 100 && ok; ++trial) {
      std::size_t n = 1 + trial % 3;
      GradedRelation state = random_lagrangian_state(f, n, gen);
      const Matrix& g = state.span();
      std::uniform_int_distribution<std::size_t> wire(0, n - 1);
      std::size_t i = wire(gen);
      Scalar a = random_scalar(f, gen);

      Matrix rot = g;
      for (std::size_t r = 0; r < g.rows(); ++r) {
        Scalar x = rot.at(r, i);
        rot.at(r, i) = -rot.at(r, n + i);
        rot.at(r, n + i) = x;
      }
      ok = ok && state.then(GradedRelation::gate_f(f, n, i)) ==
                     GradedRelation(0, n, rot);

      Matrix sh = g;
      for (std::size_t r = 0; r < g.rows(); ++r) {
        sh.at(r, n + i) += a * sh.at(r, i);
      }
      ok = ok && state.then(GradedRelation::gate_s(f, n, a, i)) ==
                     GradedRelation(0, n, sh);

      if (n >= 2) {
        std::size_t j = wire(gen);
        if (i == j) j = (i + 1) % n;
        Matrix ctr = g;
        for (std::size_t r = 0; r < g.rows(); ++r) {
          ctr.at(r, j) -= a * ctr.at(r, i);
          ctr.at(r, n + i) += a * ctr.at(r, n + j);
        }
        ok = ok && state.then(GradedRelation::gate_c(f, n, a, i, j)) ==
                       GradedRelation(0, n, ctr);
      }
      ++checked;
    }
  }
  std::ostringstream os;
  os << "(" << checked << " states)";
  report(10, "gate column actions", ok, os.str());
  return ok;
}

}  // namespace

int main() {
  int failures = 0;
  failures += criterion_1() ? 0 : 1;
  failures += criterion_2() ? 0 : 1;
  failures += criterion_3() ? 0 : 1;
  failures += criterion_4() ? 0 : 1;
  failures += criterion_5() ? 0 : 1;
  failures += criterion_6() ? 0 : 1;
  failures += criterion_7() ? 0 : 1;
  failures += criterion_8() ? 0 : 1;
  failures += criterion_9() ? 0 : 1;
  failures += criterion_10() ? 0 : 1;
  if (failures != 0) {
    std::cout << failures << " criteria failed\n";
  }
  return failures == 0 ? 0 : 1;
}
