#include "lagrel/circuit.hpp"

#include <algorithm>
#include <string>

namespace lagrel {

namespace {

constexpr std::size_t kMaxWires = 128;

std::vector<std::size_t> rails_of(const Op& op) {
  return std::visit(
      [](const auto& o) -> std::vector<std::size_t> {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, OpC>) {
          return {o.i, o.j};
        } else {
          return {o.i};
        }
      },
      op);
}

GradedRelation embed_effect(const Field& f, std::size_t n, std::size_t pos,
                            const GradedRelation& effect) {
  return GradedRelation::identity(f, pos)
      .tensor(effect)
      .tensor(GradedRelation::identity(f, n - pos - 1));
}

}  // namespace

bool operator==(const Op& a, const Op& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, OpF> || std::is_same_v<T, OpFinv> ||
                      std::is_same_v<T, OpZero> || std::is_same_v<T, OpPost>) {
          return x.i == y.i;
        } else if constexpr (std::is_same_v<T, OpC>) {
          return x.a == y.a && x.i == y.i && x.j == y.j;
        } else {
          return x.a == y.a && x.i == y.i;
        }
      },
      a);
}

EvaluatedCircuit evaluate(const Circuit& c) {
  const Field& f = c.field;
  if (c.wires > kMaxWires) {
    throw Error(Errc::circuit_too_large,
                std::to_string(c.wires) + " rails (limit " +
                    std::to_string(kMaxWires) + ")");
  }
  for (const Op& op : c.ops) {
    for (std::size_t r : rails_of(op)) {
      if (r >= c.wires) {
        throw Error(Errc::index_out_of_range,
                    "rail " + std::to_string(r) + " of " +
                        std::to_string(c.wires));
      }
    }
    if (const OpC* g = std::get_if<OpC>(&op); g && g->i == g->j) {
      throw Error(Errc::equal_indices,
                  "controlled gate on rail " + std::to_string(g->i) +
                      " twice");
    }
  }

  // Rails first touched by a preparation start fresh; the rest are open.
  std::vector<bool> touched(c.wires, false);
  std::vector<bool> open_input(c.wires, true);
  for (const Op& op : c.ops) {
    for (std::size_t r : rails_of(op)) {
      if (!touched[r]) {
        touched[r] = true;
        if (std::holds_alternative<OpZero>(op)) open_input[r] = false;
      }
    }
  }
  std::vector<std::size_t> dom_rails;
  for (std::size_t r = 0; r < c.wires; ++r) {
    if (open_input[r]) dom_rails.push_back(r);
  }

  std::vector<std::size_t> live = dom_rails;
  AffineGradedRelation acc = AffineGradedRelation::from_graded(
      GradedRelation::identity(f, live.size()));
  auto pos_of = [&](std::size_t rail) {
    auto it = std::lower_bound(live.begin(), live.end(), rail);
    if (it == live.end() || *it != rail) {
      throw Error(Errc::invalid_argument,
                  "rail " + std::to_string(rail) + " is not live");
    }
    return static_cast<std::size_t>(it - live.begin());
  };

  for (const Op& op : c.ops) {
    std::size_t n = live.size();
    if (const OpZero* o = std::get_if<OpZero>(&op)) {
      if (std::binary_search(live.begin(), live.end(), o->i)) {
        throw Error(Errc::invalid_argument,
                    "rail " + std::to_string(o->i) +
                        " prepared while still live");
      }
      acc = acc.tensor(
          AffineGradedRelation::from_graded(GradedRelation::zero_state(f, 1)));
      // The fresh wire sits at the end; rotate it into ascending position.
      auto it = std::lower_bound(live.begin(), live.end(), o->i);
      std::size_t idx = static_cast<std::size_t>(it - live.begin());
      std::vector<std::size_t> image(n + 1);
      for (std::size_t t = 0; t < n + 1; ++t) {
        image[t] = t < idx ? t : (t == n ? idx : t + 1);
      }
      acc = acc.then(AffineGradedRelation::from_graded(
          GradedRelation::permutation(f, image)));
      live.insert(it, o->i);
    } else if (const OpF* o = std::get_if<OpF>(&op)) {
      acc = acc.then(AffineGradedRelation::from_graded(
          GradedRelation::gate_f(f, n, pos_of(o->i))));
    } else if (const OpFinv* o = std::get_if<OpFinv>(&op)) {
      acc = acc.then(AffineGradedRelation::from_graded(
          GradedRelation::gate_finv(f, n, pos_of(o->i))));
    } else if (const OpS* o = std::get_if<OpS>(&op)) {
      acc = acc.then(AffineGradedRelation::from_graded(
          GradedRelation::gate_s(f, n, o->a, pos_of(o->i))));
    } else if (const OpV* o = std::get_if<OpV>(&op)) {
      acc = acc.then(AffineGradedRelation::from_graded(
          GradedRelation::gate_v(f, n, o->a, pos_of(o->i))));
    } else if (const OpC* o = std::get_if<OpC>(&op)) {
      acc = acc.then(AffineGradedRelation::from_graded(
          GradedRelation::gate_c(f, n, o->a, pos_of(o->i), pos_of(o->j))));
    } else if (const OpXShift* o = std::get_if<OpXShift>(&op)) {
      acc = acc.then(
          AffineGradedRelation::x_shift(f, n, o->a, pos_of(o->i)));
    } else if (const OpZShift* o = std::get_if<OpZShift>(&op)) {
      acc = acc.then(
          AffineGradedRelation::z_shift(f, n, o->a, pos_of(o->i)));
    } else if (const OpDiscard* o = std::get_if<OpDiscard>(&op)) {
      std::size_t p = pos_of(o->i);
      acc = acc.then(AffineGradedRelation::from_graded(
          embed_effect(f, n, p, GradedRelation::discard(o->a))));
      live.erase(live.begin() + p);
    } else if (const OpPost* o = std::get_if<OpPost>(&op)) {
      std::size_t p = pos_of(o->i);
      acc = acc.then(AffineGradedRelation::from_graded(embed_effect(
          f, n, p, GradedRelation::zero_state(f, 1).converse())));
      live.erase(live.begin() + p);
    }
  }
  return EvaluatedCircuit{std::move(acc), std::move(dom_rails),
                          std::move(live)};
}

}  // namespace lagrel
