#include "lagrel/netlist.hpp"

#include <string>

#include "lagrel/error.hpp"
#include "lagrel/linrel.hpp"
#include "lagrel/matrix.hpp"

namespace lagrel {

namespace {

// Series weight of the through-current law V_b - V_a = w I; nonzero only
// for resistive elements.
Scalar series_weight(const Field& f, NetKind k, const Scalar& value) {
  switch (k) {
    case NetKind::wire:
      return Scalar::zero(f);
    case NetKind::resistor:
      return value;
    case NetKind::inductor:
      return value * Scalar::variable(f);
    case NetKind::capacitor:
      return -(value * Scalar::variable(f));
    default:
      throw Error(Errc::invalid_argument, "element has no series weight");
  }
}

bool nonnegative_rational_constant(const Scalar& v) {
  if (v.field().is_prime()) {
    return true;
  }
  if (v.num().degree() > 0 || v.den().degree() > 0) {
    return false;
  }
  return v.num().coeff(0) >= 0;
}

void check_weight(NetKind k, const Scalar& value) {
  if (k == NetKind::resistor || k == NetKind::inductor ||
      k == NetKind::capacitor) {
    if (!nonnegative_rational_constant(value)) {
      throw Error(Errc::negative_value,
                  "element weights must be nonnegative rational constants");
    }
  }
}

// Span rows for a 1 -> 1 element over columns [x_d | x_c | z_d | z_c].
AffineGradedRelation series_element(const Field& f, const Scalar& w) {
  Matrix span(f, 2, 4);
  span.at(0, 0) = Scalar::one(f);
  span.at(0, 1) = Scalar::one(f);
  span.at(1, 1) = w;
  span.at(1, 2) = Scalar::one(f);
  span.at(1, 3) = Scalar::one(f);
  std::vector<Scalar> zero(4, Scalar::zero(f));
  return AffineGradedRelation(1, 1, std::move(zero), span);
}

}  // namespace

AffineGradedRelation junction(const Field& f, std::size_t dom,
                              std::size_t cod) {
  return AffineGradedRelation::from_graded(
      GradedRelation::doubled(LinearRelation::x_spider(f, dom, cod)));
}

AffineGradedRelation transformer(const Field& f, const Scalar& a) {
  if (a.is_zero()) {
    throw Error(Errc::division_by_zero, "transformer ratio must be nonzero");
  }
  return AffineGradedRelation::from_graded(
      GradedRelation::doubled(LinearRelation::scale(f, a)));
}

AffineGradedRelation current_effect(const Field& f, const Scalar& u) {
  Matrix span(f, 1, 2);
  span.at(0, 0) = Scalar::one(f);
  std::vector<Scalar> offset{Scalar::zero(f), u};
  return AffineGradedRelation(1, 0, std::move(offset), span);
}

AffineGradedRelation current_state(const Field& f, const Scalar& u) {
  Matrix span(f, 1, 2);
  span.at(0, 0) = Scalar::one(f);
  std::vector<Scalar> offset{Scalar::zero(f), u};
  return AffineGradedRelation(0, 1, std::move(offset), span);
}

AffineGradedRelation component_semantics(const Field& f, NetKind k,
                                         const Scalar& value) {
  if (value.field() != f) {
    throw Error(Errc::mixed_fields, "element value lives over another field");
  }
  check_weight(k, value);
  switch (k) {
    case NetKind::wire:
    case NetKind::resistor:
    case NetKind::inductor:
    case NetKind::capacitor:
      return series_element(f, series_weight(f, k, value));
    case NetKind::vsource:
      return AffineGradedRelation::x_shift(f, 1, value, 0);
    case NetKind::isource:
      return compose(current_effect(f, value), current_state(f, value));
  }
  throw Error(Errc::invalid_argument, "unknown element kind");
}

AffineGradedRelation analyze(const Netlist& n) {
  Field f = Field::qx();
  std::size_t nv = n.nodes.size();
  std::size_t nc = n.components.size();
  std::size_t np = n.ports.size();

  std::vector<char> used(nv, 0);
  for (const NetComponent& c : n.components) {
    if (c.a >= nv || c.b >= nv) {
      throw Error(Errc::index_out_of_range, "endpoint names an unknown node");
    }
    check_weight(c.kind, c.value);
    used[c.a] = 1;
    used[c.b] = 1;
  }
  for (std::size_t p : n.ports) {
    if (p >= nv) {
      throw Error(Errc::index_out_of_range, "port names an unknown node");
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    if (!used[v]) {
      throw Error(Errc::dangling_node,
                  "node " + n.nodes[v] + " touches no element");
    }
  }

  // Variables: node voltages, component currents (a -> b), then the port
  // currents flowing into the network.
  std::size_t vars = nv + nc + np;
  std::size_t rows = nc + nv;
  Matrix sys(f, rows, vars);
  std::vector<Scalar> rhs(rows, Scalar::zero(f));

  for (std::size_t c = 0; c < nc; ++c) {
    const NetComponent& el = n.components[c];
    Scalar one = Scalar::one(f);
    switch (el.kind) {
      case NetKind::wire:
      case NetKind::resistor:
      case NetKind::inductor:
      case NetKind::capacitor:
        sys.at(c, el.b) += one;
        sys.at(c, el.a) -= one;
        sys.at(c, nv + c) -= series_weight(f, el.kind, el.value);
        break;
      case NetKind::vsource:
        sys.at(c, el.b) += one;
        sys.at(c, el.a) -= one;
        rhs[c] = el.value;
        break;
      case NetKind::isource:
        sys.at(c, nv + c) = one;
        rhs[c] = el.value;
        break;
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    std::size_t r = nc + v;
    for (std::size_t c = 0; c < nc; ++c) {
      if (n.components[c].b == v) {
        sys.at(r, nv + c) += Scalar::one(f);
      }
      if (n.components[c].a == v) {
        sys.at(r, nv + c) -= Scalar::one(f);
      }
    }
    for (std::size_t p = 0; p < np; ++p) {
      if (n.ports[p] == v) {
        sys.at(r, nv + nc + p) += Scalar::one(f);
      }
    }
  }

  auto sol = solve_affine_system(sys, rhs);
  if (!sol) {
    return AffineGradedRelation::empty(f, 0, np);
  }

  std::vector<std::size_t> keep;
  keep.reserve(2 * np);
  for (std::size_t p = 0; p < np; ++p) {
    keep.push_back(n.ports[p]);
  }
  for (std::size_t p = 0; p < np; ++p) {
    keep.push_back(nv + nc + p);
  }
  Matrix span = sol->kernel.select_cols(keep);
  std::vector<Scalar> offset;
  offset.reserve(2 * np);
  for (std::size_t k : keep) {
    offset.push_back(sol->particular[k]);
  }
  return AffineGradedRelation(0, np, std::move(offset), span);
}

}  // namespace lagrel
