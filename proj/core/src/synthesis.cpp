#include "lagrel/synthesis.hpp"

#include <algorithm>
#include <string>

namespace lagrel {

GraphForm graph_form(const GradedRelation& state) {
  if (state.dom() != 0) {
    throw Error(Errc::invalid_argument, "graph form needs a state");
  }
  if (!state.is_lagrangian()) {
    throw Error(Errc::not_lagrangian, "graph form");
  }
  const Field& f = state.field();
  std::size_t n = state.cod();
  Matrix g = state.span();
  GraphForm out{Matrix(f, n, n), {}};
  for (std::size_t j = 0; j < n; ++j) {
    auto find_pivot = [&]() -> std::size_t {
      for (std::size_t r = j; r < n; ++r) {
        if (!g.at(r, j).is_zero()) return r;
      }
      return n;
    };
    std::size_t pr = find_pivot();
    if (pr == n) {
      // Rotate the wire so its z column becomes the x column.
      for (std::size_t r = 0; r < n; ++r) {
        Scalar x = g.at(r, j);
        g.at(r, j) = -g.at(r, n + j);
        g.at(r, n + j) = x;
      }
      out.pregates.push_back(j);
      pr = find_pivot();
      if (pr == n) {
        throw Error(Errc::rank_deficient,
                    "no pivot for wire " + std::to_string(j));
      }
    }
    for (std::size_t c = 0; c < 2 * n; ++c) std::swap(g.at(j, c), g.at(pr, c));
    Scalar inv = g.at(j, j).inverse();
    for (std::size_t c = 0; c < 2 * n; ++c) g.at(j, c) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == j || g.at(r, j).is_zero()) continue;
      Scalar factor = g.at(r, j);
      for (std::size_t c = 0; c < 2 * n; ++c) {
        g.at(r, c) -= factor * g.at(j, c);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.z_block.at(i, j) = g.at(i, n + j);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (out.z_block.at(i, j) != out.z_block.at(j, i)) {
        throw Error(Errc::not_lagrangian, "graph block is not symmetric");
      }
    }
  }
  return out;
}

std::vector<Op> synthesize(const GradedRelation& state) {
  GraphForm gf = graph_form(state);
  const Field& f = state.field();
  std::size_t n = state.cod();
  std::vector<Op> ops;
  for (std::size_t i = 0; i < n; ++i) ops.push_back(OpZero{i});
  for (std::size_t jj = n; jj-- > 0;) {
    if (!gf.z_block.at(jj, jj).is_zero()) {
      ops.push_back(OpS{gf.z_block.at(jj, jj), jj});
    }
    ops.push_back(OpFinv{jj});
    for (std::size_t i = jj + 1; i < n; ++i) {
      if (!gf.z_block.at(jj, i).is_zero()) {
        ops.push_back(OpC{-gf.z_block.at(jj, i), i, jj});
      }
    }
    ops.push_back(OpF{jj});
  }
  for (std::size_t t = gf.pregates.size(); t-- > 0;) {
    ops.push_back(OpFinv{gf.pregates[t]});
  }
  peephole(ops);
  return ops;
}

void peephole(std::vector<Op>& ops) {
  auto is_identity = [](const Op& op) {
    if (const OpS* o = std::get_if<OpS>(&op)) return o->a.is_zero();
    if (const OpV* o = std::get_if<OpV>(&op)) return o->a.is_zero();
    if (const OpC* o = std::get_if<OpC>(&op)) return o->a.is_zero();
    if (const OpXShift* o = std::get_if<OpXShift>(&op)) return o->a.is_zero();
    if (const OpZShift* o = std::get_if<OpZShift>(&op)) return o->a.is_zero();
    return false;
  };
  auto cancels = [](const Op& a, const Op& b) {
    if (const OpF* x = std::get_if<OpF>(&a)) {
      const OpFinv* y = std::get_if<OpFinv>(&b);
      return y && x->i == y->i;
    }
    if (const OpFinv* x = std::get_if<OpFinv>(&a)) {
      const OpF* y = std::get_if<OpF>(&b);
      return y && x->i == y->i;
    }
    return false;
  };
  std::vector<Op> out;
  out.reserve(ops.size());
  for (const Op& op : ops) {
    if (is_identity(op)) continue;
    if (!out.empty() && cancels(out.back(), op)) {
      out.pop_back();
    } else {
      out.push_back(op);
    }
  }
  ops = std::move(out);
}

namespace {

// Splices a 1 -> 2 spider into wire i and rotates the fresh leg to the
// end, so earlier wire numbers stay put.
LinearRelation attach_branch(const LinearRelation& u, std::size_t i,
                             bool x_grading) {
  const Field& f = u.field();
  std::size_t w = u.cod();
  LinearRelation spider = x_grading ? LinearRelation::x_spider(f, 1, 2)
                                    : LinearRelation::z_spider(f, 1, 2);
  LinearRelation emb = LinearRelation::identity(f, i)
                           .tensor(spider)
                           .tensor(LinearRelation::identity(f, w - i - 1));
  std::vector<std::size_t> image(w + 1);
  for (std::size_t t = 0; t <= i; ++t) image[t] = t;
  image[i + 1] = w;
  for (std::size_t t = i + 2; t <= w; ++t) image[t] = t - 1;
  return u.then(emb).then(LinearRelation::permutation(f, image));
}

LinearRelation lower_triangular_pair(const Field& f, std::size_t w,
                                     const Scalar& a, std::size_t i,
                                     std::size_t j) {
  Matrix g(f, w, 2 * w);
  for (std::size_t t = 0; t < w; ++t) {
    g.at(t, t) = Scalar::one(f);
    g.at(t, w + t) = Scalar::one(f);
  }
  g.at(j, w + i) = a;
  return LinearRelation(w, w, g);
}

GradedRelation embed_discard(const Field& f, std::size_t n, std::size_t pos,
                             const Scalar& a) {
  return GradedRelation::identity(f, pos)
      .tensor(GradedRelation::discard(a))
      .tensor(GradedRelation::identity(f, n - pos - 1));
}

}  // namespace

Purification purify(const GradedRelation& r) {
  if (!r.is_lagrangian()) {
    throw Error(Errc::not_lagrangian, "purification");
  }
  const Field& f = r.field();
  std::size_t n = r.dom(), m = r.cod();
  std::size_t w = n + m;

  // A doubled relation splits into rows supported on the x block and rows
  // supported on the z block; when that happens the z rows name the flat
  // relation directly.
  {
    const Matrix& sp = r.span();
    std::size_t x_rows = 0, z_rows = 0;
    Matrix z_basis(f, sp.rows(), w);
    for (std::size_t row = 0; row < sp.rows(); ++row) {
      bool x_zero = true, z_zero = true;
      for (std::size_t c = 0; c < w; ++c) {
        if (!sp.at(row, c).is_zero()) x_zero = false;
        if (!sp.at(row, w + c).is_zero()) z_zero = false;
      }
      if (x_zero) {
        for (std::size_t c = 0; c < w; ++c) {
          z_basis.at(z_rows, c) = sp.at(row, w + c);
        }
        ++z_rows;
      } else if (z_zero) {
        ++x_rows;
      }
    }
    if (x_rows + z_rows == sp.rows()) {
      Matrix z_span(f, z_rows, w);
      for (std::size_t row = 0; row < z_rows; ++row) {
        for (std::size_t c = 0; c < w; ++c) {
          z_span.at(row, c) = z_basis.at(row, c);
        }
      }
      LinearRelation candidate(n, m, z_span);
      if (GradedRelation::doubled(candidate) == r) {
        return Purification{candidate, {}};
      }
    }
  }

  std::vector<Op> ops = synthesize(r.curry());
  LinearRelation u(0, w, Matrix(f, 0, w));
  std::vector<std::pair<std::size_t, Scalar>> discards;
  Scalar one = Scalar::one(f);
  auto shear_z = [&](const Scalar& a, std::size_t i) {
    u = attach_branch(u, i, true);
    discards.emplace_back(u.cod() - 1, a);
  };
  auto shear_x = [&](const Scalar& a, std::size_t i) {
    if (a.is_zero()) return;
    u = attach_branch(u, i, false);
    discards.emplace_back(u.cod() - 1, -a.inverse());
  };
  for (const Op& op : ops) {
    if (std::holds_alternative<OpZero>(op)) continue;
    if (const OpS* o = std::get_if<OpS>(&op)) {
      shear_z(o->a, o->i);
    } else if (const OpV* o = std::get_if<OpV>(&op)) {
      shear_x(o->a, o->i);
    } else if (const OpF* o = std::get_if<OpF>(&op)) {
      shear_z(one, o->i);
      shear_x(one, o->i);
      shear_z(one, o->i);
    } else if (const OpFinv* o = std::get_if<OpFinv>(&op)) {
      shear_z(-one, o->i);
      shear_x(-one, o->i);
      shear_z(-one, o->i);
    } else if (const OpC* o = std::get_if<OpC>(&op)) {
      u = u.then(lower_triangular_pair(f, u.cod(), o->a, o->i, o->j));
    } else {
      throw Error(Errc::invalid_argument,
                  "unexpected operation in a synthesized circuit");
    }
  }
  LinearRelation pure(n, u.cod() - n, u.span());
  for (auto& d : discards) d.first -= n;
  return Purification{std::move(pure), std::move(discards)};
}

GradedRelation reassemble(const Purification& p) {
  GradedRelation acc = GradedRelation::doubled(p.pure);
  auto ds = p.discards;
  std::sort(ds.begin(), ds.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [wire, weight] : ds) {
    acc = acc.then(embed_discard(acc.field(), acc.cod(), wire, weight));
  }
  return acc;
}

}  // namespace lagrel
