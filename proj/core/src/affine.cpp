#include "lagrel/affine.hpp"

#include <string>

namespace lagrel {

std::optional<AffineSolution> solve_affine_system(
    const Matrix& m, const std::vector<Scalar>& rhs) {
  if (rhs.size() != m.rows()) {
    throw Error(Errc::dimension_mismatch,
                "system of " + std::to_string(m.rows()) + " rows with " +
                    std::to_string(rhs.size()) + " right hand sides");
  }
  Matrix rhs_col(m.field(), m.rows(), 1);
  for (std::size_t i = 0; i < m.rows(); ++i) rhs_col.at(i, 0) = rhs[i];
  std::vector<std::size_t> pivots;
  Matrix reduced = Matrix::hstack(m, rhs_col).rref(&pivots);
  for (std::size_t p : pivots) {
    if (p == m.cols()) return std::nullopt;
  }
  AffineSolution sol{std::vector<Scalar>(m.cols(), Scalar::zero(m.field())),
                     m.kernel()};
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    sol.particular[pivots[i]] = reduced.at(i, m.cols());
  }
  return sol;
}

AffineRelation::AffineRelation(std::size_t dom, std::size_t cod,
                               std::vector<Scalar> offset, const Matrix& span)
    : field_(span.field()),
      dom_(dom),
      cod_(cod),
      empty_(false),
      offset_(std::move(offset)),
      span_(span.rref()) {
  if (span.cols() != dom + cod || offset_.size() != dom + cod) {
    throw Error(Errc::dimension_mismatch,
                "affine relation " + std::to_string(dom) + " -> " +
                    std::to_string(cod) + " with offset of length " +
                    std::to_string(offset_.size()) + " and span of width " +
                    std::to_string(span.cols()));
  }
  offset_ = span_.reduce(std::move(offset_));
}

AffineRelation AffineRelation::empty(const Field& f, std::size_t dom,
                                     std::size_t cod) {
  return AffineRelation(f, dom, cod);
}

AffineRelation AffineRelation::from_linear(const LinearRelation& r) {
  return AffineRelation(r.dom(), r.cod(),
                        std::vector<Scalar>(r.dom() + r.cod(),
                                            Scalar::zero(r.field())),
                        r.span());
}

AffineRelation AffineRelation::one_state(const Field& f) {
  return AffineRelation(0, 1, {Scalar::one(f)}, Matrix(f, 0, 1));
}

const Matrix& AffineRelation::span() const {
  if (empty_) throw Error(Errc::invalid_argument, "span of an empty relation");
  return span_;
}

const std::vector<Scalar>& AffineRelation::offset() const {
  if (empty_) {
    throw Error(Errc::invalid_argument, "offset of an empty relation");
  }
  return offset_;
}

LinearRelation AffineRelation::linear_part() const {
  return LinearRelation(dom_, cod_, span());
}

AffineRelation AffineRelation::then(const AffineRelation& o) const {
  if (field_ != o.field_) {
    throw Error(Errc::mixed_fields, "composition across fields");
  }
  if (cod_ != o.dom_) {
    throw Error(Errc::arity_mismatch,
                "composing " + std::to_string(dom_) + " -> " +
                    std::to_string(cod_) + " with " + std::to_string(o.dom_) +
                    " -> " + std::to_string(o.cod_));
  }
  std::size_t n = dom_, m = cod_, k = o.cod_;
  if (empty_ || o.empty_) return AffineRelation(field_, n, k);
  // Each relation is cut out by constraint rows applied to (x, y) and
  // (y, z); both right hand sides come from the stored offsets.
  Matrix ca = span_.kernel();
  Matrix cb = o.span_.kernel();
  Matrix sys(field_, ca.rows() + cb.rows(), n + m + k);
  std::vector<Scalar> rhs;
  rhs.reserve(ca.rows() + cb.rows());
  for (std::size_t r = 0; r < ca.rows(); ++r) {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t j = 0; j < n + m; ++j) {
      sys.at(r, j) = ca.at(r, j);
      acc += ca.at(r, j) * offset_[j];
    }
    rhs.push_back(acc);
  }
  for (std::size_t r = 0; r < cb.rows(); ++r) {
    Scalar acc = Scalar::zero(field_);
    for (std::size_t j = 0; j < m + k; ++j) {
      sys.at(ca.rows() + r, n + j) = cb.at(r, j);
      acc += cb.at(r, j) * o.offset_[j];
    }
    rhs.push_back(acc);
  }
  auto sol = solve_affine_system(sys, rhs);
  if (!sol) return AffineRelation(field_, n, k);
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j) keep.push_back(j);
  for (std::size_t j = 0; j < k; ++j) keep.push_back(n + m + j);
  std::vector<Scalar> offset;
  offset.reserve(keep.size());
  for (std::size_t j : keep) offset.push_back(sol->particular[j]);
  return AffineRelation(n, k, std::move(offset), sol->kernel.select_cols(keep));
}

AffineRelation AffineRelation::tensor(const AffineRelation& o) const {
  if (field_ != o.field_) {
    throw Error(Errc::mixed_fields, "tensor across fields");
  }
  std::size_t n1 = dom_, m1 = cod_, n2 = o.dom_, m2 = o.cod_;
  if (empty_ || o.empty_) {
    return AffineRelation(field_, n1 + n2, m1 + m2);
  }
  Matrix span(field_, span_.rows() + o.span_.rows(), n1 + n2 + m1 + m2);
  std::vector<Scalar> offset(n1 + n2 + m1 + m2, Scalar::zero(field_));
  for (std::size_t j = 0; j < n1; ++j) offset[j] = offset_[j];
  for (std::size_t j = 0; j < m1; ++j) offset[n1 + n2 + j] = offset_[n1 + j];
  for (std::size_t j = 0; j < n2; ++j) offset[n1 + j] = o.offset_[j];
  for (std::size_t j = 0; j < m2; ++j) {
    offset[n1 + n2 + m1 + j] = o.offset_[n2 + j];
  }
  for (std::size_t r = 0; r < span_.rows(); ++r) {
    for (std::size_t j = 0; j < n1; ++j) span.at(r, j) = span_.at(r, j);
    for (std::size_t j = 0; j < m1; ++j) {
      span.at(r, n1 + n2 + j) = span_.at(r, n1 + j);
    }
  }
  for (std::size_t r = 0; r < o.span_.rows(); ++r) {
    std::size_t rr = span_.rows() + r;
    for (std::size_t j = 0; j < n2; ++j) span.at(rr, n1 + j) = o.span_.at(r, j);
    for (std::size_t j = 0; j < m2; ++j) {
      span.at(rr, n1 + n2 + m1 + j) = o.span_.at(r, n2 + j);
    }
  }
  return AffineRelation(n1 + n2, m1 + m2, std::move(offset), span);
}

AffineRelation AffineRelation::converse() const {
  if (empty_) return AffineRelation(field_, cod_, dom_);
  std::vector<std::size_t> perm;
  for (std::size_t j = 0; j < cod_; ++j) perm.push_back(dom_ + j);
  for (std::size_t j = 0; j < dom_; ++j) perm.push_back(j);
  std::vector<Scalar> offset;
  offset.reserve(perm.size());
  for (std::size_t j : perm) offset.push_back(offset_[j]);
  return AffineRelation(cod_, dom_, std::move(offset), span_.select_cols(perm));
}

bool AffineRelation::member(const std::vector<Scalar>& v) const {
  if (empty_) return false;
  if (v.size() != dom_ + cod_) {
    throw Error(Errc::dimension_mismatch, "membership probe of wrong length");
  }
  std::vector<Scalar> shifted;
  shifted.reserve(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    shifted.push_back(v[j] - offset_[j]);
  }
  return span_.row_space_contains(shifted);
}

bool AffineRelation::operator==(const AffineRelation& o) const {
  if (field_ != o.field_ || dom_ != o.dom_ || cod_ != o.cod_) return false;
  if (empty_ || o.empty_) return empty_ == o.empty_;
  return offset_ == o.offset_ && span_ == o.span_;
}

AffineRelation compose(const AffineRelation& a, const AffineRelation& b) {
  return a.then(b);
}

std::vector<AxiomCheck> one_state_axioms(const Field& f) {
  auto lift = [&](const char* name) {
    return AffineRelation::from_linear(LinearRelation::generator(f, name));
  };
  AffineRelation one = AffineRelation::one_state(f);
  AffineRelation wire = lift("id");
  AffineRelation broken = compose(lift("z_counit"), lift("z_unit"));
  AffineRelation unit_scalar(0, 0, {}, Matrix(f, 0, 0));

  std::vector<AxiomCheck> out;
  // {1} meets the must-equal-zero effect: the scalar is empty and kills
  // any wire it sits next to.
  AffineRelation collision = compose(one, lift("x_zero"));
  out.push_back({"collision", collision.is_empty() &&
                                  collision.tensor(wire) ==
                                      collision.tensor(broken)});
  out.push_back(
      {"copy", compose(one, lift("z_copy")) == one.tensor(one)});
  out.push_back({"delete", compose(one, lift("z_counit")) == unit_scalar});
  return out;
}

namespace {

std::vector<std::size_t> graded_to_flat_perm(std::size_t n, std::size_t m) {
  // Flat order (x_d, z_d, x_c, z_c) from graded order (x_d, x_c, z_d, z_c).
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < n; ++i) perm.push_back(i);
  for (std::size_t i = 0; i < n; ++i) perm.push_back(n + m + i);
  for (std::size_t j = 0; j < m; ++j) perm.push_back(n + j);
  for (std::size_t j = 0; j < m; ++j) perm.push_back(2 * n + m + j);
  return perm;
}

std::vector<std::size_t> flat_to_graded_perm(std::size_t n, std::size_t m) {
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < n; ++i) perm.push_back(i);
  for (std::size_t j = 0; j < m; ++j) perm.push_back(2 * n + j);
  for (std::size_t i = 0; i < n; ++i) perm.push_back(n + i);
  for (std::size_t j = 0; j < m; ++j) perm.push_back(2 * n + m + j);
  return perm;
}

std::vector<Scalar> permuted(const std::vector<Scalar>& v,
                             const std::vector<std::size_t>& perm) {
  std::vector<Scalar> out;
  out.reserve(perm.size());
  for (std::size_t j : perm) out.push_back(v[j]);
  return out;
}

}  // namespace

AffineGradedRelation::AffineGradedRelation(std::size_t dom, std::size_t cod,
                                           std::vector<Scalar> offset,
                                           const Matrix& span)
    : field_(span.field()),
      dom_(dom),
      cod_(cod),
      empty_(false),
      offset_(std::move(offset)),
      span_(span.rref()) {
  if (span.cols() != 2 * (dom + cod) || offset_.size() != 2 * (dom + cod)) {
    throw Error(Errc::dimension_mismatch,
                "affine graded relation " + std::to_string(dom) + " -> " +
                    std::to_string(cod) + " with offset of length " +
                    std::to_string(offset_.size()) + " and span of width " +
                    std::to_string(span.cols()));
  }
  offset_ = span_.reduce(std::move(offset_));
}

AffineGradedRelation AffineGradedRelation::empty(const Field& f,
                                                 std::size_t dom,
                                                 std::size_t cod) {
  return AffineGradedRelation(f, dom, cod);
}

AffineGradedRelation AffineGradedRelation::from_graded(
    const GradedRelation& r) {
  return AffineGradedRelation(
      r.dom(), r.cod(),
      std::vector<Scalar>(2 * (r.dom() + r.cod()), Scalar::zero(r.field())),
      r.span());
}

AffineGradedRelation AffineGradedRelation::x_shift(const Field& f,
                                                   std::size_t wires,
                                                   const Scalar& a,
                                                   std::size_t i) {
  GradedRelation id = GradedRelation::identity(f, wires);
  std::vector<Scalar> offset(4 * wires, Scalar::zero(f));
  offset[id.x_cod(i)] = a;
  return AffineGradedRelation(wires, wires, std::move(offset), id.span());
}

AffineGradedRelation AffineGradedRelation::z_shift(const Field& f,
                                                   std::size_t wires,
                                                   const Scalar& a,
                                                   std::size_t i) {
  GradedRelation id = GradedRelation::identity(f, wires);
  std::vector<Scalar> offset(4 * wires, Scalar::zero(f));
  offset[id.z_cod(i)] = a;
  return AffineGradedRelation(wires, wires, std::move(offset), id.span());
}

const Matrix& AffineGradedRelation::span() const {
  if (empty_) throw Error(Errc::invalid_argument, "span of an empty relation");
  return span_;
}

const std::vector<Scalar>& AffineGradedRelation::offset() const {
  if (empty_) {
    throw Error(Errc::invalid_argument, "offset of an empty relation");
  }
  return offset_;
}

bool AffineGradedRelation::offset_is_zero() const {
  if (empty_) return false;
  for (const Scalar& s : offset_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

GradedRelation AffineGradedRelation::linear_part() const {
  return GradedRelation(dom_, cod_, span());
}

GradedRelation AffineGradedRelation::to_graded() const {
  if (!offset_is_zero()) {
    throw Error(Errc::invalid_argument,
                "relation is not linear (empty or shifted)");
  }
  return GradedRelation(dom_, cod_, span_);
}

AffineGradedRelation AffineGradedRelation::then(
    const AffineGradedRelation& o) const {
  if (cod_ != o.dom_) {
    throw Error(Errc::arity_mismatch,
                "composing " + std::to_string(dom_) + " -> " +
                    std::to_string(cod_) + " with " + std::to_string(o.dom_) +
                    " -> " + std::to_string(o.cod_));
  }
  if (empty_ || o.empty_) {
    return AffineGradedRelation(field_, dom_, o.cod_);
  }
  auto pa = graded_to_flat_perm(dom_, cod_);
  auto pb = graded_to_flat_perm(o.dom_, o.cod_);
  AffineRelation fa(2 * dom_, 2 * cod_, permuted(offset_, pa),
                    span_.select_cols(pa));
  AffineRelation fb(2 * o.dom_, 2 * o.cod_, permuted(o.offset_, pb),
                    o.span_.select_cols(pb));
  AffineRelation fc = fa.then(fb);
  if (fc.is_empty()) return AffineGradedRelation(field_, dom_, o.cod_);
  auto pc = flat_to_graded_perm(dom_, o.cod_);
  return AffineGradedRelation(dom_, o.cod_, permuted(fc.offset(), pc),
                              fc.span().select_cols(pc));
}

AffineGradedRelation AffineGradedRelation::tensor(
    const AffineGradedRelation& o) const {
  if (field_ != o.field_) {
    throw Error(Errc::mixed_fields, "tensor across fields");
  }
  std::size_t n1 = dom_, m1 = cod_, n2 = o.dom_, m2 = o.cod_;
  std::size_t n = n1 + n2, m = m1 + m2;
  if (empty_ || o.empty_) return AffineGradedRelation(field_, n, m);
  auto xd = [&](std::size_t i) { return i; };
  auto xc = [&](std::size_t j) { return n + j; };
  auto zd = [&](std::size_t i) { return n + m + i; };
  auto zc = [&](std::size_t j) { return 2 * n + m + j; };
  GradedRelation ga = linear_part();
  GradedRelation gb = o.linear_part();
  Matrix span(field_, span_.rows() + o.span_.rows(), 2 * (n + m));
  std::vector<Scalar> offset(2 * (n + m), Scalar::zero(field_));
  for (std::size_t r = 0; r <= span_.rows(); ++r) {
    bool offset_row = r == span_.rows();
    auto src = [&](std::size_t col) {
      return offset_row ? offset_[col] : span_.at(r, col);
    };
    auto put = [&](std::size_t col, const Scalar& s) {
      if (offset_row) {
        offset[col] = s;
      } else {
        span.at(r, col) = s;
      }
    };
    for (std::size_t i = 0; i < n1; ++i) {
      put(xd(i), src(ga.x_dom(i)));
      put(zd(i), src(ga.z_dom(i)));
    }
    for (std::size_t j = 0; j < m1; ++j) {
      put(xc(j), src(ga.x_cod(j)));
      put(zc(j), src(ga.z_cod(j)));
    }
  }
  for (std::size_t r = 0; r <= o.span_.rows(); ++r) {
    bool offset_row = r == o.span_.rows();
    std::size_t rr = span_.rows() + r;
    auto src = [&](std::size_t col) {
      return offset_row ? o.offset_[col] : o.span_.at(r, col);
    };
    auto put = [&](std::size_t col, const Scalar& s) {
      if (offset_row) {
        offset[col] = s;
      } else {
        span.at(rr, col) = s;
      }
    };
    for (std::size_t i = 0; i < n2; ++i) {
      put(xd(n1 + i), src(gb.x_dom(i)));
      put(zd(n1 + i), src(gb.z_dom(i)));
    }
    for (std::size_t j = 0; j < m2; ++j) {
      put(xc(m1 + j), src(gb.x_cod(j)));
      put(zc(m1 + j), src(gb.z_cod(j)));
    }
  }
  return AffineGradedRelation(n, m, std::move(offset), span);
}

AffineGradedRelation AffineGradedRelation::converse() const {
  if (empty_) return AffineGradedRelation(field_, cod_, dom_);
  GradedRelation g = linear_part();
  std::vector<std::size_t> perm;
  for (std::size_t j = 0; j < cod_; ++j) perm.push_back(g.x_cod(j));
  for (std::size_t i = 0; i < dom_; ++i) perm.push_back(g.x_dom(i));
  for (std::size_t j = 0; j < cod_; ++j) perm.push_back(g.z_cod(j));
  for (std::size_t i = 0; i < dom_; ++i) perm.push_back(g.z_dom(i));
  return AffineGradedRelation(cod_, dom_, permuted(offset_, perm),
                              span_.select_cols(perm));
}

bool AffineGradedRelation::member(const std::vector<Scalar>& v) const {
  if (empty_) return false;
  if (v.size() != 2 * (dom_ + cod_)) {
    throw Error(Errc::dimension_mismatch, "membership probe of wrong length");
  }
  std::vector<Scalar> shifted;
  shifted.reserve(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    shifted.push_back(v[j] - offset_[j]);
  }
  return span_.row_space_contains(shifted);
}

bool AffineGradedRelation::operator==(const AffineGradedRelation& o) const {
  if (field_ != o.field_ || dom_ != o.dom_ || cod_ != o.cod_) return false;
  if (empty_ || o.empty_) return empty_ == o.empty_;
  return offset_ == o.offset_ && span_ == o.span_;
}

AffineGradedRelation compose(const AffineGradedRelation& a,
                             const AffineGradedRelation& b) {
  return a.then(b);
}

namespace {

AffineGradedRelation phased_spider(const Field& f, std::size_t dom,
                                   std::size_t cod, const Scalar& a,
                                   const Scalar& b, bool z_grading) {
  std::size_t w = dom + cod;
  // Leg t is x column t and z column w + t; domain legs come first.  Legs
  // of the common grading all take one shared value; the opposite grading
  // satisfies sum(cod) - sum(dom) = a + b * value.
  auto common = [&](std::size_t t) { return z_grading ? w + t : t; };
  auto other = [&](std::size_t t) { return z_grading ? t : w + t; };
  std::size_t rows = (w > 0 ? w - 1 : 0) + 1;
  Matrix sys(f, rows, 2 * w);
  std::vector<Scalar> rhs(rows, Scalar::zero(f));
  Scalar one = Scalar::one(f);
  for (std::size_t t = 1; t < w; ++t) {
    sys.at(t - 1, common(t)) = one;
    sys.at(t - 1, common(0)) = sys.at(t - 1, common(0)) - one;
  }
  std::size_t last = rows - 1;
  for (std::size_t i = 0; i < dom; ++i) {
    sys.at(last, other(i)) = sys.at(last, other(i)) - one;
  }
  for (std::size_t j = 0; j < cod; ++j) {
    sys.at(last, other(dom + j)) = sys.at(last, other(dom + j)) + one;
  }
  if (w > 0) sys.at(last, common(0)) = sys.at(last, common(0)) - b;
  rhs[last] = a;
  auto sol = solve_affine_system(sys, rhs);
  if (!sol) return AffineGradedRelation::empty(f, dom, cod);
  return AffineGradedRelation(dom, cod, std::move(sol->particular),
                              sol->kernel);
}

}  // namespace

AffineGradedRelation z_phased_spider(const Field& f, std::size_t dom,
                                     std::size_t cod, const Scalar& a,
                                     const Scalar& b) {
  return phased_spider(f, dom, cod, a, b, true);
}

AffineGradedRelation x_phased_spider(const Field& f, std::size_t dom,
                                     std::size_t cod, const Scalar& a,
                                     const Scalar& b) {
  return phased_spider(f, dom, cod, a, b, false);
}

}  // namespace lagrel
