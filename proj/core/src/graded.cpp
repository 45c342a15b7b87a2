#include "lagrel/graded.hpp"

#include <string>

namespace lagrel {

namespace {

// Graph of a right action matrix m (2n x 2n, coordinates x then z) as a
// relation on n wires.
GradedRelation from_right_action(const Field& f, std::size_t n,
                                 const Matrix& m) {
  Matrix span(f, 2 * n, 4 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) {
    std::size_t dom_col = k < n ? k : 2 * n + (k - n);
    span.at(k, dom_col) = Scalar::one(f);
    for (std::size_t t = 0; t < 2 * n; ++t) {
      std::size_t cod_col = t < n ? n + t : 3 * n + (t - n);
      span.at(k, cod_col) = m.at(k, t);
    }
  }
  return GradedRelation(n, n, span);
}

void check_wire(std::size_t i, std::size_t wires) {
  if (i >= wires) {
    throw Error(Errc::index_out_of_range,
                "wire " + std::to_string(i) + " of " + std::to_string(wires));
  }
}

void run_convention_checks();

// The gate and discard conventions interlock; this runs the defining
// identities once per process and refuses to hand out gates that would
// violate them.
void ensure_conventions() {
  static thread_local bool running = false;
  if (running) return;
  running = true;
  struct Guard {
    bool& flag;
    ~Guard() { flag = false; }
  } guard{running};
  static const bool done = [] {
    run_convention_checks();
    return true;
  }();
  (void)done;
}

}  // namespace

GradedRelation::GradedRelation(std::size_t dom, std::size_t cod,
                               const Matrix& span)
    : dom_(dom), cod_(cod), span_(span.rref()) {
  if (span.cols() != 2 * (dom + cod)) {
    throw Error(Errc::dimension_mismatch,
                "graded relation " + std::to_string(dom) + " -> " +
                    std::to_string(cod) + " spanned by a matrix of width " +
                    std::to_string(span.cols()));
  }
}

GradedRelation GradedRelation::from_linear(const LinearRelation& r) {
  if (r.dom() % 2 != 0 || r.cod() % 2 != 0) {
    throw Error(Errc::arity_mismatch,
                "graded reinterpretation of odd flat arity");
  }
  std::size_t n = r.dom() / 2, m = r.cod() / 2;
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < n; ++i) perm.push_back(i);
  for (std::size_t j = 0; j < m; ++j) perm.push_back(2 * n + j);
  for (std::size_t i = 0; i < n; ++i) perm.push_back(n + i);
  for (std::size_t j = 0; j < m; ++j) perm.push_back(2 * n + m + j);
  return GradedRelation(n, m, r.span().select_cols(perm));
}

LinearRelation GradedRelation::to_linear() const {
  std::size_t n = dom_, m = cod_;
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < n; ++i) perm.push_back(x_dom(i));
  for (std::size_t i = 0; i < n; ++i) perm.push_back(z_dom(i));
  for (std::size_t j = 0; j < m; ++j) perm.push_back(x_cod(j));
  for (std::size_t j = 0; j < m; ++j) perm.push_back(z_cod(j));
  return LinearRelation(2 * n, 2 * m, span_.select_cols(perm));
}

GradedRelation GradedRelation::doubled(const LinearRelation& v) {
  std::size_t n = v.dom(), m = v.cod();
  Matrix x = v.orthocomplement().span();
  const Matrix& z = v.span();
  Matrix span(v.field(), x.rows() + z.rows(), 2 * (n + m));
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t j = 0; j < n + m; ++j) span.at(r, j) = x.at(r, j);
  }
  for (std::size_t r = 0; r < z.rows(); ++r) {
    for (std::size_t j = 0; j < n + m; ++j) {
      span.at(x.rows() + r, n + m + j) = z.at(r, j);
    }
  }
  return GradedRelation(n, m, span);
}

Matrix GradedRelation::ambient_form(const Field& f, std::size_t dom,
                                    std::size_t cod) {
  std::size_t w = dom + cod;
  Matrix omega(f, 2 * w, 2 * w);
  Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < dom; ++i) {
    omega.at(i, w + i) = -one;
    omega.at(w + i, i) = one;
  }
  for (std::size_t j = 0; j < cod; ++j) {
    omega.at(dom + j, w + dom + j) = one;
    omega.at(w + dom + j, dom + j) = -one;
  }
  return omega;
}

GradedRelation GradedRelation::identity(const Field& f, std::size_t n) {
  return doubled(LinearRelation::identity(f, n));
}

GradedRelation GradedRelation::permutation(
    const Field& f, const std::vector<std::size_t>& image) {
  return doubled(LinearRelation::permutation(f, image));
}

GradedRelation GradedRelation::cup(const Field& f) {
  return doubled(LinearRelation::z_spider(f, 0, 2));
}

GradedRelation GradedRelation::cap(const Field& f) {
  return doubled(LinearRelation::z_spider(f, 2, 0));
}

GradedRelation GradedRelation::zero_state(const Field& f, std::size_t n) {
  Matrix span(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) span.at(i, i) = Scalar::one(f);
  return GradedRelation(0, n, span);
}

GradedRelation GradedRelation::discard(const Scalar& a) {
  ensure_conventions();
  Matrix span(a.field(), 1, 2);
  span.at(0, 0) = Scalar::one(a.field());
  span.at(0, 1) = -a;
  return GradedRelation(1, 0, span);
}

GradedRelation GradedRelation::discard_from_cap(const Field& f,
                                                std::size_t n) {
  if (!f.is_prime()) {
    throw Error(Errc::field_not_prime,
                "cap-assembled discards need a prime field");
  }
  ensure_conventions();
  // Variables (x, z, r_1..r_n, s_1..s_n): the x coordinate fans out to the
  // r branches, the s branches sum into z, and each (r_i, s_i) pair is
  // closed by the two-leg pairing r_i + s_i = 0.
  Matrix sys(f, 2 * n + 1, 2 * n + 2);
  Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < n; ++i) {
    sys.at(i, 2 + i) = one;
    sys.at(i, 0) = -one;
    sys.at(n + 1 + i, 2 + i) = one;
    sys.at(n + 1 + i, 2 + n + i) = one;
  }
  sys.at(n, 1) = one;
  for (std::size_t i = 0; i < n; ++i) sys.at(n, 2 + n + i) = -one;
  Matrix sol = sys.kernel();
  return GradedRelation(1, 0, sol.select_cols({0, 1}));
}

GradedRelation GradedRelation::gate_f(const Field& f, std::size_t wires,
                                      std::size_t i) {
  ensure_conventions();
  check_wire(i, wires);
  Matrix m = Matrix::identity(f, 2 * wires);
  Scalar one = Scalar::one(f);
  m.at(i, i) = Scalar::zero(f);
  m.at(wires + i, wires + i) = Scalar::zero(f);
  m.at(i, wires + i) = one;
  m.at(wires + i, i) = -one;
  return from_right_action(f, wires, m);
}

GradedRelation GradedRelation::gate_finv(const Field& f, std::size_t wires,
                                         std::size_t i) {
  ensure_conventions();
  check_wire(i, wires);
  Matrix m = Matrix::identity(f, 2 * wires);
  Scalar one = Scalar::one(f);
  m.at(i, i) = Scalar::zero(f);
  m.at(wires + i, wires + i) = Scalar::zero(f);
  m.at(i, wires + i) = -one;
  m.at(wires + i, i) = one;
  return from_right_action(f, wires, m);
}

GradedRelation GradedRelation::gate_s(const Field& f, std::size_t wires,
                                      const Scalar& a, std::size_t i) {
  ensure_conventions();
  check_wire(i, wires);
  Matrix m = Matrix::identity(f, 2 * wires);
  m.at(i, wires + i) = a;
  return from_right_action(f, wires, m);
}

GradedRelation GradedRelation::gate_v(const Field& f, std::size_t wires,
                                      const Scalar& a, std::size_t i) {
  ensure_conventions();
  check_wire(i, wires);
  Matrix m = Matrix::identity(f, 2 * wires);
  m.at(wires + i, i) = -a;
  return from_right_action(f, wires, m);
}

GradedRelation GradedRelation::gate_c(const Field& f, std::size_t wires,
                                      const Scalar& a, std::size_t i,
                                      std::size_t j) {
  ensure_conventions();
  check_wire(i, wires);
  check_wire(j, wires);
  if (i == j) {
    throw Error(Errc::equal_indices, "controlled gate on wire " +
                                         std::to_string(i) + " twice");
  }
  Matrix m = Matrix::identity(f, 2 * wires);
  m.at(i, j) = -a;
  m.at(wires + j, wires + i) = a;
  return from_right_action(f, wires, m);
}

GradedRelation GradedRelation::then(const GradedRelation& o) const {
  if (cod_ != o.dom_) {
    throw Error(Errc::arity_mismatch,
                "composing " + std::to_string(dom_) + " -> " +
                    std::to_string(cod_) + " with " + std::to_string(o.dom_) +
                    " -> " + std::to_string(o.cod_));
  }
  return from_linear(to_linear().then(o.to_linear()));
}

GradedRelation GradedRelation::tensor(const GradedRelation& o) const {
  if (field() != o.field()) {
    throw Error(Errc::mixed_fields, "tensor across fields");
  }
  std::size_t n1 = dom_, m1 = cod_, n2 = o.dom_, m2 = o.cod_;
  std::size_t n = n1 + n2, m = m1 + m2;
  Matrix span(field(), span_.rows() + o.span_.rows(), 2 * (n + m));
  auto xd = [&](std::size_t i) { return i; };
  auto xc = [&](std::size_t j) { return n + j; };
  auto zd = [&](std::size_t i) { return n + m + i; };
  auto zc = [&](std::size_t j) { return 2 * n + m + j; };
  for (std::size_t r = 0; r < span_.rows(); ++r) {
    for (std::size_t i = 0; i < n1; ++i) {
      span.at(r, xd(i)) = span_.at(r, x_dom(i));
      span.at(r, zd(i)) = span_.at(r, z_dom(i));
    }
    for (std::size_t j = 0; j < m1; ++j) {
      span.at(r, xc(j)) = span_.at(r, x_cod(j));
      span.at(r, zc(j)) = span_.at(r, z_cod(j));
    }
  }
  for (std::size_t r = 0; r < o.span_.rows(); ++r) {
    std::size_t rr = span_.rows() + r;
    for (std::size_t i = 0; i < n2; ++i) {
      span.at(rr, xd(n1 + i)) = o.span_.at(r, o.x_dom(i));
      span.at(rr, zd(n1 + i)) = o.span_.at(r, o.z_dom(i));
    }
    for (std::size_t j = 0; j < m2; ++j) {
      span.at(rr, xc(m1 + j)) = o.span_.at(r, o.x_cod(j));
      span.at(rr, zc(m1 + j)) = o.span_.at(r, o.z_cod(j));
    }
  }
  return GradedRelation(n, m, span);
}

GradedRelation GradedRelation::converse() const {
  std::vector<std::size_t> perm;
  for (std::size_t j = 0; j < cod_; ++j) perm.push_back(x_cod(j));
  for (std::size_t i = 0; i < dom_; ++i) perm.push_back(x_dom(i));
  for (std::size_t j = 0; j < cod_; ++j) perm.push_back(z_cod(j));
  for (std::size_t i = 0; i < dom_; ++i) perm.push_back(z_dom(i));
  return GradedRelation(cod_, dom_, span_.select_cols(perm));
}

GradedRelation GradedRelation::grading_swap() const {
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < dom_; ++i) perm.push_back(z_dom(i));
  for (std::size_t j = 0; j < cod_; ++j) perm.push_back(z_cod(j));
  for (std::size_t i = 0; i < dom_; ++i) perm.push_back(x_dom(i));
  for (std::size_t j = 0; j < cod_; ++j) perm.push_back(x_cod(j));
  return GradedRelation(dom_, cod_, span_.select_cols(perm));
}

GradedRelation GradedRelation::curry() const {
  Matrix span = span_;
  for (std::size_t r = 0; r < span.rows(); ++r) {
    for (std::size_t i = 0; i < dom_; ++i) {
      span.at(r, x_dom(i)) = -span.at(r, x_dom(i));
    }
  }
  return GradedRelation(0, dom_ + cod_, span);
}

GradedRelation GradedRelation::uncurry(std::size_t dom) const {
  if (dom_ != 0 || dom > cod_) {
    throw Error(Errc::arity_mismatch, "uncurry needs a state with at least " +
                                          std::to_string(dom) + " wires");
  }
  Matrix span = span_;
  for (std::size_t r = 0; r < span.rows(); ++r) {
    for (std::size_t i = 0; i < dom; ++i) {
      span.at(r, i) = -span.at(r, i);
    }
  }
  return GradedRelation(dom, cod_ - dom, span);
}

GradedRelation GradedRelation::symplectic_dual() const {
  Matrix omega = ambient_form(field(), dom_, cod_);
  return GradedRelation(dom_, cod_, (span_ * omega).kernel());
}

bool GradedRelation::is_isotropic() const {
  Matrix omega = ambient_form(field(), dom_, cod_);
  Matrix pairing = span_ * omega * span_.transpose();
  for (std::size_t i = 0; i < pairing.rows(); ++i) {
    for (std::size_t j = 0; j < pairing.cols(); ++j) {
      if (!pairing.at(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool GradedRelation::is_coisotropic() const {
  GradedRelation dual = symplectic_dual();
  for (std::size_t r = 0; r < dual.span_.rows(); ++r) {
    std::vector<Scalar> row;
    row.reserve(dual.span_.cols());
    for (std::size_t j = 0; j < dual.span_.cols(); ++j) {
      row.push_back(dual.span_.at(r, j));
    }
    if (!span_.row_space_contains(row)) return false;
  }
  return true;
}

bool GradedRelation::is_lagrangian() const {
  return dim() == dom_ + cod_ && is_isotropic();
}

bool GradedRelation::member(const std::vector<Scalar>& v) const {
  return span_.row_space_contains(v);
}

bool GradedRelation::operator==(const GradedRelation& o) const {
  return dom_ == o.dom_ && cod_ == o.cod_ && span_ == o.span_;
}

namespace {

void run_convention_checks() {
  for (std::uint64_t p : {2ull, 5ull}) {
    Field f = Field::fp(p);
    GradedRelation id1 = GradedRelation::identity(f, 1);
    GradedRelation euler =
        GradedRelation::gate_s(f, 1, Scalar::one(f), 0)
            .then(GradedRelation::gate_v(f, 1, Scalar::one(f), 0))
            .then(GradedRelation::gate_s(f, 1, Scalar::one(f), 0));
    if (euler != GradedRelation::gate_f(f, 1, 0)) {
      throw Error(Errc::euler_identity_failed,
                  "shear decomposition of the point swap over " + f.str());
    }
    GradedRelation px =
        GradedRelation::doubled(LinearRelation::x_spider(f, 1, 2));
    GradedRelation pz =
        GradedRelation::doubled(LinearRelation::z_spider(f, 1, 2));
    for (std::uint64_t v = 0; v < p; ++v) {
      Scalar a = Scalar::from_int(f, static_cast<long long>(v));
      GradedRelation da = GradedRelation::discard(a);
      if (px.then(id1.tensor(da)) != GradedRelation::gate_s(f, 1, a, 0)) {
        throw Error(Errc::euler_identity_failed,
                    "discard family does not reproduce the z shears over " +
                        f.str());
      }
      if (!a.is_zero()) {
        GradedRelation db = GradedRelation::discard(-a.inverse());
        if (pz.then(id1.tensor(db)) != GradedRelation::gate_v(f, 1, a, 0)) {
          throw Error(Errc::euler_identity_failed,
                      "discard family does not reproduce the x shears over " +
                          f.str());
        }
      }
    }
    GradedRelation d0 = GradedRelation::discard(Scalar::zero(f));
    if (d0 != GradedRelation::doubled(LinearRelation::x_spider(f, 1, 0))) {
      throw Error(Errc::euler_identity_failed,
                  "zero discard is not the doubled zero effect over " +
                      f.str());
    }
  }
}

}  // namespace

}  // namespace lagrel
