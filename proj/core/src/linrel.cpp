#include "lagrel/linrel.hpp"

namespace lagrel {

LinearRelation::LinearRelation(std::size_t dom, std::size_t cod,
                               const Matrix& span)
    : dom_(dom), cod_(cod), span_(span.rref()) {
  if (span.cols() != dom + cod) {
    throw Error(Errc::dimension_mismatch,
                "relation " + std::to_string(dom) + " -> " +
                    std::to_string(cod) + " spanned by a matrix of width " +
                    std::to_string(span.cols()));
  }
}

LinearRelation LinearRelation::identity(const Field& f, std::size_t n) {
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) image[i] = i;
  return permutation(f, image);
}

LinearRelation LinearRelation::permutation(
    const Field& f, const std::vector<std::size_t>& image) {
  std::size_t n = image.size();
  std::vector<bool> seen(n, false);
  Matrix m(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (image[i] >= n || seen[image[i]]) {
      throw Error(Errc::invalid_argument, "not a permutation");
    }
    seen[image[i]] = true;
    m.at(i, i) = Scalar::one(f);
    m.at(i, n + image[i]) = Scalar::one(f);
  }
  return LinearRelation(n, n, m);
}

LinearRelation LinearRelation::swap2(const Field& f) {
  return permutation(f, {1, 0});
}

LinearRelation LinearRelation::z_spider(const Field& f, std::size_t n,
                                        std::size_t m) {
  Matrix span(f, n + m > 0 ? 1 : 0, n + m);
  for (std::size_t j = 0; j < n + m; ++j) span.at(0, j) = Scalar::one(f);
  return LinearRelation(n, m, span);
}

LinearRelation LinearRelation::x_spider(const Field& f, std::size_t n,
                                        std::size_t m) {
  Matrix constraint(f, 1, n + m);
  for (std::size_t j = 0; j < n; ++j) constraint.at(0, j) = Scalar::one(f);
  for (std::size_t j = 0; j < m; ++j) {
    constraint.at(0, n + j) = -Scalar::one(f);
  }
  return LinearRelation(n, m, constraint.kernel());
}

LinearRelation LinearRelation::scale(const Field& f, const Scalar& a) {
  Matrix span(f, 1, 2);
  span.at(0, 0) = Scalar::one(f);
  span.at(0, 1) = a;
  return LinearRelation(1, 1, span);
}

LinearRelation LinearRelation::generator(const Field& f,
                                         const std::string& name) {
  if (name == "id") return identity(f, 1);
  if (name == "swap") return swap2(f);
  if (name == "cup") return z_spider(f, 0, 2);
  if (name == "cap") return z_spider(f, 2, 0);
  if (name == "z_copy") return z_spider(f, 1, 2);
  if (name == "z_counit") return z_spider(f, 1, 0);
  if (name == "z_unit") return z_spider(f, 0, 1);
  if (name == "x_add") return x_spider(f, 2, 1);
  if (name == "x_coadd") return x_spider(f, 1, 2);
  if (name == "x_unit") return x_spider(f, 0, 1);
  if (name == "x_zero") return x_spider(f, 1, 0);
  if (name == "antipode") return scale(f, -Scalar::one(f));
  throw Error(Errc::unknown_generator, name);
}

LinearRelation LinearRelation::then(const LinearRelation& o) const {
  if (cod_ != o.dom_) {
    throw Error(Errc::arity_mismatch,
                "composing " + std::to_string(dom_) + " -> " +
                    std::to_string(cod_) + " with " + std::to_string(o.dom_) +
                    " -> " + std::to_string(o.cod_));
  }
  std::size_t n = dom_, m = cod_, k = o.cod_;
  // Constraints cut out each relation; a middle vector y must satisfy both.
  Matrix ca = span_.kernel();
  Matrix cb = o.span_.kernel();
  Matrix sys(span_.field(), ca.rows() + cb.rows(), n + m + k);
  for (std::size_t r = 0; r < ca.rows(); ++r) {
    for (std::size_t j = 0; j < n + m; ++j) sys.at(r, j) = ca.at(r, j);
  }
  for (std::size_t r = 0; r < cb.rows(); ++r) {
    for (std::size_t j = 0; j < m + k; ++j) {
      sys.at(ca.rows() + r, n + j) = cb.at(r, j);
    }
  }
  Matrix sol = sys.kernel();
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j) keep.push_back(j);
  for (std::size_t j = 0; j < k; ++j) keep.push_back(n + m + j);
  return LinearRelation(n, k, sol.select_cols(keep));
}

LinearRelation LinearRelation::tensor(const LinearRelation& o) const {
  if (span_.field() != o.span_.field()) {
    throw Error(Errc::mixed_fields, "tensor across fields");
  }
  std::size_t n1 = dom_, m1 = cod_, n2 = o.dom_, m2 = o.cod_;
  Matrix m(span_.field(), span_.rows() + o.span_.rows(),
           n1 + n2 + m1 + m2);
  for (std::size_t r = 0; r < span_.rows(); ++r) {
    for (std::size_t j = 0; j < n1; ++j) m.at(r, j) = span_.at(r, j);
    for (std::size_t j = 0; j < m1; ++j) {
      m.at(r, n1 + n2 + j) = span_.at(r, n1 + j);
    }
  }
  for (std::size_t r = 0; r < o.span_.rows(); ++r) {
    for (std::size_t j = 0; j < n2; ++j) {
      m.at(span_.rows() + r, n1 + j) = o.span_.at(r, j);
    }
    for (std::size_t j = 0; j < m2; ++j) {
      m.at(span_.rows() + r, n1 + n2 + m1 + j) = o.span_.at(r, n2 + j);
    }
  }
  return LinearRelation(n1 + n2, m1 + m2, m);
}

LinearRelation LinearRelation::converse() const {
  std::vector<std::size_t> perm;
  for (std::size_t j = 0; j < cod_; ++j) perm.push_back(dom_ + j);
  for (std::size_t j = 0; j < dom_; ++j) perm.push_back(j);
  return LinearRelation(cod_, dom_, span_.select_cols(perm));
}

LinearRelation LinearRelation::orthocomplement() const {
  Matrix signed_span = span_;
  for (std::size_t r = 0; r < signed_span.rows(); ++r) {
    for (std::size_t j = dom_; j < dom_ + cod_; ++j) {
      signed_span.at(r, j) = -signed_span.at(r, j);
    }
  }
  return LinearRelation(dom_, cod_, signed_span.kernel());
}

bool LinearRelation::member(const std::vector<Scalar>& v) const {
  return span_.row_space_contains(v);
}

bool LinearRelation::operator==(const LinearRelation& o) const {
  return dom_ == o.dom_ && cod_ == o.cod_ && span_ == o.span_;
}

}  // namespace lagrel
