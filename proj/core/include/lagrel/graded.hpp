#pragma once

#include <cstddef>
#include <vector>

#include "lagrel/linrel.hpp"

namespace lagrel {

// Relation between graded wires.  Each wire carries an x and a z
// coordinate; columns are ordered [x_dom | x_cod | z_dom | z_cod].  The
// span is kept in reduced row echelon form, so equality is structural.
//
// The ambient space carries the symplectic form for which the identity
// and every gate graph is Lagrangian; states (dom = 0) see the standard
// form pairing x against z.
class GradedRelation {
 public:
  GradedRelation(std::size_t dom, std::size_t cod, const Matrix& span);

  // Column indices into the graded layout.
  std::size_t x_dom(std::size_t i) const { return i; }
  std::size_t x_cod(std::size_t j) const { return dom_ + j; }
  std::size_t z_dom(std::size_t i) const { return dom_ + cod_ + i; }
  std::size_t z_cod(std::size_t j) const { return 2 * dom_ + cod_ + j; }

  // Reinterprets a flat relation 2n -> 2m whose wire coordinates are
  // ordered (x..., z...) on each side.
  static GradedRelation from_linear(const LinearRelation& r);
  LinearRelation to_linear() const;

  // The doubling functor: x side gets the orthocomplement, z side the
  // relation itself.  Always Lagrangian, and functorial for composition
  // and tensor.
  static GradedRelation doubled(const LinearRelation& v);

  static Matrix ambient_form(const Field& f, std::size_t dom, std::size_t cod);

  static GradedRelation identity(const Field& f, std::size_t n);
  static GradedRelation permutation(const Field& f,
                                    const std::vector<std::size_t>& image);
  static GradedRelation cup(const Field& f);
  static GradedRelation cap(const Field& f);
  // Preparation of the x-grading point: x free, z pinned to zero.
  static GradedRelation zero_state(const Field& f, std::size_t n);

  // One-parameter discard family: the effect {(x, z) : z = -a x}.
  static GradedRelation discard(const Scalar& a);
  // Same effect assembled from an x-spider fanout whose n branches are
  // each closed by the basic two-leg pairing; prime fields only.
  static GradedRelation discard_from_cap(const Field& f, std::size_t n);

  // Invertible one and two wire gates, given by their right action on row
  // vectors (x | z) of the doubled space.
  static GradedRelation gate_f(const Field& f, std::size_t wires,
                               std::size_t i);
  static GradedRelation gate_finv(const Field& f, std::size_t wires,
                                  std::size_t i);
  static GradedRelation gate_s(const Field& f, std::size_t wires,
                               const Scalar& a, std::size_t i);
  static GradedRelation gate_v(const Field& f, std::size_t wires,
                               const Scalar& a, std::size_t i);
  static GradedRelation gate_c(const Field& f, std::size_t wires,
                               const Scalar& a, std::size_t i, std::size_t j);

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  const Field& field() const { return span_.field(); }
  const Matrix& span() const { return span_; }
  std::size_t dim() const { return span_.rows(); }

  GradedRelation then(const GradedRelation& o) const;
  GradedRelation tensor(const GradedRelation& o) const;
  GradedRelation converse() const;
  // Adjoint; coincides with the converse for relations.
  GradedRelation dagger() const { return converse(); }
  // Exchanges the x and z coordinates of every wire.
  GradedRelation grading_swap() const;

  // Bends all domain wires to the codomain (negating their x coordinates)
  // and back.  Preserves the Lagrangian property.
  GradedRelation curry() const;
  GradedRelation uncurry(std::size_t dom) const;

  GradedRelation symplectic_dual() const;
  bool is_isotropic() const;
  bool is_coisotropic() const;
  bool is_lagrangian() const;

  bool member(const std::vector<Scalar>& v) const;
  bool operator==(const GradedRelation& o) const;
  bool operator!=(const GradedRelation& o) const { return !(*this == o); }

 private:
  std::size_t dom_, cod_;
  Matrix span_;
};

inline GradedRelation compose(const GradedRelation& a, const GradedRelation& b) {
  return a.then(b);
}

}  // namespace lagrel
