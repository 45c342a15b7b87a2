#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lagrel/graded.hpp"

namespace lagrel {

// Solves m w = rhs.  Returns nothing when the system is inconsistent;
// otherwise the particular solution has zero free coordinates and the
// kernel rows form an echelon basis of the homogeneous solutions.
struct AffineSolution {
  std::vector<Scalar> particular;
  Matrix kernel;
};
std::optional<AffineSolution> solve_affine_system(const Matrix& m,
                                                  const std::vector<Scalar>& rhs);

// Affine relation n -> m over flat wires: either empty or a coset
// offset + span.  The stored offset is the unique coset representative
// with zero pivot coordinates, so equality is structural.
class AffineRelation {
 public:
  AffineRelation(std::size_t dom, std::size_t cod, std::vector<Scalar> offset,
                 const Matrix& span);
  static AffineRelation empty(const Field& f, std::size_t dom,
                              std::size_t cod);
  static AffineRelation from_linear(const LinearRelation& r);
  // The one-point state {1}.
  static AffineRelation one_state(const Field& f);

  bool is_empty() const { return empty_; }
  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  const Field& field() const { return field_; }
  const Matrix& span() const;
  const std::vector<Scalar>& offset() const;
  LinearRelation linear_part() const;

  AffineRelation then(const AffineRelation& o) const;
  AffineRelation tensor(const AffineRelation& o) const;
  AffineRelation converse() const;

  bool member(const std::vector<Scalar>& v) const;
  bool operator==(const AffineRelation& o) const;
  bool operator!=(const AffineRelation& o) const { return !(*this == o); }

 private:
  AffineRelation(const Field& f, std::size_t dom, std::size_t cod)
      : field_(f), dom_(dom), cod_(cod), empty_(true), span_(f, 0, 0) {}

  Field field_;
  std::size_t dom_, cod_;
  bool empty_;
  std::vector<Scalar> offset_;
  Matrix span_;
};

AffineRelation compose(const AffineRelation& a, const AffineRelation& b);

struct AxiomCheck {
  std::string name;
  bool ok;
};

// The defining equations of the one-point state {1}: colliding it with the
// zero effect empties the diagram, copying it yields two copies, deleting
// it leaves the unit scalar.
std::vector<AxiomCheck> one_state_axioms(const Field& f);

// Affine relation on graded wires, columns [x_dom | x_cod | z_dom | z_cod].
class AffineGradedRelation {
 public:
  AffineGradedRelation(std::size_t dom, std::size_t cod,
                       std::vector<Scalar> offset, const Matrix& span);
  static AffineGradedRelation empty(const Field& f, std::size_t dom,
                                    std::size_t cod);
  static AffineGradedRelation from_graded(const GradedRelation& r);

  // Translation by a along the x coordinate of wire i of `wires`, and
  // along the z coordinate respectively.
  static AffineGradedRelation x_shift(const Field& f, std::size_t wires,
                                      const Scalar& a, std::size_t i);
  static AffineGradedRelation z_shift(const Field& f, std::size_t wires,
                                      const Scalar& a, std::size_t i);

  bool is_empty() const { return empty_; }
  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  const Field& field() const { return field_; }
  const Matrix& span() const;
  const std::vector<Scalar>& offset() const;
  bool offset_is_zero() const;
  GradedRelation linear_part() const;
  // Requires a zero offset.
  GradedRelation to_graded() const;

  AffineGradedRelation then(const AffineGradedRelation& o) const;
  AffineGradedRelation tensor(const AffineGradedRelation& o) const;
  AffineGradedRelation converse() const;

  bool member(const std::vector<Scalar>& v) const;
  bool operator==(const AffineGradedRelation& o) const;
  bool operator!=(const AffineGradedRelation& o) const {
    return !(*this == o);
  }

 private:
  AffineGradedRelation(const Field& f, std::size_t dom, std::size_t cod)
      : field_(f), dom_(dom), cod_(cod), empty_(true), span_(f, 0, 0) {}

  Field field_;
  std::size_t dom_, cod_;
  bool empty_;
  std::vector<Scalar> offset_;
  Matrix span_;
};

AffineGradedRelation compose(const AffineGradedRelation& a,
                             const AffineGradedRelation& b);

// Phased spiders.  The z spider forces every z coordinate to a common
// value z and constrains the x coordinates by
//   sum(x out) - sum(x in) = a + b z;
// the x spider is its grading swap.  Phase (0, 0) recovers the doubled
// additive spiders, and phases add under spider fusion.
AffineGradedRelation z_phased_spider(const Field& f, std::size_t dom,
                                     std::size_t cod, const Scalar& a,
                                     const Scalar& b);
AffineGradedRelation x_phased_spider(const Field& f, std::size_t dom,
                                     std::size_t cod, const Scalar& a,
                                     const Scalar& b);

}  // namespace lagrel
