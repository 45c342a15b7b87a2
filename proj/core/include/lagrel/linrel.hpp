#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lagrel/matrix.hpp"

namespace lagrel {

// Linear relation n -> m: a subspace of k^n (+) k^m stored as the reduced
// row echelon form of a spanning matrix, domain coordinates first.  Two
// relations are equal exactly when their stored forms are equal.
class LinearRelation {
 public:
  LinearRelation(std::size_t dom, std::size_t cod, const Matrix& span);

  static LinearRelation identity(const Field& f, std::size_t n);
  // dom wire i connects to cod wire image[i].
  static LinearRelation permutation(const Field& f,
                                    const std::vector<std::size_t>& image);
  static LinearRelation swap2(const Field& f);

  // Additive spiders.  The z family forces all legs equal; the x family
  // forces the outputs to sum to the inputs.  The two are orthocomplements
  // of each other leg for leg.
  static LinearRelation z_spider(const Field& f, std::size_t n, std::size_t m);
  static LinearRelation x_spider(const Field& f, std::size_t n, std::size_t m);
  // {(t, a t)}: multiplication by a.
  static LinearRelation scale(const Field& f, const Scalar& a);
  // Named generator lookup used by the command line tool and tests.
  static LinearRelation generator(const Field& f, const std::string& name);

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  const Field& field() const { return span_.field(); }
  const Matrix& span() const { return span_; }
  std::size_t dim() const { return span_.rows(); }

  // Diagrammatic composition: *this runs first, then o.
  LinearRelation then(const LinearRelation& o) const;
  LinearRelation tensor(const LinearRelation& o) const;
  LinearRelation converse() const;
  // Orthogonal complement for the pairing that counts domain coordinates
  // positively and codomain coordinates negatively.  With this sign the
  // complement distributes over composition.
  LinearRelation orthocomplement() const;

  bool member(const std::vector<Scalar>& v) const;
  bool operator==(const LinearRelation& o) const;
  bool operator!=(const LinearRelation& o) const { return !(*this == o); }

 private:
  std::size_t dom_, cod_;
  Matrix span_;
};

inline LinearRelation compose(const LinearRelation& a, const LinearRelation& b) {
  return a.then(b);
}

}  // namespace lagrel
