#ifndef EUCGRAPH_QUADRATIC_HPP
#define EUCGRAPH_QUADRATIC_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "eucgraph/field.hpp"

namespace eucgraph {

// Point of F_q^d held as d element indices, coordinate 0 first.
class Vector {
 public:
  Vector(std::shared_ptr<const Field> field, std::vector<std::uint32_t> coords);

  std::uint32_t dim() const noexcept { return static_cast<std::uint32_t>(coords_.size()); }
  const Field& field() const noexcept { return *field_; }
  std::uint32_t coord_index(std::uint32_t i) const;
  const std::vector<std::uint32_t>& coord_indices() const noexcept { return coords_; }

  bool operator==(const Vector& o) const {
    return coords_ == o.coords_ && field_->same_structure(*o.field_);
  }

 private:
  std::shared_ptr<const Field> field_;
  std::vector<std::uint32_t> coords_;
};

// Non-degenerate symmetric bilinear data for Q(x) = x^T M x. Stored as a
// row-major d x d Gram matrix of element indices. Characteristic is odd, so
// symmetric Gram matrices and quadratic forms are the same thing and
// non-degeneracy is det(M) != 0.
class QuadraticForm {
 public:
  QuadraticForm(std::shared_ptr<const Field> field, std::uint32_t dim,
                std::vector<std::uint32_t> gram);

  static QuadraticForm identity(std::shared_ptr<const Field> field, std::uint32_t dim);
  static QuadraticForm diagonal(std::shared_ptr<const Field> field,
                                std::vector<std::uint32_t> diag);
  // diag(1,...,1,g) with g the smallest nonresidue: the standard
  // representative of the other equivalence class in odd characteristic.
  static QuadraticForm nonresidue(std::shared_ptr<const Field> field, std::uint32_t dim);

  const Field& field() const noexcept { return *field_; }
  std::shared_ptr<const Field> field_ptr() const noexcept { return field_; }
  std::uint32_t dim() const noexcept { return dim_; }
  std::uint32_t gram(std::uint32_t i, std::uint32_t j) const;
  const std::vector<std::uint32_t>& gram_entries() const noexcept { return gram_; }
  bool is_diagonal() const noexcept;

  // Q(x) for x given as d element indices.
  std::uint32_t evaluate_indices(std::span<const std::uint32_t> coords) const;
  FieldElement evaluate(const Vector& x) const;

 private:
  std::shared_ptr<const Field> field_;
  std::uint32_t dim_;
  std::vector<std::uint32_t> gram_;
};

// All points at squared distance `radius` from the origin, as ascending
// vertex indices. radius 0 is the zero set of Q (origin included), never an
// edge color.
struct Sphere {
  std::uint32_t radius;
  std::vector<std::uint64_t> points;

  std::uint64_t size() const noexcept { return points.size(); }
};

struct PairCountReport {
  std::uint32_t t;
  std::uint64_t sphere_size;
  std::uint64_t count;          // ordered pairs (x, y) with Q(x - y) = t
  double ratio_q2d1;            // count / q^{2d-1}
};

// F_q^d with a fixed form: vertex indexing, evaluation, spheres.
// vertex_index is positional base q with coordinate 0 least significant,
// so vertex v has coordinates (v % q, v/q % q, ...).
class QuadraticSpace {
 public:
  explicit QuadraticSpace(QuadraticForm form);

  const Field& field() const noexcept { return form_.field(); }
  std::shared_ptr<const Field> field_ptr() const noexcept { return form_.field_ptr(); }
  const QuadraticForm& form() const noexcept { return form_; }
  std::uint32_t dim() const noexcept { return form_.dim(); }
  std::uint64_t vertex_count() const noexcept { return n_; }

  std::uint64_t vertex_index(const Vector& x) const;
  std::uint64_t vertex_index(std::span<const std::uint32_t> coords) const;
  Vector vertex(std::uint64_t v) const;
  void decode(std::uint64_t v, std::span<std::uint32_t> out) const;

  // Q at the vertex with this index.
  std::uint32_t evaluate_vertex(std::uint64_t v) const;

  Sphere sphere(std::uint32_t radius) const;
  std::vector<std::uint64_t> sphere_sizes() const;  // indexed by radius 0..q-1

  // Ordered pairs at squared distance t, by translation invariance
  // q^d * |sphere(t)|.
  std::uint64_t pair_count(std::uint32_t t) const;
  PairCountReport pair_count_report(std::uint32_t t) const;

 private:
  QuadraticForm form_;
  std::uint64_t n_;
  std::vector<std::uint64_t> pow_q_;
};

}  // namespace eucgraph

#endif
