#include "eucgraph/quadratic.hpp"

#include <cmath>

namespace eucgraph {

Vector::Vector(std::shared_ptr<const Field> field, std::vector<std::uint32_t> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) raise(errc::config_error, "vector needs a field");
  for (std::uint32_t c : coords_)
    if (c >= field_->q()) raise(errc::index_out_of_range, "coordinate index out of range");
}

std::uint32_t Vector::coord_index(std::uint32_t i) const {
  if (i >= coords_.size()) raise(errc::index_out_of_range, "coordinate position out of range");
  return coords_[i];
}

namespace {

// Gaussian elimination over F_q on a copy of the Gram matrix; rank < d
// means the form is degenerate.
bool nondegenerate(const Field& f, std::uint32_t d, std::vector<std::uint32_t> m) {
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < d && rank < d; ++col) {
    std::uint32_t pivot = d;
    for (std::uint32_t row = rank; row < d; ++row)
      if (m[row * d + col] != 0) { pivot = row; break; }
    if (pivot == d) continue;
    for (std::uint32_t j = 0; j < d; ++j)
      std::swap(m[pivot * d + j], m[rank * d + j]);
    std::uint32_t s = f.inv(m[rank * d + col]);
    for (std::uint32_t row = rank + 1; row < d; ++row) {
      std::uint32_t factor = f.mul(m[row * d + col], s);
      if (factor == 0) continue;
      for (std::uint32_t j = 0; j < d; ++j)
        m[row * d + j] = f.sub(m[row * d + j], f.mul(factor, m[rank * d + j]));
    }
    ++rank;
  }
  return rank == d;
}

}  // namespace

QuadraticForm::QuadraticForm(std::shared_ptr<const Field> field, std::uint32_t dim,
                             std::vector<std::uint32_t> gram)
    : field_(std::move(field)), dim_(dim), gram_(std::move(gram)) {
  if (!field_) raise(errc::config_error, "form needs a field");
  if (dim_ < 1) raise(errc::config_error, "form dimension must be >= 1");
  if (gram_.size() != std::size_t(dim_) * dim_)
    raise(errc::dimension_mismatch, "gram matrix must have dim*dim entries");
  for (std::uint32_t e : gram_)
    if (e >= field_->q()) raise(errc::index_out_of_range, "gram entry out of range");
  for (std::uint32_t i = 0; i < dim_; ++i)
    for (std::uint32_t j = i + 1; j < dim_; ++j)
      if (gram_[i * dim_ + j] != gram_[j * dim_ + i])
        raise(errc::config_error, "gram matrix must be symmetric");
  if (!nondegenerate(*field_, dim_, gram_))
    raise(errc::config_error, "gram matrix is degenerate");
}

QuadraticForm QuadraticForm::identity(std::shared_ptr<const Field> field, std::uint32_t dim) {
  std::vector<std::uint32_t> g(std::size_t(dim) * dim, 0);
  for (std::uint32_t i = 0; i < dim; ++i) g[i * dim + i] = 1;
  return QuadraticForm(std::move(field), dim, std::move(g));
}

QuadraticForm QuadraticForm::diagonal(std::shared_ptr<const Field> field,
                                      std::vector<std::uint32_t> diag) {
  std::uint32_t dim = static_cast<std::uint32_t>(diag.size());
  std::vector<std::uint32_t> g(std::size_t(dim) * dim, 0);
  for (std::uint32_t i = 0; i < dim; ++i) g[i * dim + i] = diag[i];
  return QuadraticForm(std::move(field), dim, std::move(g));
}

QuadraticForm QuadraticForm::nonresidue(std::shared_ptr<const Field> field, std::uint32_t dim) {
  std::vector<std::uint32_t> diag(dim, 1);
  diag[dim - 1] = field->smallest_nonresidue();
  return diagonal(std::move(field), std::move(diag));
}

std::uint32_t QuadraticForm::gram(std::uint32_t i, std::uint32_t j) const {
  if (i >= dim_ || j >= dim_) raise(errc::index_out_of_range, "gram position out of range");
  return gram_[i * dim_ + j];
}

bool QuadraticForm::is_diagonal() const noexcept {
  for (std::uint32_t i = 0; i < dim_; ++i)
    for (std::uint32_t j = 0; j < dim_; ++j)
      if (i != j && gram_[i * dim_ + j] != 0) return false;
  return true;
}

std::uint32_t QuadraticForm::evaluate_indices(std::span<const std::uint32_t> coords) const {
  if (coords.size() != dim_) raise(errc::dimension_mismatch, "point has wrong dimension");
  const Field& f = *field_;
  std::uint32_t acc = 0;
  if (is_diagonal()) {
    for (std::uint32_t i = 0; i < dim_; ++i)
      acc = f.add(acc, f.mul(gram_[i * dim_ + i], f.mul(coords[i], coords[i])));
    return acc;
  }
  for (std::uint32_t i = 0; i < dim_; ++i) {
    std::uint32_t row = 0;
    for (std::uint32_t j = 0; j < dim_; ++j)
      row = f.add(row, f.mul(gram_[i * dim_ + j], coords[j]));
    acc = f.add(acc, f.mul(coords[i], row));
  }
  return acc;
}

FieldElement QuadraticForm::evaluate(const Vector& x) const {
  if (!field_->same_structure(x.field()))
    raise(errc::field_mismatch, "point and form live over different fields");
  return field_->element(evaluate_indices(x.coord_indices()));
}

QuadraticSpace::QuadraticSpace(QuadraticForm form) : form_(std::move(form)) {
  const std::uint64_t q = form_.field().q();
  const std::uint32_t d = form_.dim();
  n_ = 1;
  pow_q_.resize(d);
  for (std::uint32_t i = 0; i < d; ++i) {
    pow_q_[i] = n_;
    if (n_ > (std::uint64_t(1) << 24) / q)
      raise(errc::too_large, "q^d exceeds the enumeration limit 2^24");
    n_ *= q;
  }
}

std::uint64_t QuadraticSpace::vertex_index(std::span<const std::uint32_t> coords) const {
  if (coords.size() != dim()) raise(errc::dimension_mismatch, "point has wrong dimension");
  std::uint64_t v = 0;
  for (std::uint32_t i = 0; i < dim(); ++i) {
    if (coords[i] >= field().q()) raise(errc::index_out_of_range, "coordinate out of range");
    v += pow_q_[i] * coords[i];
  }
  return v;
}

std::uint64_t QuadraticSpace::vertex_index(const Vector& x) const {
  if (!field().same_structure(x.field()))
    raise(errc::field_mismatch, "point lives over a different field");
  return vertex_index(std::span<const std::uint32_t>(x.coord_indices()));
}

void QuadraticSpace::decode(std::uint64_t v, std::span<std::uint32_t> out) const {
  if (v >= n_) raise(errc::index_out_of_range, "vertex index out of range");
  if (out.size() != dim()) raise(errc::dimension_mismatch, "output span has wrong dimension");
  const std::uint64_t q = field().q();
  for (std::uint32_t i = 0; i < dim(); ++i) {
    out[i] = static_cast<std::uint32_t>(v % q);
    v /= q;
  }
}

Vector QuadraticSpace::vertex(std::uint64_t v) const {
  std::vector<std::uint32_t> c(dim());
  decode(v, c);
  return Vector(field_ptr(), std::move(c));
}

std::uint32_t QuadraticSpace::evaluate_vertex(std::uint64_t v) const {
  std::vector<std::uint32_t> c(dim());
  decode(v, c);
  return form_.evaluate_indices(c);
}

Sphere QuadraticSpace::sphere(std::uint32_t radius) const {
  if (radius >= field().q()) raise(errc::index_out_of_range, "radius out of range");
  Sphere s;
  s.radius = radius;
  std::vector<std::uint32_t> c(dim(), 0);
  for (std::uint64_t v = 0; v < n_; ++v) {
    if (form_.evaluate_indices(c) == radius) s.points.push_back(v);
    // odometer step keeps decode out of the hot loop
    for (std::uint32_t i = 0; i < dim(); ++i) {
      if (++c[i] < field().q()) break;
      c[i] = 0;
    }
  }
  return s;
}

std::vector<std::uint64_t> QuadraticSpace::sphere_sizes() const {
  std::vector<std::uint64_t> sizes(field().q(), 0);
  std::vector<std::uint32_t> c(dim(), 0);
  for (std::uint64_t v = 0; v < n_; ++v) {
    ++sizes[form_.evaluate_indices(c)];
    for (std::uint32_t i = 0; i < dim(); ++i) {
      if (++c[i] < field().q()) break;
      c[i] = 0;
    }
  }
  return sizes;
}

std::uint64_t QuadraticSpace::pair_count(std::uint32_t t) const {
  return n_ * sphere(t).size();
}

PairCountReport QuadraticSpace::pair_count_report(std::uint32_t t) const {
  PairCountReport rep;
  rep.t = t;
  rep.sphere_size = sphere(t).size();
  rep.count = n_ * rep.sphere_size;
  const double q = field().q();
  const double d = dim();
  rep.ratio_q2d1 = double(rep.count) / std::pow(q, 2.0 * d - 1.0);
  return rep;
}

}  // namespace eucgraph
