#ifndef EUCGRAPH_CAYLEY_HPP
#define EUCGRAPH_CAYLEY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "eucgraph/quadratic.hpp"

namespace eucgraph {

// The complete graph on F_q^d with each pair {x, y} carrying the color
// Q(x - y) in F_q^*; pairs with Q(x - y) = 0 carry no color. Each color
// class is the Cayley graph on the sphere of that radius. -S = S because
// Q(-z) = Q(z), so every color class is undirected and |sphere|-regular.
class ColoredCayleyGraph {
 public:
  explicit ColoredCayleyGraph(QuadraticSpace space);

  const QuadraticSpace& space() const noexcept { return space_; }
  const Field& field() const noexcept { return space_.field(); }
  std::uint32_t dim() const noexcept { return space_.dim(); }
  std::uint64_t vertex_count() const noexcept { return space_.vertex_count(); }

  // Edge colors are 1..q-1.
  std::uint32_t color_count() const noexcept { return field().q() - 1; }
  bool is_color(std::uint32_t c) const noexcept { return c >= 1 && c < field().q(); }
  void require_color(std::uint32_t c) const;

  // radius 0..q-1; radius 0 is the null sphere, not a color class.
  const Sphere& sphere(std::uint32_t radius) const;
  std::uint64_t valency(std::uint32_t color) const;

  // Q(u - v); zero means "no colored edge" (including u = v).
  std::uint32_t color_of(std::uint64_t u, std::uint64_t v) const {
    return color_of_diff_[diff(u, v)];
  }

  std::uint64_t diff(std::uint64_t u, std::uint64_t v) const;
  std::uint64_t translate(std::uint64_t u, std::uint64_t z) const;
  std::uint64_t negate_vertex(std::uint64_t z) const;

  std::span<const std::uint32_t> vertex_digits(std::uint64_t v) const {
    return {digits_.data() + v * dim(), dim()};
  }

 private:
  QuadraticSpace space_;
  std::vector<Sphere> spheres_;            // by radius 0..q-1
  std::vector<std::uint32_t> color_of_diff_;
  std::vector<std::uint32_t> digits_;      // n * d coordinate table
  std::vector<std::uint64_t> pow_q_;
};

}  // namespace eucgraph

#endif
