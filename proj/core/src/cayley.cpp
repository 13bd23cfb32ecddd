#include "eucgraph/cayley.hpp"

namespace eucgraph {

ColoredCayleyGraph::ColoredCayleyGraph(QuadraticSpace space) : space_(std::move(space)) {
  const std::uint64_t n = space_.vertex_count();
  const std::uint32_t d = space_.dim();
  const std::uint32_t q = field().q();

  pow_q_.resize(d);
  std::uint64_t w = 1;
  for (std::uint32_t i = 0; i < d; ++i) { pow_q_[i] = w; w *= q; }

  digits_.resize(n * d);
  {
    std::vector<std::uint32_t> c(d, 0);
    for (std::uint64_t v = 0; v < n; ++v) {
      for (std::uint32_t i = 0; i < d; ++i) digits_[v * d + i] = c[i];
      for (std::uint32_t i = 0; i < d; ++i) {
        if (++c[i] < q) break;
        c[i] = 0;
      }
    }
  }

  color_of_diff_.resize(n);
  spheres_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) spheres_[a].radius = a;
  for (std::uint64_t v = 0; v < n; ++v) {
    std::uint32_t a = space_.form().evaluate_indices(vertex_digits(v));
    color_of_diff_[v] = a;
    spheres_[a].points.push_back(v);  // ascending by construction
  }
}

void ColoredCayleyGraph::require_color(std::uint32_t c) const {
  if (c == 0) raise(errc::color_zero, "0 is not an edge color");
  if (c >= field().q()) raise(errc::index_out_of_range, "color out of range");
}

const Sphere& ColoredCayleyGraph::sphere(std::uint32_t radius) const {
  if (radius >= field().q()) raise(errc::index_out_of_range, "radius out of range");
  return spheres_[radius];
}

std::uint64_t ColoredCayleyGraph::valency(std::uint32_t color) const {
  require_color(color);
  return spheres_[color].points.size();
}

std::uint64_t ColoredCayleyGraph::diff(std::uint64_t u, std::uint64_t v) const {
  const std::uint32_t d = dim();
  if (u >= vertex_count() || v >= vertex_count())
    raise(errc::index_out_of_range, "vertex index out of range");
  const Field& f = field();
  const std::uint32_t* du = digits_.data() + u * d;
  const std::uint32_t* dv = digits_.data() + v * d;
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i < d; ++i) out += pow_q_[i] * f.sub(du[i], dv[i]);
  return out;
}

std::uint64_t ColoredCayleyGraph::translate(std::uint64_t u, std::uint64_t z) const {
  const std::uint32_t d = dim();
  if (u >= vertex_count() || z >= vertex_count())
    raise(errc::index_out_of_range, "vertex index out of range");
  const Field& f = field();
  const std::uint32_t* du = digits_.data() + u * d;
  const std::uint32_t* dz = digits_.data() + z * d;
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i < d; ++i) out += pow_q_[i] * f.add(du[i], dz[i]);
  return out;
}

std::uint64_t ColoredCayleyGraph::negate_vertex(std::uint64_t z) const {
  const std::uint32_t d = dim();
  if (z >= vertex_count()) raise(errc::index_out_of_range, "vertex index out of range");
  const Field& f = field();
  const std::uint32_t* dz = digits_.data() + z * d;
  std::uint64_t out = 0;
  for (std::uint32_t i = 0; i < d; ++i) out += pow_q_[i] * f.neg(dz[i]);
  return out;
}

}  // namespace eucgraph
