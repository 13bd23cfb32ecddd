#include "eucgraph/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace eucgraph {
namespace {

std::uint64_t checked_point_count(const Field& field, std::uint32_t d) {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    if (n > kMaxSpectrumVertices / field.q())
      raise(errc::too_large, "spectrum over more than 2^22 vertices");
    n *= field.q();
  }
  return n;
}

void check_points(std::uint64_t n, std::span<const std::uint64_t> points) {
  std::uint64_t prev = 0;
  bool first = true;
  for (std::uint64_t v : points) {
    if (v >= n) raise(errc::index_out_of_range, "connection point out of range");
    if (!first && v <= prev) raise(errc::config_error, "connection points must be strictly ascending");
    prev = v;
    first = false;
  }
}

std::vector<std::complex<double>> sums_naive(const Field& field, std::uint32_t d,
                                             std::uint64_t n,
                                             std::span<const std::uint64_t> points) {
  const std::uint64_t q = field.q();
  std::vector<std::vector<std::uint32_t>> pts(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::uint64_t v = points[i];
    pts[i].resize(d);
    for (std::uint32_t k = 0; k < d; ++k) { pts[i][k] = std::uint32_t(v % q); v /= q; }
  }
  std::vector<std::complex<double>> out(n);
  std::vector<std::uint32_t> m(d, 0);
  for (std::uint64_t mi = 0; mi < n; ++mi) {
    std::complex<double> s = 0.0;
    for (const auto& x : pts) {
      std::uint32_t dot = 0;
      for (std::uint32_t k = 0; k < d; ++k) dot = field.add(dot, field.mul(x[k], m[k]));
      s += field.character(dot);
    }
    out[mi] = s;
    for (std::uint32_t k = 0; k < d; ++k) {
      if (++m[k] < q) break;
      m[k] = 0;
    }
  }
  return out;
}

// In-place DFT along every base-p axis: a[k] <- sum_x a[x] omega^{k.x} with
// omega = exp(2 pi i / p) and k.x the digitwise dot product mod p.
void dft_zp(std::vector<std::complex<double>>& a, std::uint32_t p, std::uint32_t axes) {
  std::vector<std::complex<double>> omega(p);
  for (std::uint32_t k = 0; k < p; ++k) {
    double ang = 2.0 * std::numbers::pi * double(k) / double(p);
    omega[k] = std::complex<double>(std::cos(ang), std::sin(ang));
  }
  const std::size_t n = a.size();
  std::vector<std::complex<double>> buf(p);
  std::size_t stride = 1;
  for (std::uint32_t axis = 0; axis < axes; ++axis, stride *= p) {
    const std::size_t block = stride * p;
    for (std::size_t base = 0; base < n; base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::uint32_t i = 0; i < p; ++i) buf[i] = a[base + off + i * stride];
        for (std::uint32_t k = 0; k < p; ++k) {
          std::complex<double> s = 0.0;
          for (std::uint32_t i = 0; i < p; ++i) s += buf[i] * omega[(k * i) % p];
          a[base + off + k * stride] = s;
        }
      }
    }
  }
}

// A vertex index is already mixed-radix base p: coordinate i contributes its
// r coefficient digits at positions i*r..i*r+r-1. The field dot product
// pairs with the plain digit dot product through the trace form
// T[j][k] = trace(alpha^{j+k}): chi(x . m) = omega^{digits(x) . mtilde} with
// mtilde_{i,j} = sum_k T[j][k] m_{i,k} mod p. So one base-p DFT plus this
// digit remap yields every character sum at once.
std::vector<std::complex<double>> sums_dft(const Field& field, std::uint32_t d,
                                           std::uint64_t n,
                                           std::span<const std::uint64_t> points) {
  const std::uint32_t p = field.p();
  const std::uint32_t r = field.r();

  std::vector<std::uint32_t> tform(std::size_t(r) * r);
  {
    std::uint32_t alpha = (r == 1) ? 1u : p;  // class of x in F_p[x]/(modulus)
    for (std::uint32_t j = 0; j < r; ++j)
      for (std::uint32_t k = 0; k < r; ++k)
        tform[j * r + k] = field.trace(field.pow(alpha, j + k));
  }

  std::vector<std::complex<double>> a(n, 0.0);
  for (std::uint64_t v : points) a[v] = 1.0;
  dft_zp(a, p, r * d);

  std::vector<std::complex<double>> out(n);
  std::vector<std::uint32_t> digits(std::size_t(r) * d, 0);
  for (std::uint64_t m = 0; m < n; ++m) {
    std::uint64_t idx = 0, w = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
      const std::uint32_t* mi = digits.data() + std::size_t(i) * r;
      for (std::uint32_t j = 0; j < r; ++j) {
        std::uint32_t acc = 0;
        for (std::uint32_t k = 0; k < r; ++k) acc += tform[j * r + k] * mi[k];
        idx += (acc % p) * w;
        w *= p;
      }
    }
    out[m] = a[idx];
    for (std::size_t t = 0; t < digits.size(); ++t) {
      if (++digits[t] < p) break;
      digits[t] = 0;
    }
  }
  return out;
}

}  // namespace

std::vector<std::complex<double>> character_sums(const Field& field, std::uint32_t d,
                                                 std::span<const std::uint64_t> points,
                                                 SpectrumMethod method) {
  if (d < 1) raise(errc::config_error, "dimension must be >= 1");
  const std::uint64_t n = checked_point_count(field, d);
  check_points(n, points);
  if (method == SpectrumMethod::kAuto) method = SpectrumMethod::kDft;
  return method == SpectrumMethod::kCharacterSum ? sums_naive(field, d, n, points)
                                                 : sums_dft(field, d, n, points);
}

double eigenvalue(const ColoredCayleyGraph& graph, std::uint32_t color, std::uint64_t m) {
  graph.require_color(color);
  const Field& f = graph.field();
  if (m >= graph.vertex_count()) raise(errc::index_out_of_range, "frequency out of range");
  auto md = graph.vertex_digits(m);
  std::complex<double> s = 0.0;
  for (std::uint64_t v : graph.sphere(color).points) {
    auto xd = graph.vertex_digits(v);
    std::uint32_t dot = 0;
    for (std::uint32_t k = 0; k < graph.dim(); ++k) dot = f.add(dot, f.mul(xd[k], md[k]));
    s += f.character(dot);
  }
  if (std::abs(s.imag()) >= 1e-9)
    raise(errc::non_real_eigenvalue, "character sum has nonzero imaginary part");
  return s.real();
}

SpectrumReport spectrum_of_set(const Field& field, std::uint32_t d,
                               std::span<const std::uint64_t> points, std::uint32_t label,
                               SpectrumMethod method, bool require_real) {
  auto sums = character_sums(field, d, points, method);
  SpectrumReport rep;
  rep.color = label;
  rep.valency = points.size();
  rep.bound = 2.0 * std::pow(double(field.q()), (double(d) - 1.0) / 2.0);

  double max_imag = 0.0, max_nt = 0.0;
  rep.eigenvalues.resize(sums.size());
  for (std::size_t m = 0; m < sums.size(); ++m) {
    max_imag = std::max(max_imag, std::abs(sums[m].imag()));
    rep.eigenvalues[m] = sums[m].real();
    if (m != 0) max_nt = std::max(max_nt, std::abs(sums[m].real()));
  }
  rep.max_imag_residual = max_imag;
  if (require_real && max_imag >= 1e-9)
    raise(errc::non_real_eigenvalue, "connection set is not symmetric: spectrum is complex");

  // lambda_0 counts the set; snap away the last-bit noise so reports carry
  // the integer exactly.
  if (std::abs(rep.eigenvalues[0] - double(rep.valency)) > 1e-6 * std::max<double>(1.0, double(rep.valency)))
    raise(errc::internal_error, "trivial eigenvalue does not match the valency");
  rep.eigenvalues[0] = double(rep.valency);

  rep.max_nontrivial = max_nt;
  rep.ramanujan_ok = max_nt <= rep.bound + 1e-6;
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(), std::greater<double>());
  return rep;
}

SpectrumReport full_spectrum(const ColoredCayleyGraph& graph, std::uint32_t color,
                             SpectrumMethod method) {
  graph.require_color(color);
  return spectrum_of_set(graph.field(), graph.dim(), graph.sphere(color).points, color,
                         method, true);
}

std::vector<double> dense_spectrum_oracle(const ColoredCayleyGraph& graph, std::uint32_t color,
                                          std::uint64_t cap) {
  graph.require_color(color);
  const std::uint64_t n = graph.vertex_count();
  if (n > cap)
    raise(errc::too_large, "dense eigensolve refused above " + std::to_string(cap) + " vertices");
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(Eigen::Index(n), Eigen::Index(n));
  for (std::uint64_t u = 0; u < n; ++u)
    for (std::uint64_t s : graph.sphere(color).points)
      adj(Eigen::Index(u), Eigen::Index(graph.translate(u, s))) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adj, Eigen::EigenvaluesOnly);
  if (solver.info() == Eigen::Success) {
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::reverse(out.begin(), out.end());  // ascending -> descending
    return out;
  }
  // These adjacency matrices have a handful of distinct eigenvalues with
  // multiplicities in the hundreds, which can stall the tridiagonal QL sweep
  // at its fixed iteration cap. Real Schur is a different iteration and
  // converges on them; the matrix is symmetric so the result must be real.
  Eigen::EigenSolver<Eigen::MatrixXd> schur(adj, false);
  if (schur.info() != Eigen::Success) raise(errc::internal_error, "eigensolver failed");
  if (schur.eigenvalues().imag().cwiseAbs().maxCoeff() > 1e-8 * double(n))
    raise(errc::internal_error, "symmetric matrix produced complex eigenvalues");
  std::vector<double> out(n);
  for (std::uint64_t i = 0; i < n; ++i) out[i] = schur.eigenvalues()[Eigen::Index(i)].real();
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

FDistanceReport f_distance_spectrum(const Field& field, std::uint32_t d,
                                    std::span<const std::uint32_t> table, std::uint32_t j,
                                    SpectrumMethod method) {
  const std::uint64_t n = checked_point_count(field, d);
  if (table.size() != n) raise(errc::dimension_mismatch, "value table must have q^d entries");
  if (j >= field.q()) raise(errc::index_out_of_range, "target value out of range");
  for (std::uint32_t value : table)
    if (value >= field.q()) raise(errc::index_out_of_range, "table value out of range");

  std::vector<std::uint64_t> points;
  for (std::uint64_t v = 0; v < n; ++v)
    if (table[v] == j) points.push_back(v);

  // negate a vertex id coordinatewise to test S = -S
  const std::uint64_t q = field.q();
  std::vector<bool> member(n, false);
  for (std::uint64_t v : points) member[v] = true;
  bool symmetric = true;
  for (std::uint64_t v : points) {
    std::uint64_t rest = v, negated = 0, w = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
      negated += std::uint64_t(field.neg(std::uint32_t(rest % q))) * w;
      rest /= q;
      w *= q;
    }
    if (!member[negated]) { symmetric = false; break; }
  }

  auto sums = character_sums(field, d, points, method);
  FDistanceReport rep;
  rep.j = j;
  rep.set_size = points.size();
  rep.directed = !symmetric;
  rep.bound = 2.0 * std::pow(double(field.q()), (double(d) - 1.0) / 2.0);

  double max_imag = 0.0, max_nt = 0.0;
  rep.values.resize(sums.size());
  for (std::size_t m = 0; m < sums.size(); ++m) {
    max_imag = std::max(max_imag, std::abs(sums[m].imag()));
    double mag = std::abs(sums[m]);
    rep.values[m] = rep.directed ? mag : sums[m].real();
    if (m != 0) max_nt = std::max(max_nt, mag);
  }
  rep.max_imag_residual = max_imag;
  if (!rep.directed && max_imag >= 1e-9)
    raise(errc::non_real_eigenvalue, "symmetric set produced a complex spectrum");
  if (std::abs(rep.values[0] - double(rep.set_size)) > 1e-6 * std::max<double>(1.0, double(rep.set_size)))
    raise(errc::internal_error, "trivial eigenvalue does not match the set size");
  rep.values[0] = double(rep.set_size);

  rep.max_nontrivial = max_nt;
  rep.ramanujan_ok = max_nt <= rep.bound + 1e-6;
  rep.c1 = max_nt / std::pow(double(field.q()), (double(d) - 1.0) / 2.0);
  rep.c2 = double(rep.set_size) / std::pow(double(field.q()), double(d) - 1.0);
  std::sort(rep.values.begin(), rep.values.end(), std::greater<double>());
  return rep;
}

std::vector<std::uint32_t> value_table_from_expression(const Field& field, std::uint32_t d,
                                                       const std::string& name) {
  const std::uint64_t n = checked_point_count(field, d);
  const std::uint64_t q = field.q();
  std::vector<std::uint32_t> table(n);

  std::function<std::uint32_t(std::span<const std::uint32_t>)> eval;
  if (name == "norm") {
    eval = [&](std::span<const std::uint32_t> x) {
      std::uint32_t acc = 0;
      for (std::uint32_t c : x) acc = field.add(acc, field.mul(c, c));
      return acc;
    };
  } else if (name == "sum-cubes") {
    eval = [&](std::span<const std::uint32_t> x) {
      std::uint32_t acc = 0;
      for (std::uint32_t c : x) acc = field.add(acc, field.mul(c, field.mul(c, c)));
      return acc;
    };
  } else if (name.rfind("constant:", 0) == 0) {
    std::uint32_t k = 0;
    try {
      k = std::uint32_t(std::stoul(name.substr(9)));
    } catch (const std::exception&) {
      raise(errc::config_error, "constant expression needs an element index");
    }
    if (k >= q) raise(errc::index_out_of_range, "constant value out of range");
    eval = [k](std::span<const std::uint32_t>) { return k; };
  } else {
    raise(errc::config_error, "unknown distance expression: " + name);
  }

  std::vector<std::uint32_t> c(d, 0);
  for (std::uint64_t v = 0; v < n; ++v) {
    table[v] = eval(c);
    for (std::uint32_t i = 0; i < d; ++i) {
      if (++c[i] < q) break;
      c[i] = 0;
    }
  }
  return table;
}

}  // namespace eucgraph
