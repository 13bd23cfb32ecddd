#ifndef EUCGRAPH_SPECTRUM_HPP
#define EUCGRAPH_SPECTRUM_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eucgraph/cayley.hpp"

namespace eucgraph {

enum class SpectrumMethod {
  kAuto,          // kDft; the choice depends only on the inputs, never on timing
  kCharacterSum,  // direct O(n * |S|) sums, the correctness reference
  kDft,           // multidimensional DFT over Z_p^{rd}, O(n * p * rd)
};

// result[m] = sum over x in points of chi(x . m), where . is the standard
// dot product on F_q^d and m runs over all vertex indices. The translation
// action diagonalizes every Cayley adjacency operator simultaneously, so
// these sums are exactly the eigenvalues of the color class with connection
// set `points`. Indices in `points` must be strictly ascending vertex ids.
std::vector<std::complex<double>> character_sums(const Field& field, std::uint32_t d,
                                                 std::span<const std::uint64_t> points,
                                                 SpectrumMethod method = SpectrumMethod::kAuto);

// Single eigenvalue of one color class, by the direct sum.
double eigenvalue(const ColoredCayleyGraph& graph, std::uint32_t color, std::uint64_t m);

struct SpectrumReport {
  std::uint32_t color = 0;
  std::uint64_t valency = 0;
  std::vector<double> eigenvalues;   // all n, sorted descending
  double max_nontrivial = 0.0;       // max over m != 0 of |lambda_m|
  double bound = 0.0;                // 2 q^{(d-1)/2}
  bool ramanujan_ok = false;         // max_nontrivial <= bound + 1e-6
  double max_imag_residual = 0.0;    // worst |Im| seen before realizing
};

// Spectra above this vertex count would need gigabytes; refuse early.
inline constexpr std::uint64_t kMaxSpectrumVertices = std::uint64_t(1) << 22;

SpectrumReport full_spectrum(const ColoredCayleyGraph& graph, std::uint32_t color,
                             SpectrumMethod method = SpectrumMethod::kAuto);

// Same report for an arbitrary connection set S inside F_q^d (ascending
// vertex ids, 0 allowed; a 0 in S is a loop at every vertex). With
// require_real, an imaginary residual >= 1e-9 throws NonRealEigenvalue;
// symmetric sets always pass. `label` is carried into the report's color
// field untouched.
SpectrumReport spectrum_of_set(const Field& field, std::uint32_t d,
                               std::span<const std::uint64_t> points, std::uint32_t label,
                               SpectrumMethod method = SpectrumMethod::kAuto,
                               bool require_real = true);

// Builds the actual n x n adjacency matrix of one color class and runs a
// dense symmetric eigensolver on it. Quadratic memory, cubic time: a check
// for the character-sum paths, not a computation path. Sorted descending.
std::vector<double> dense_spectrum_oracle(const ColoredCayleyGraph& graph, std::uint32_t color,
                                          std::uint64_t cap = 1000);

// Graph of an arbitrary distance function F: connection set {x : F(x) = j},
// F given as a value table indexed by vertex id with q^d entries. The set
// need not be symmetric; `directed` records that, and then `values` holds
// moduli |lambda_m| instead of signed eigenvalues.
struct FDistanceReport {
  std::uint32_t j = 0;
  std::uint64_t set_size = 0;
  bool directed = false;
  std::vector<double> values;        // sorted descending
  double max_nontrivial = 0.0;       // max over m != 0 of |lambda_m|
  double c1 = 0.0;                   // max_nontrivial / q^{(d-1)/2}
  double c2 = 0.0;                   // |lambda_0| / q^{d-1}
  double bound = 0.0;
  bool ramanujan_ok = false;
  double max_imag_residual = 0.0;
};

FDistanceReport f_distance_spectrum(const Field& field, std::uint32_t d,
                                    std::span<const std::uint32_t> table, std::uint32_t j,
                                    SpectrumMethod method = SpectrumMethod::kAuto);

// Value tables for a few built-in distance functions:
//   "norm"          sum of x_i^2
//   "sum-cubes"     sum of x_i^3
//   "constant:<k>"  the constant k (element index)
std::vector<std::uint32_t> value_table_from_expression(const Field& field, std::uint32_t d,
                                                       const std::string& name);

}  // namespace eucgraph

#endif
