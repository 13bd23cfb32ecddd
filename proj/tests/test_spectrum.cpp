#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>

#include "eucgraph/spectrum.hpp"

using namespace eucgraph;

namespace {

ColoredCayleyGraph graph_of(std::uint32_t p, std::uint32_t r, std::uint32_t d,
                            bool nonres = false) {
  auto f = std::make_shared<Field>(make_field(p, r));
  auto form = nonres ? QuadraticForm::nonresidue(f, d) : QuadraticForm::identity(f, d);
  return ColoredCayleyGraph(QuadraticSpace(std::move(form)));
}

}  // namespace

TEST_CASE("3x3 torus spectrum, frozen") {
  auto g = graph_of(3, 1, 2);
  for (auto method : {SpectrumMethod::kCharacterSum, SpectrumMethod::kDft}) {
    SpectrumReport rep = full_spectrum(g, 1, method);
    CHECK_EQ(rep.valency, 4u);
    CHECK_EQ(rep.eigenvalues.size(), 9u);
    CHECK_EQ(rep.eigenvalues[0], 4.0);  // snapped exactly
    const double expect[9] = {4, 1, 1, 1, 1, -2, -2, -2, -2};
    for (int i = 0; i < 9; ++i) CHECK_EQ(rep.eigenvalues[i], doctest::Approx(expect[i]).epsilon(1e-10));
    CHECK_EQ(rep.max_nontrivial, doctest::Approx(2.0));
    CHECK_EQ(rep.bound, doctest::Approx(2.0 * std::sqrt(3.0)));
    CHECK(rep.ramanujan_ok);
    CHECK(rep.max_imag_residual < 1e-12);
  }
  // single-frequency path agrees: m = (1,0) gives 2cos(2pi/3) + 2 = 1
  CHECK_EQ(eigenvalue(g, 1, 1), doctest::Approx(1.0));
  CHECK_EQ(eigenvalue(g, 1, 0), doctest::Approx(4.0));
}

TEST_CASE("first and second moments") {
  // colors exclude 0, so sum lambda = 0; Parseval gives sum lambda^2 = n |S|
  for (auto [p, r, d] : {std::tuple{3u, 1u, 2u}, {5u, 1u, 2u}, {3u, 2u, 2u}, {3u, 1u, 3u}}) {
    for (bool nonres : {false, true}) {
      auto g = graph_of(p, r, d, nonres);
      const double n = double(g.vertex_count());
      for (std::uint32_t c = 1; c < g.field().q(); ++c) {
        SpectrumReport rep = full_spectrum(g, c);
        CHECK_EQ(rep.eigenvalues[0], double(rep.valency));
        double s1 = 0.0, s2 = 0.0;
        for (double lam : rep.eigenvalues) { s1 += lam; s2 += lam * lam; }
        CHECK(std::abs(s1) < 1e-6);
        CHECK_EQ(s2, doctest::Approx(n * double(rep.valency)).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("dft path equals the direct sums") {
  for (auto [p, r, d] : {std::tuple{3u, 1u, 2u}, {3u, 2u, 2u}, {5u, 1u, 2u},
                         {5u, 2u, 1u}, {3u, 1u, 3u}, {7u, 1u, 2u}}) {
    auto f = std::make_shared<Field>(make_field(p, r));
    for (bool nonres : {false, true}) {
      auto form = nonres ? QuadraticForm::nonresidue(f, d) : QuadraticForm::identity(f, d);
      QuadraticSpace space(form);
      for (std::uint32_t radius = 0; radius < f->q(); ++radius) {
        auto pts = space.sphere(radius).points;
        auto a = character_sums(*f, d, pts, SpectrumMethod::kCharacterSum);
        auto b = character_sums(*f, d, pts, SpectrumMethod::kDft);
        REQUIRE_EQ(a.size(), b.size());
        for (std::size_t m = 0; m < a.size(); ++m)
          CHECK(std::abs(a[m] - b[m]) < 1e-9);
      }
    }
    // asymmetric sets exercise the complex case
    std::vector<std::uint64_t> odd{1};
    auto a = character_sums(*f, d, odd, SpectrumMethod::kCharacterSum);
    auto b = character_sums(*f, d, odd, SpectrumMethod::kDft);
    for (std::size_t m = 0; m < a.size(); ++m) CHECK(std::abs(a[m] - b[m]) < 1e-9);
  }
}

TEST_CASE("dense eigensolver agrees with character sums") {
  for (auto [p, r, d] : {std::tuple{3u, 1u, 2u}, {5u, 1u, 2u}, {7u, 1u, 2u}, {3u, 1u, 3u}}) {
    for (bool nonres : {false, true}) {
      auto g = graph_of(p, r, d, nonres);
      for (std::uint32_t c = 1; c < g.field().q(); ++c) {
        SpectrumReport rep = full_spectrum(g, c);
        auto dense = dense_spectrum_oracle(g, c);
        REQUIRE_EQ(dense.size(), rep.eigenvalues.size());
        for (std::size_t i = 0; i < dense.size(); ++i)
          CHECK_EQ(dense[i], doctest::Approx(rep.eigenvalues[i]).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("norm distance table reproduces the sphere graphs") {
  auto f = std::make_shared<Field>(make_field(5, 1));
  auto g = graph_of(5, 1, 2);
  auto table = value_table_from_expression(*f, 2, "norm");
  for (std::uint32_t j = 1; j < 5; ++j) {
    FDistanceReport fd = f_distance_spectrum(*f, 2, table, j);
    SpectrumReport sp = full_spectrum(g, j);
    CHECK_FALSE(fd.directed);
    CHECK_EQ(fd.set_size, sp.valency);
    REQUIRE_EQ(fd.values.size(), sp.eigenvalues.size());
    for (std::size_t i = 0; i < fd.values.size(); ++i)
      CHECK_EQ(fd.values[i], doctest::Approx(sp.eigenvalues[i]).epsilon(1e-10));
    CHECK_EQ(fd.c1, doctest::Approx(fd.max_nontrivial / std::sqrt(5.0)));
    CHECK_EQ(fd.c2, doctest::Approx(double(fd.set_size) / 5.0));
  }
  // j = 0 keeps the null sphere, origin included
  FDistanceReport z = f_distance_spectrum(*f, 2, table, 0);
  CHECK_EQ(z.set_size, 9u);  // -1 is a square mod 5, so the zero set is two lines
  CHECK_FALSE(z.directed);
}

TEST_CASE("constant distance table") {
  auto f = std::make_shared<Field>(make_field(3, 1));
  auto table = value_table_from_expression(*f, 2, "constant:2");
  FDistanceReport hit = f_distance_spectrum(*f, 2, table, 2);
  CHECK_EQ(hit.set_size, 9u);
  CHECK_FALSE(hit.directed);
  CHECK_EQ(hit.values[0], 9.0);
  for (std::size_t i = 1; i < hit.values.size(); ++i) CHECK(std::abs(hit.values[i]) < 1e-9);
  CHECK_EQ(hit.c1, doctest::Approx(0.0));
  CHECK_EQ(hit.c2, doctest::Approx(3.0));
  FDistanceReport miss = f_distance_spectrum(*f, 2, table, 1);
  CHECK_EQ(miss.set_size, 0u);
  CHECK_EQ(miss.max_nontrivial, 0.0);
  CHECK(miss.ramanujan_ok);
}

TEST_CASE("asymmetric distance function over F_7") {
  auto f = std::make_shared<Field>(make_field(7, 1));
  auto table = value_table_from_expression(*f, 2, "sum-cubes");
  FDistanceReport rep = f_distance_spectrum(*f, 2, table, 1);
  CHECK(rep.directed);
  CHECK_EQ(rep.set_size, 6u);
  CHECK_EQ(rep.values[0], 6.0);
  CHECK_EQ(rep.c2, doctest::Approx(6.0 / 7.0));
  CHECK(rep.max_imag_residual > 1e-9);
  double s2 = 0.0;
  for (double v : rep.values) s2 += v * v;  // moduli, so Parseval still holds
  CHECK_EQ(s2, doctest::Approx(49.0 * 6.0).epsilon(1e-9));
}

TEST_CASE("asymmetric connection sets are rejected unless asked for") {
  auto f = make_field(3, 1);
  std::vector<std::uint64_t> pts{1};  // (1,0) alone, negation missing
  CHECK_THROWS_AS(spectrum_of_set(f, 2, pts, 1), Error);
  try {
    spectrum_of_set(f, 2, pts, 1);
  } catch (const Error& e) {
    CHECK_EQ(e.code(), errc::non_real_eigenvalue);
  }
  SpectrumReport rep = spectrum_of_set(f, 2, pts, 1, SpectrumMethod::kAuto, false);
  CHECK_EQ(rep.valency, 1u);
  CHECK_EQ(rep.eigenvalues[0], 1.0);
  CHECK_EQ(rep.max_imag_residual, doctest::Approx(std::sin(2.0 * std::numbers::pi / 3.0)));
}

TEST_CASE("input validation") {
  auto f = make_field(3, 1);
  std::vector<std::uint64_t> bad_order{2, 1};
  CHECK_THROWS_AS(character_sums(f, 2, bad_order), Error);
  std::vector<std::uint64_t> dup{1, 1};
  CHECK_THROWS_AS(character_sums(f, 2, dup), Error);
  std::vector<std::uint64_t> oor{9};
  CHECK_THROWS_AS(character_sums(f, 2, oor), Error);

  auto big = make_field(13, 1);
  std::vector<std::uint64_t> none;
  CHECK_THROWS_AS(character_sums(big, 6, none), Error);  // 13^6 > 2^22
  try {
    character_sums(big, 6, none);
  } catch (const Error& e) {
    CHECK_EQ(e.code(), errc::too_large);
  }

  auto g = graph_of(5, 1, 2);
  CHECK_THROWS_AS(full_spectrum(g, 0), Error);
  CHECK_THROWS_AS(full_spectrum(g, 5), Error);
  CHECK_THROWS_AS(eigenvalue(g, 1, 25), Error);
  CHECK_THROWS_AS(dense_spectrum_oracle(g, 1, 10), Error);

  auto f7 = make_field(7, 1);
  std::vector<std::uint32_t> short_table(10, 0);
  CHECK_THROWS_AS(f_distance_spectrum(f7, 2, short_table, 1), Error);
  std::vector<std::uint32_t> bad_value(49, 9);
  CHECK_THROWS_AS(f_distance_spectrum(f7, 2, bad_value, 1), Error);
  std::vector<std::uint32_t> fine(49, 1);
  CHECK_THROWS_AS(f_distance_spectrum(f7, 2, fine, 7), Error);

  CHECK_THROWS_AS(value_table_from_expression(f7, 2, "poly"), Error);
  CHECK_THROWS_AS(value_table_from_expression(f7, 2, "constant:9"), Error);
  CHECK_THROWS_AS(value_table_from_expression(f7, 2, "constant:x"), Error);
}
