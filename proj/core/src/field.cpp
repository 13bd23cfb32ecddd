#include "eucgraph/field.hpp"

#include <cmath>
#include <numbers>

namespace eucgraph {
namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

// Polynomials over F_p: coefficient vectors, constant term first, trailing
// zeros allowed. Degree is the last nonzero position.

int degree(const std::vector<std::uint32_t>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of f by monic m, in place.
void reduce(std::vector<std::uint32_t>& f, const std::vector<std::uint32_t>& m,
            std::uint32_t p) {
  int dm = degree(m);
  for (int i = static_cast<int>(f.size()) - 1; i >= dm; --i) {
    std::uint32_t c = f[i];
    if (c == 0) continue;
    for (int k = 0; k <= dm; ++k) {
      std::uint32_t& t = f[i - dm + k];
      t = (t + p - c * m[k] % p) % p;
    }
  }
}

bool divides(const std::vector<std::uint32_t>& g, std::vector<std::uint32_t> f,
             std::uint32_t p) {
  reduce(f, g, p);
  return degree(f) < 0;
}

// Any factorization of a degree-d polynomial has a monic factor of degree
// <= d/2; trying them all is exact and instant at the sizes allowed here.
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  int d = degree(f);
  if (d <= 0) return false;
  if (d == 1) return true;
  for (int k = 1; k <= d / 2; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      std::vector<std::uint32_t> g(k + 1, 0);
      std::uint64_t t = v;
      for (int i = 0; i < k; ++i) { g[i] = t % p; t /= p; }
      g[k] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> poly_mul_mod(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b,
                                        const std::vector<std::uint32_t>& m,
                                        std::uint32_t p) {
  std::vector<std::uint32_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  reduce(c, m, p);
  c.resize(m.size() - 1, 0);
  return c;
}

}  // namespace

Field make_field(std::uint32_t p, std::uint32_t r,
                 std::optional<std::vector<std::uint32_t>> modulus) {
  if (p % 2 == 0) raise(errc::even_characteristic, "characteristic must be odd");
  if (!is_prime(p)) raise(errc::not_prime, "p must be prime");
  if (r < 1) raise(errc::config_error, "extension degree must be >= 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > Field::kMaxQ)
      raise(errc::too_large, "q exceeds table-arithmetic limit " + std::to_string(Field::kMaxQ));
  }

  Field f;
  f.p_ = p;
  f.r_ = r;
  f.q_ = static_cast<std::uint32_t>(q);

  if (r == 1) {
    if (modulus && degree(*modulus) != 1)
      raise(errc::config_error, "modulus given for a prime field must have degree 1");
  } else if (modulus) {
    if (modulus->size() != r + 1)
      raise(errc::config_error, "modulus needs exactly r+1 coefficients, constant first");
    for (std::uint32_t c : *modulus)
      if (c >= p) raise(errc::config_error, "modulus coefficients must lie in [0, p)");
    if ((*modulus)[r] != 1)
      raise(errc::config_error, "modulus must be monic");
    if (!is_irreducible(*modulus, p))
      raise(errc::reducible_modulus, "modulus factors over F_p");
    f.modulus_ = *modulus;
  } else {
    // Smallest monic irreducible of degree r, ordering the candidates by the
    // base-p integer their low coefficients spell (constant digit least
    // significant). Deterministic, so (p, r) names one field.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < r; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      std::vector<std::uint32_t> cand(r + 1, 0);
      std::uint64_t t = v;
      for (std::uint32_t i = 0; i < r; ++i) { cand[i] = t % p; t /= p; }
      cand[r] = 1;
      if (is_irreducible(cand, p)) { f.modulus_ = cand; break; }
    }
    if (f.modulus_.empty()) raise(errc::internal_error, "no irreducible found");
  }

  const std::uint32_t qq = f.q_;
  auto digits = [&](std::uint32_t idx) {
    std::vector<std::uint32_t> c(r, 0);
    for (std::uint32_t i = 0; i < r; ++i) { c[i] = idx % p; idx /= p; }
    return c;
  };
  auto encode = [&](const std::vector<std::uint32_t>& c) {
    std::uint32_t idx = 0, w = 1;
    for (std::uint32_t i = 0; i < r; ++i) { idx += c[i] * w; w *= p; }
    return idx;
  };

  f.add_.resize(std::size_t(qq) * qq);
  f.sub_.resize(std::size_t(qq) * qq);
  f.mul_.resize(std::size_t(qq) * qq);
  f.neg_.resize(qq);
  f.inv_.assign(qq, 0);
  f.trace_.resize(qq);
  f.square_.assign(qq, false);
  f.chi_.resize(qq);

  std::vector<std::vector<std::uint32_t>> coef(qq);
  for (std::uint32_t a = 0; a < qq; ++a) coef[a] = digits(a);

  for (std::uint32_t a = 0; a < qq; ++a) {
    std::vector<std::uint32_t> n(r);
    for (std::uint32_t i = 0; i < r; ++i) n[i] = (p - coef[a][i]) % p;
    f.neg_[a] = encode(n);
    for (std::uint32_t b = 0; b < qq; ++b) {
      std::vector<std::uint32_t> s(r), d(r);
      for (std::uint32_t i = 0; i < r; ++i) {
        s[i] = (coef[a][i] + coef[b][i]) % p;
        d[i] = (coef[a][i] + p - coef[b][i]) % p;
      }
      f.add_[std::size_t(a) * qq + b] = encode(s);
      f.sub_[std::size_t(a) * qq + b] = encode(d);
    }
  }

  if (r == 1) {
    for (std::uint32_t a = 0; a < qq; ++a)
      for (std::uint32_t b = 0; b < qq; ++b)
        f.mul_[std::size_t(a) * qq + b] = (a * b) % p;
  } else {
    for (std::uint32_t a = 0; a < qq; ++a)
      for (std::uint32_t b = a; b < qq; ++b) {
        std::uint32_t v = encode(poly_mul_mod(coef[a], coef[b], f.modulus_, p));
        f.mul_[std::size_t(a) * qq + b] = v;
        f.mul_[std::size_t(b) * qq + a] = v;
      }
  }

  for (std::uint32_t a = 1; a < qq; ++a) {
    if (f.inv_[a] != 0) continue;
    for (std::uint32_t b = 1; b < qq; ++b) {
      if (f.mul_[std::size_t(a) * qq + b] == 1) {
        f.inv_[a] = b;
        f.inv_[b] = a;
        break;
      }
    }
    if (f.inv_[a] == 0) raise(errc::internal_error, "no inverse; modulus not irreducible?");
  }

  for (std::uint32_t a = 0; a < qq; ++a)
    f.square_[f.mul_[std::size_t(a) * qq + a]] = true;

  // trace(a) = a + a^p + ... + a^{p^{r-1}}, always landing in F_p, i.e. an
  // index < p under the canonical encoding.
  for (std::uint32_t a = 0; a < qq; ++a) {
    std::uint32_t acc = a, t = a;
    for (std::uint32_t i = 1; i < r; ++i) {
      std::uint32_t tp = 1;
      for (std::uint32_t e = 0; e < p; ++e) tp = f.mul_[std::size_t(tp) * qq + t];
      t = tp;
      acc = f.add_[std::size_t(acc) * qq + t];
    }
    if (acc >= p) raise(errc::internal_error, "trace left the prime field");
    f.trace_[a] = acc;
  }

  for (std::uint32_t a = 0; a < qq; ++a) {
    double ang = 2.0 * std::numbers::pi * double(f.trace_[a]) / double(p);
    f.chi_[a] = std::complex<double>(std::cos(ang), std::sin(ang));
  }

  return f;
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  at(a);
  std::uint32_t acc = 1, base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::vector<std::uint32_t> Field::coeffs_of(std::uint32_t index) const {
  at(index);
  std::vector<std::uint32_t> c(r_, 0);
  for (std::uint32_t i = 0; i < r_; ++i) { c[i] = index % p_; index /= p_; }
  return c;
}

std::uint32_t Field::index_of(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != r_) raise(errc::dimension_mismatch, "coefficient vector has wrong length");
  std::uint32_t idx = 0, w = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    if (coeffs[i] >= p_) raise(errc::index_out_of_range, "coefficient not reduced mod p");
    idx += coeffs[i] * w;
    w *= p_;
  }
  return idx;
}

std::uint32_t Field::smallest_nonresidue() const {
  for (std::uint32_t a = 1; a < q_; ++a)
    if (!square_[a]) return a;
  raise(errc::internal_error, "every element is a square");
}

}  // namespace eucgraph
