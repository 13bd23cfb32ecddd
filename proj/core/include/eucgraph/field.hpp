#ifndef EUCGRAPH_FIELD_HPP
#define EUCGRAPH_FIELD_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "eucgraph/errors.hpp"

namespace eucgraph {

class FieldElement;

// F_q, q = p^r with p an odd prime, as a quotient F_p[x]/(modulus).
// Elements are canonical indices 0..q-1: the element with coefficient
// vector (c_0,...,c_{r-1}) has index sum c_i p^i, so index order is the
// canonical element order and index 0/1 are the additive/multiplicative
// identities. All arithmetic is table lookups built once at construction;
// everything stays in exact integer land except character(), which is the
// only place a floating-point value is produced.
class Field {
 public:
  // q*q tables of 4-byte entries; 1024 keeps the largest field ~12 MB.
  static constexpr std::uint32_t kMaxQ = 1024;

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t r() const noexcept { return r_; }
  std::uint32_t q() const noexcept { return q_; }

  // Monic modulus, constant coefficient first, r+1 entries. Empty when r = 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[at(a) * q_ + at(b)]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return sub_[at(a) * q_ + at(b)]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[at(a) * q_ + at(b)]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[at(a)]; }

  std::uint32_t inv(std::uint32_t a) const {
    if (at(a) == 0) raise(errc::division_by_zero, "inverse of zero");
    return inv_[a];
  }

  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  // Absolute trace down to F_p, returned as an integer in [0, p).
  std::uint32_t trace(std::uint32_t a) const { return trace_[at(a)]; }

  // Additive character chi(a) = exp(2 pi i trace(a) / p). chi(a+b) equals
  // chi(a)chi(b) and the values sum to zero over the whole field.
  std::complex<double> character(std::uint32_t a) const { return chi_[at(a)]; }

  // Coefficients (c_0,...,c_{r-1}) of the element with this index.
  std::vector<std::uint32_t> coeffs_of(std::uint32_t index) const;
  std::uint32_t index_of(std::span<const std::uint32_t> coeffs) const;

  bool is_square(std::uint32_t a) const { return square_[at(a)]; }
  // Smallest canonical index that is not a square in F_q^*.
  std::uint32_t smallest_nonresidue() const;

  FieldElement element(std::uint32_t index) const;
  FieldElement zero() const;
  FieldElement one() const;

  // Same (p, r, modulus); element indices are interchangeable between
  // structurally equal fields.
  bool same_structure(const Field& other) const noexcept {
    return p_ == other.p_ && r_ == other.r_ && modulus_ == other.modulus_;
  }

 private:
  friend Field make_field(std::uint32_t, std::uint32_t,
                          std::optional<std::vector<std::uint32_t>>);
  Field() = default;

  std::uint32_t at(std::uint32_t a) const {
    if (a >= q_) raise(errc::index_out_of_range, "element index out of range");
    return a;
  }

  std::uint32_t p_ = 0, r_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_, sub_, mul_;
  std::vector<std::uint32_t> neg_, inv_, trace_;
  std::vector<bool> square_;
  std::vector<std::complex<double>> chi_;
};

// Builds F_{p^r}. Validates p odd prime, r >= 1, q <= Field::kMaxQ. When no
// modulus is given and r >= 2, picks the monic irreducible of degree r whose
// coefficient vector (constant first) encodes the smallest base-p integer;
// the choice is deterministic, so (p, r) alone names the field. A supplied
// modulus must be monic of degree r with coefficients already in [0, p);
// reducible ones are rejected, never repaired.
Field make_field(std::uint32_t p, std::uint32_t r,
                 std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

// Value handle pairing an index with its field, for call sites where mixing
// two fields by accident matters more than the extra pointer. The kernel
// index API above stays the fast path.
class FieldElement {
 public:
  FieldElement(const Field& field, std::uint32_t index)
      : field_(&field), index_(index) {
    if (index >= field.q()) raise(errc::index_out_of_range, "element index out of range");
  }

  std::uint32_t index() const noexcept { return index_; }
  const Field& field() const noexcept { return *field_; }
  bool is_zero() const noexcept { return index_ == 0; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs_of(index_); }

  FieldElement operator+(const FieldElement& o) const { return make(field_->add(index_, check(o))); }
  FieldElement operator-(const FieldElement& o) const { return make(field_->sub(index_, check(o))); }
  FieldElement operator*(const FieldElement& o) const { return make(field_->mul(index_, check(o))); }
  FieldElement operator/(const FieldElement& o) const { return make(field_->div(index_, check(o))); }
  FieldElement operator-() const { return make(field_->neg(index_)); }
  FieldElement inv() const { return make(field_->inv(index_)); }

  std::uint32_t trace() const { return field_->trace(index_); }
  std::complex<double> character() const { return field_->character(index_); }

  bool operator==(const FieldElement& o) const {
    return index_ == o.index_ && field_->same_structure(*o.field_);
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  FieldElement make(std::uint32_t idx) const { return FieldElement(*field_, idx); }

  std::uint32_t check(const FieldElement& o) const {
    if (field_ != o.field_ && !field_->same_structure(*o.field_))
      raise(errc::field_mismatch, "elements of different fields");
    return o.index_;
  }

  const Field* field_;
  std::uint32_t index_;
};

inline FieldElement Field::element(std::uint32_t index) const { return FieldElement(*this, index); }
inline FieldElement Field::zero() const { return FieldElement(*this, 0); }
inline FieldElement Field::one() const { return FieldElement(*this, 1); }

}  // namespace eucgraph

#endif
