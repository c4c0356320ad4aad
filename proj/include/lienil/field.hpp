#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace lienil {

using Coeff = std::uint8_t;

/// The prime field GF(p), 2 <= p <= 251.
///
/// Elements are residues stored in a byte. Construction rejects composite
/// moduli and anything that does not fit a byte.
class FieldSpec {
 public:
  explicit FieldSpec(unsigned p);

  unsigned p() const { return p_; }

  Coeff add(Coeff a, Coeff b) const {
    unsigned s = unsigned(a) + b;
    return Coeff(s >= p_ ? s - p_ : s);
  }
  Coeff sub(Coeff a, Coeff b) const { return Coeff(a >= b ? a - b : a + p_ - b); }
  Coeff neg(Coeff a) const { return Coeff(a == 0 ? 0 : p_ - a); }
  Coeff mul(Coeff a, Coeff b) const { return Coeff((unsigned(a) * b) % p_); }
  // Multiplicative inverse; a must be nonzero.
  Coeff inv(Coeff a) const { return inv_[a]; }
  Coeff reduce(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return Coeff(r < 0 ? r + p_ : r);
  }

  /// y[k] += a * x[k] for k in [from, size).
  void axpy(std::span<Coeff> y, Coeff a, std::span<const Coeff> x, std::size_t from = 0) const;
  /// y[k] *= a.
  void scale(std::span<Coeff> y, Coeff a) const;

  friend bool operator==(FieldSpec const& a, FieldSpec const& b) { return a.p_ == b.p_; }

 private:
  unsigned p_;
  std::uint32_t barrett_;  // ceil(2^16 / p)
  std::array<Coeff, 256> inv_{};
};

bool is_prime(unsigned long long n);

/// A fixed-length coordinate vector over GF(p).
class CoeffVector {
 public:
  CoeffVector() = default;
  explicit CoeffVector(std::size_t n) : entries_(n, 0) {}
  explicit CoeffVector(std::vector<Coeff> entries) : entries_(std::move(entries)) {}
  CoeffVector(std::initializer_list<Coeff> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  Coeff operator[](std::size_t i) const { return entries_[i]; }
  Coeff& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Coeff> view() const { return entries_; }
  std::span<Coeff> view() { return entries_; }
  std::vector<Coeff> const& entries() const { return entries_; }
  bool is_zero() const;

  friend bool operator==(CoeffVector const&, CoeffVector const&) = default;

 private:
  std::vector<Coeff> entries_;
};

}  // namespace lienil
