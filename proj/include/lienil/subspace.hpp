#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lienil/field.hpp"

namespace lienil {

/// A linear subspace of GF(p)^n held as its reduced row echelon basis.
///
/// The representation is canonical: two Subspace values span the same space
/// iff they compare equal. Rows are stored densely, sorted by pivot column.
class Subspace {
 public:
  Subspace(FieldSpec field, std::size_t ambient_dim);  // the zero subspace
  static Subspace full(FieldSpec field, std::size_t ambient_dim);

  FieldSpec const& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dimension() const { return pivots_.size(); }
  bool is_zero() const { return pivots_.empty(); }

  std::span<const std::uint32_t> pivots() const { return pivots_; }
  std::span<const Coeff> row(std::size_t i) const {
    return {rows_.data() + i * ambient_, ambient_};
  }
  std::vector<CoeffVector> basis() const;

  bool contains(CoeffVector const& v) const;
  bool contains(std::span<const Coeff> v) const;
  /// Reduces v against the basis in place; v is then zero iff it was in the span.
  void reduce(std::span<Coeff> v) const;

  friend bool operator==(Subspace const& a, Subspace const& b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ &&
           a.rows_ == b.rows_;
  }

 private:
  friend class SpanBuilder;
  FieldSpec field_;
  std::size_t ambient_;
  std::vector<std::uint32_t> pivots_;
  std::vector<Coeff> rows_;
};

/// Incremental RREF builder.
///
/// Vectors are inserted one at a time and reduced immediately, so a caller
/// running a closure loop learns in one pass whether a candidate was new.
/// Over GF(2) rows are bit-packed; otherwise one byte per entry.
class SpanBuilder {
 public:
  SpanBuilder(FieldSpec field, std::size_t ambient_dim);
  explicit SpanBuilder(Subspace const& start);

  FieldSpec const& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dimension() const { return pivots_.size(); }

  /// Inserts v. Returns true iff the span grew. When residue is non-null and
  /// the span grew, it receives the reduced, normalized new basis vector.
  bool insert(std::span<const Coeff> v, std::vector<Coeff>* residue = nullptr);
  bool insert(CoeffVector const& v, std::vector<Coeff>* residue = nullptr) {
    return insert(v.view(), residue);
  }
  bool contains(std::span<const Coeff> v) const;

  Subspace finish() const;

 private:
  bool binary() const { return field_.p() == 2; }
  std::size_t words() const { return (ambient_ + 63) / 64; }
  void pack(std::span<const Coeff> v, std::vector<std::uint64_t>& out) const;
  // Returns the first nonzero column after reduction, or ambient_ if zero.
  std::size_t reduce_bytes(std::span<Coeff> v) const;
  std::size_t reduce_bits(std::span<std::uint64_t> v) const;

  FieldSpec field_;
  std::size_t ambient_;
  std::vector<std::uint32_t> pivots_;  // insertion order
  std::vector<Coeff> bytes_;           // rows, p > 2
  std::vector<std::uint64_t> bits_;    // rows, p == 2
  mutable std::vector<Coeff> scratch_;
  mutable std::vector<std::uint64_t> scratch_bits_;
};

/// RREF basis of the span of the given vectors, each of length ambient_dim.
Subspace span(std::span<const CoeffVector> vectors, FieldSpec const& field, std::size_t ambient_dim);

bool subspace_contains(Subspace const& s, CoeffVector const& v);
bool subspace_leq(Subspace const& a, Subspace const& b);
Subspace subspace_sum(Subspace const& a, Subspace const& b);

}  // namespace lienil
