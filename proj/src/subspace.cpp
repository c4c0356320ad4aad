#include "lienil/subspace.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "lienil/errors.hpp"

namespace lienil {

namespace {

void require_length(std::size_t got, std::size_t want) {
  if (got != want)
    throw InputError("vector length " + std::to_string(got) + " does not match ambient dimension " +
                     std::to_string(want));
}

}  // namespace

Subspace::Subspace(FieldSpec field, std::size_t ambient_dim) : field_(field), ambient_(ambient_dim) {}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  s.pivots_.resize(ambient_dim);
  std::iota(s.pivots_.begin(), s.pivots_.end(), 0u);
  s.rows_.assign(ambient_dim * ambient_dim, 0);
  for (std::size_t i = 0; i < ambient_dim; ++i) s.rows_[i * ambient_dim + i] = 1;
  return s;
}

std::vector<CoeffVector> Subspace::basis() const {
  std::vector<CoeffVector> out;
  out.reserve(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) {
    auto r = row(i);
    out.emplace_back(std::vector<Coeff>(r.begin(), r.end()));
  }
  return out;
}

void Subspace::reduce(std::span<Coeff> v) const {
  require_length(v.size(), ambient_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    std::size_t c = pivots_[i];
    if (v[c] != 0) field_.axpy(v, field_.neg(v[c]), row(i), c);
  }
}

bool Subspace::contains(std::span<const Coeff> v) const {
  require_length(v.size(), ambient_);
  std::vector<Coeff> w(v.begin(), v.end());
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](Coeff c) { return c == 0; });
}

bool Subspace::contains(CoeffVector const& v) const { return contains(v.view()); }

SpanBuilder::SpanBuilder(FieldSpec field, std::size_t ambient_dim)
    : field_(field), ambient_(ambient_dim), scratch_(ambient_dim), scratch_bits_((ambient_dim + 63) / 64) {}

SpanBuilder::SpanBuilder(Subspace const& start) : SpanBuilder(start.field(), start.ambient_dim()) {
  pivots_ = start.pivots_;
  if (binary()) {
    std::vector<std::uint64_t> packed;
    for (std::size_t i = 0; i < start.dimension(); ++i) {
      pack(start.row(i), packed);
      bits_.insert(bits_.end(), packed.begin(), packed.end());
    }
  } else {
    bytes_ = start.rows_;
  }
}

void SpanBuilder::pack(std::span<const Coeff> v, std::vector<std::uint64_t>& out) const {
  out.assign(words(), 0);
  for (std::size_t k = 0; k < ambient_; ++k)
    if (v[k] & 1u) out[k >> 6] |= std::uint64_t(1) << (k & 63);
}

std::size_t SpanBuilder::reduce_bytes(std::span<Coeff> v) const {
  const std::size_t n = ambient_;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    std::size_t c = pivots_[i];
    if (v[c] != 0)
      field_.axpy(v, field_.neg(v[c]), std::span<const Coeff>(bytes_.data() + i * n, n), c);
  }
  for (std::size_t k = 0; k < n; ++k)
    if (v[k] != 0) return k;
  return n;
}

std::size_t SpanBuilder::reduce_bits(std::span<std::uint64_t> v) const {
  const std::size_t w = words();
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    std::size_t c = pivots_[i];
    if ((v[c >> 6] >> (c & 63)) & 1u) {
      const std::uint64_t* r = bits_.data() + i * w;
      for (std::size_t k = c >> 6; k < w; ++k) v[k] ^= r[k];
    }
  }
  for (std::size_t k = 0; k < w; ++k)
    if (v[k]) return k * 64 + std::size_t(std::countr_zero(v[k]));
  return ambient_;
}

bool SpanBuilder::contains(std::span<const Coeff> v) const {
  require_length(v.size(), ambient_);
  if (binary()) {
    pack(v, scratch_bits_);
    return reduce_bits(scratch_bits_) == ambient_;
  }
  std::copy(v.begin(), v.end(), scratch_.begin());
  return reduce_bytes(scratch_) == ambient_;
}

bool SpanBuilder::insert(std::span<const Coeff> v, std::vector<Coeff>* residue) {
  require_length(v.size(), ambient_);
  const std::size_t n = ambient_;
  if (binary()) {
    pack(v, scratch_bits_);
    std::size_t lead = reduce_bits(scratch_bits_);
    if (lead == n) return false;
    const std::size_t w = words();
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      std::uint64_t* r = bits_.data() + i * w;
      if ((r[lead >> 6] >> (lead & 63)) & 1u)
        for (std::size_t k = lead >> 6; k < w; ++k) r[k] ^= scratch_bits_[k];
    }
    bits_.insert(bits_.end(), scratch_bits_.begin(), scratch_bits_.end());
    pivots_.push_back(std::uint32_t(lead));
    if (residue) {
      residue->assign(n, 0);
      for (std::size_t k = 0; k < n; ++k) (*residue)[k] = Coeff((scratch_bits_[k >> 6] >> (k & 63)) & 1u);
    }
    return true;
  }

  std::copy(v.begin(), v.end(), scratch_.begin());
  std::size_t lead = reduce_bytes(scratch_);
  if (lead == n) return false;
  field_.scale(std::span<Coeff>(scratch_).subspan(lead), field_.inv(scratch_[lead]));
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    std::span<Coeff> r(bytes_.data() + i * n, n);
    if (r[lead] != 0) field_.axpy(r, field_.neg(r[lead]), scratch_, lead);
  }
  bytes_.insert(bytes_.end(), scratch_.begin(), scratch_.end());
  pivots_.push_back(std::uint32_t(lead));
  if (residue) residue->assign(scratch_.begin(), scratch_.end());
  return true;
}

Subspace SpanBuilder::finish() const {
  Subspace out(field_, ambient_);
  const std::size_t d = pivots_.size();
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  out.pivots_.reserve(d);
  out.rows_.assign(d * ambient_, 0);
  const std::size_t w = words();
  for (std::size_t slot = 0; slot < d; ++slot) {
    std::size_t i = order[slot];
    out.pivots_.push_back(pivots_[i]);
    Coeff* dst = out.rows_.data() + slot * ambient_;
    if (binary()) {
      const std::uint64_t* r = bits_.data() + i * w;
      for (std::size_t k = 0; k < ambient_; ++k) dst[k] = Coeff((r[k >> 6] >> (k & 63)) & 1u);
    } else {
      std::copy_n(bytes_.data() + i * ambient_, ambient_, dst);
    }
  }
  return out;
}

Subspace span(std::span<const CoeffVector> vectors, FieldSpec const& field, std::size_t ambient_dim) {
  SpanBuilder builder(field, ambient_dim);
  for (auto const& v : vectors) {
    for (Coeff c : v.view())
      if (c >= field.p()) throw InputError("coefficient " + std::to_string(c) + " not reduced mod p");
    builder.insert(v);
  }
  return builder.finish();
}

bool subspace_contains(Subspace const& s, CoeffVector const& v) { return s.contains(v); }

bool subspace_leq(Subspace const& a, Subspace const& b) {
  if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field()))
    throw InputError("subspaces live in different ambient spaces");
  if (a.dimension() > b.dimension()) return false;
  for (std::size_t i = 0; i < a.dimension(); ++i)
    if (!b.contains(a.row(i))) return false;
  return true;
}

Subspace subspace_sum(Subspace const& a, Subspace const& b) {
  if (a.ambient_dim() != b.ambient_dim() || !(a.field() == b.field()))
    throw InputError("subspaces live in different ambient spaces");
  SpanBuilder builder(a);
  for (std::size_t i = 0; i < b.dimension(); ++i) builder.insert(b.row(i));
  return builder.finish();
}

}  // namespace lienil
