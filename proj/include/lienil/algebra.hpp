#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lienil/field.hpp"
#include "lienil/group.hpp"
#include "lienil/subspace.hpp"

namespace lienil {

/// The group algebra GF(p)G in its regular basis: coordinate i is group element i.
class AlgebraContext {
 public:
  explicit AlgebraContext(std::shared_ptr<const FiniteGroup> group);

  FiniteGroup const& group() const { return *group_; }
  FieldSpec const& field() const { return field_; }
  std::size_t dim() const { return group_->order(); }

  /// out = v * g, i.e. out[h g] = v[h].
  void right_translate(std::span<const Coeff> v, Element g, std::span<Coeff> out) const;
  /// out = g * v, i.e. out[g h] = v[h].
  void left_translate(std::span<const Coeff> v, Element g, std::span<Coeff> out) const;
  /// out = g^-1 v g.
  void conjugate(std::span<const Coeff> v, Element g, std::span<Coeff> out) const;

  /// Representatives of the conjugacy classes not contained in the center.
  std::vector<Element> const& noncentral_class_reps() const { return noncentral_reps_; }

 private:
  std::shared_ptr<const FiniteGroup> group_;
  FieldSpec field_;
  std::vector<Element> noncentral_reps_;
};

/// An element of GF(p)G.
class AlgebraElement {
 public:
  explicit AlgebraElement(CoeffVector coeffs) : coeffs_(std::move(coeffs)) {}

  static AlgebraElement zero(AlgebraContext const& ctx);
  static AlgebraElement one(AlgebraContext const& ctx);
  static AlgebraElement group_element(AlgebraContext const& ctx, Element g);

  CoeffVector const& coeffs() const { return coeffs_; }
  std::span<const Coeff> view() const { return coeffs_.view(); }
  bool is_zero() const { return coeffs_.is_zero(); }

  friend bool operator==(AlgebraElement const&, AlgebraElement const&) = default;

 private:
  CoeffVector coeffs_;
};

AlgebraElement add(AlgebraContext const& ctx, AlgebraElement const& a, AlgebraElement const& b);
AlgebraElement subtract(AlgebraContext const& ctx, AlgebraElement const& a, AlgebraElement const& b);
AlgebraElement multiply(AlgebraContext const& ctx, AlgebraElement const& a, AlgebraElement const& b);
AlgebraElement multiply(AlgebraContext const& ctx, std::span<const Coeff> a, std::span<const Coeff> b);
AlgebraElement power(AlgebraContext const& ctx, AlgebraElement const& a, unsigned k);
/// Sum of coefficients.
Coeff augmentation(AlgebraContext const& ctx, AlgebraElement const& a);
/// [a, b] = ab - ba.
AlgebraElement lie_bracket(AlgebraContext const& ctx, AlgebraElement const& a, AlgebraElement const& b);

/// A unit of GF(p)G carrying its inverse; u * u^-1 = 1 is verified on construction.
class Unit {
 public:
  /// Inverts a via the nilpotency of the augmentation ideal; throws
  /// DomainError when the augmentation of a is zero.
  static Unit from(AlgebraContext const& ctx, AlgebraElement a);
  static Unit identity(AlgebraContext const& ctx);

  AlgebraElement const& value() const { return value_; }
  AlgebraElement const& inverse() const { return inverse_; }

 private:
  Unit(AlgebraElement v, AlgebraElement i) : value_(std::move(v)), inverse_(std::move(i)) {}
  friend Unit unit_commutator(AlgebraContext const&, Unit const&, Unit const&);
  AlgebraElement value_;
  AlgebraElement inverse_;
};

/// (x, y) = x^-1 y^-1 x y in U(KG).
Unit unit_commutator(AlgebraContext const& ctx, Unit const& x, Unit const& y);
/// Left-normed (u_1, ..., u_k).
Unit unit_commutator(AlgebraContext const& ctx, std::span<const Unit> us);
/// 1 + d with d uniform in the augmentation ideal.
Unit random_unit(AlgebraContext const& ctx, std::mt19937_64& rng);
/// Uniform random element of a subspace.
AlgebraElement random_element(AlgebraContext const& ctx, Subspace const& s, std::mt19937_64& rng);

/// A two-sided ideal together with a set that generates it as an ideal.
struct Ideal {
  Subspace space;
  std::vector<CoeffVector> generators;
};

/// One of the descending ideal chains of GF(p)G.
///
/// terms[n-1] is the n-th term: R^[n], R^(n) or Delta^n. The last term is the
/// first zero one, so stop_index() = terms.size() is the nilpotency index.
struct LieChain {
  enum class Kind { lower, upper, augmentation };
  Kind kind = Kind::lower;
  std::vector<Ideal> terms;

  std::size_t stop_index() const { return terms.size(); }
  /// The n-th term, or the zero ideal past the stop index.
  Subspace const& space(std::size_t n) const;
  Ideal const& term(std::size_t n) const;
  std::vector<std::size_t> dimensions() const;
};

std::string to_string(LieChain::Kind kind);

/// Smallest two-sided ideal containing s.
Subspace ideal_closure(AlgebraContext const& ctx, Subspace const& s);
/// Smallest two-sided ideal containing the seeds; generators are the seeds
/// that were not already in the ideal of the earlier ones.
Ideal close_ideal(AlgebraContext const& ctx, std::span<const CoeffVector> seeds);

/// Smallest right ideal containing the seeds.
Subspace close_right_ideal(AlgebraContext const& ctx, std::span<const CoeffVector> seeds);
/// {v (s - 1)} over basis vectors v of a and group generators s.
std::vector<CoeffVector> augmentation_multiples(AlgebraContext const& ctx, Subspace const& a);
/// A minimal set T with T KG = a, for a right ideal a.
std::vector<CoeffVector> right_ideal_generators(AlgebraContext const& ctx, Subspace const& a);

/// W_2 = span{[g, h]}, W_{n+1} = span{[w, g] : w in W_n, g in G}, up to W_cap
/// or the first zero space. Element 0 of the result is W_2.
std::vector<Subspace> lie_weight_spaces(AlgebraContext const& ctx, std::size_t cap);

struct LowerChain {
  LieChain chain;
  std::vector<Subspace> weights;  // weights[0] = W_2
  std::size_t index() const { return chain.stop_index(); }
};

LowerChain lower_lie_chain(AlgebraContext const& ctx);
LieChain upper_lie_chain(AlgebraContext const& ctx);
LieChain augmentation_chain(AlgebraContext const& ctx);

/// span{a b : a in basis(A), b in basis(B)}.
Subspace product_space(AlgebraContext const& ctx, Subspace const& a, Subspace const& b);
/// A B for two-sided ideals, via the ideal generators of B.
Ideal ideal_product(AlgebraContext const& ctx, Ideal const& a, Ideal const& b);

}  // namespace lienil
