#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lienil/group.hpp"

namespace lienil {

/// Exact rational with a positive denominator, always in lowest terms.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::string str() const;

  friend Rational operator+(Rational const& a, Rational const& b);
  friend Rational operator*(Rational const& a, Rational const& b);
  friend bool operator==(Rational const&, Rational const&) = default;
  friend bool operator<(Rational const& a, Rational const& b) { return a.num_ * b.den_ < b.num_ * a.den_; }
  friend bool operator<=(Rational const& a, Rational const& b) { return !(b < a); }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Lie dimension subgroups D_(1) = G, D_(2) = G', ... down to the trivial group.
struct DimensionChain {
  std::vector<Subgroup> subgroups;  // subgroups[m-1] = D_(m); the last one is trivial
  std::vector<unsigned> d;          // d[0] = d_(2): p^d_(m) = |D_(m) : D_(m+1)|

  std::vector<std::size_t> orders() const;
};

/// D_(m) = product of gamma_i^(p^j) over (i-1) p^j >= m-1.
DimensionChain dimension_subgroup_chain(FiniteGroup const& g, std::vector<Subgroup> const& lcs);
DimensionChain dimension_subgroup_chain(FiniteGroup const& g);

/// 2 + (p-1) * sum_{m>=1} m d_(m+1), with d[0] = d_(2).
std::size_t upper_index_closed_form(std::span<const unsigned> d, unsigned p);

/// Nilpotency index of the augmentation ideal of an abelian p-group:
/// 1 + sum_i (p^m_i - 1).
std::size_t abelian_augmentation_index(AbelianInvariants const& inv, unsigned p);

/// Lower bound on t_L(KG) for G with abelian derived subgroup:
/// t(G') + r + 1 when p = 3, t(G') + r(p-1) + 1 otherwise, where
/// p^r = |gamma_3(G) G'^p / G'^p|.
struct DerivedAbelianBound {
  bool applicable = false;
  std::string reason;  // why not applicable
  AbelianInvariants derived_invariants;
  unsigned r = 0;
  std::size_t t_derived = 0;
  std::size_t bound = 0;

  bool holds_for(std::size_t lower_index) const { return !applicable || lower_index >= bound; }
};

DerivedAbelianBound derived_abelian_bound(FiniteGroup const& g, std::vector<Subgroup> const& lcs);

/// m_2 + (3/2) m_3 + 2 m_4 + 3 m_5 + ... + (c-2) m_c <= (n-3)/(p-1) for
/// nonabelian G, p >= 3 and KG^[n] = 0 with n >= 4.
struct RankProfileBound {
  bool applicable = false;
  std::string reason;
  RankProfile profile;
  std::size_t n = 0;
  Rational lhs;
  Rational rhs;
  bool holds = true;
};

/// Weight of m_i in the left side: 1, 3/2, then i - 2.
Rational rank_weight(unsigned i);
RankProfileBound rank_profile_bound(FiniteGroup const& g, std::vector<Subgroup> const& lcs, std::size_t n);

}  // namespace lienil
