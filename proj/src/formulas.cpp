#include "lienil/formulas.hpp"

#include <numeric>

#include "lienil/errors.hpp"

namespace lienil {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(Rational const& a, Rational const& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(Rational const& a, Rational const& b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }

std::vector<std::size_t> DimensionChain::orders() const {
  std::vector<std::size_t> out;
  for (auto const& s : subgroups) out.push_back(s.order());
  return out;
}

DimensionChain dimension_subgroup_chain(FiniteGroup const& g, std::vector<Subgroup> const& lcs) {
  DimensionChain out;
  out.subgroups.push_back(whole_group(g));
  if (g.order() == 1) return out;
  const std::uint64_t p = g.p();
  const std::uint64_t exp = g.exponent();
  // lcs = gamma_1 .. gamma_{c+1}; factors with i > c or p^j >= exp(G) are trivial.
  for (std::uint64_t m = 2;; ++m) {
    Subgroup d = trivial_subgroup(g);
    for (std::size_t i = 2; i <= lcs.size(); ++i) {
      if (lcs[i - 1].is_trivial()) break;
      std::uint64_t q = 1;
      while ((i - 1) * q < m - 1) q *= p;
      if (q >= exp && q > 1) continue;
      d = subgroup_product(g, d, power_subgroup(g, lcs[i - 1], q));
    }
    unsigned step = g.log_p(out.subgroups.back().order() / d.order());
    if (m > 2) out.d.push_back(step);
    bool done = d.is_trivial();
    out.subgroups.push_back(std::move(d));
    if (done) break;
  }
  return out;
}

DimensionChain dimension_subgroup_chain(FiniteGroup const& g) {
  return dimension_subgroup_chain(g, lower_central_series(g));
}

std::size_t upper_index_closed_form(std::span<const unsigned> d, unsigned p) {
  std::size_t sum = 0;
  for (std::size_t idx = 0; idx < d.size(); ++idx) sum += (idx + 1) * d[idx];
  return 2 + (p - 1) * sum;
}

std::size_t abelian_augmentation_index(AbelianInvariants const& inv, unsigned p) {
  std::size_t t = 1;
  for (unsigned m : inv.exponents) {
    std::size_t q = 1;
    for (unsigned k = 0; k < m; ++k) q *= p;
    t += q - 1;
  }
  return t;
}

DerivedAbelianBound derived_abelian_bound(FiniteGroup const& g, std::vector<Subgroup> const& lcs) {
  DerivedAbelianBound out;
  Subgroup const derived = lcs.size() >= 2 ? lcs[1] : trivial_subgroup(g);
  if (!is_abelian(g, derived)) {
    out.reason = "derived subgroup is nonabelian";
    return out;
  }
  out.applicable = true;
  Subgroup const gamma3 = lcs.size() >= 3 ? lcs[2] : trivial_subgroup(g);
  Subgroup const derived_p = power_subgroup(g, derived, g.p());
  Subgroup const top = subgroup_product(g, gamma3, derived_p);
  out.r = g.log_p(top.order() / derived_p.order());
  out.derived_invariants = abelian_invariants(g, derived);
  out.t_derived = abelian_augmentation_index(out.derived_invariants, g.p());
  out.bound = out.t_derived + 1 + (g.p() == 3 ? out.r : out.r * (g.p() - 1));
  return out;
}

Rational rank_weight(unsigned i) {
  if (i == 2) return Rational(1);
  if (i == 3) return Rational(3, 2);
  return Rational(std::int64_t(i) - 2);
}

RankProfileBound rank_profile_bound(FiniteGroup const& g, std::vector<Subgroup> const& lcs, std::size_t n) {
  RankProfileBound out;
  out.n = n;
  out.profile = rank_profile(g, lcs);
  if (g.p() < 3) {
    out.reason = "needs p >= 3";
    return out;
  }
  if (out.profile.ranks.empty()) {
    out.reason = "needs a nonabelian group";
    return out;
  }
  if (n < 4) {
    out.reason = "needs n >= 4";
    return out;
  }
  out.applicable = true;
  for (std::size_t k = 0; k < out.profile.ranks.size(); ++k)
    out.lhs = out.lhs + rank_weight(unsigned(k) + 2) * Rational(out.profile.ranks[k]);
  out.rhs = Rational(std::int64_t(n) - 3, std::int64_t(g.p()) - 1);
  out.holds = out.lhs <= out.rhs;
  return out;
}

}  // namespace lienil
