#include <doctest.h>

#include "lienil/algebra.hpp"
#include "lienil/catalog.hpp"
#include "lienil/formulas.hpp"
#include "oracles.hpp"

using namespace lienil;

namespace {

std::set<Element> as_set(Subgroup const& s) { return {s.elements().begin(), s.elements().end()}; }

// D_(m) from its product definition, with every factor built test-side.
std::set<Element> dimension_subgroup(FiniteGroup const& g, std::size_t m) {
  auto gammas = oracle::lower_central(g);
  std::vector<Element> seeds;
  for (std::size_t i = 1; i <= gammas.size(); ++i)
    for (std::size_t q = 1; q <= g.order(); q *= g.p())
      if ((i - 1) * q >= m - 1)
        for (Element x : gammas[i - 1]) seeds.push_back(g.power(x, q));
  return oracle::closure(g, seeds);
}

}  // namespace

TEST_CASE("rational arithmetic is exact and normalized") {
  Rational a(3, 6), b(-2, 4);
  CHECK(a == Rational(1, 2));
  CHECK(a.str() == "1/2");
  CHECK((a + b).str() == "0");
  CHECK((a * Rational(4)).str() == "2");
  CHECK(Rational(1, -3).str() == "-1/3");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(11, 2) <= Rational(11, 2));
}

TEST_CASE("closed-form upper index on given profiles") {
  std::vector<unsigned> d;
  CHECK(upper_index_closed_form(d, 3) == 2);
  d = {1};
  CHECK(upper_index_closed_form(d, 2) == 3);
  CHECK(upper_index_closed_form(d, 3) == 4);
  CHECK(upper_index_closed_form(d, 5) == 6);
  d = {3, 1};
  CHECK(upper_index_closed_form(d, 3) == 12);
  d = {4, 1};
  CHECK(upper_index_closed_form(d, 3) == 14);
  d = {1, 1, 1};
  CHECK(upper_index_closed_form(d, 3) == 14);
  d = {2, 0, 1};
  CHECK(upper_index_closed_form(d, 3) == 12);
}

TEST_CASE("dimension subgroups: product definition and unit section of the upper chain") {
  for (auto const& e : builtin_catalog()) {
    if (e.order() > 81) continue;
    CAPTURE(e.name);
    auto g = oracle::catalog_group(e.name);
    DimensionChain dc = dimension_subgroup_chain(*g);
    AlgebraContext ctx(g);
    LieChain upper = upper_lie_chain(ctx);
    for (std::size_t m = 1; m <= dc.subgroups.size(); ++m) {
      CHECK(as_set(dc.subgroups[m - 1]) == dimension_subgroup(*g, m));
      CHECK(as_set(dc.subgroups[m - 1]) == oracle::unit_section(*g, upper.space(m)));
    }
    CHECK(dc.subgroups.back().is_trivial());
    unsigned sum = 0;
    for (unsigned x : dc.d) sum += x;
    auto lcs = lower_central_series(*g);
    CHECK(sum == g->log_p(lcs.size() > 1 ? lcs[1].order() : 1));
    CHECK(upper.stop_index() == upper_index_closed_form(dc.d, g->p()));
  }
}

TEST_CASE("rank profile bound: weights and right side") {
  CHECK(rank_weight(2) == Rational(1));
  CHECK(rank_weight(3) == Rational(3, 2));
  CHECK(rank_weight(4) == Rational(2));
  CHECK(rank_weight(7) == Rational(5));

  auto g = oracle::catalog_group("c3wrc3");
  auto lcs = lower_central_series(*g);
  RankProfileBound b13 = rank_profile_bound(*g, lcs, 13);
  REQUIRE(b13.applicable);
  CHECK(b13.rhs == Rational(5));
  CHECK(b13.lhs == Rational(5, 2));
  CHECK(b13.holds);
  CHECK(rank_profile_bound(*g, lcs, 14).rhs == Rational(11, 2));
  CHECK_FALSE(rank_profile_bound(*g, lcs, 7).holds);

  auto d4 = oracle::catalog_group("d4");
  CHECK_FALSE(rank_profile_bound(*d4, lower_central_series(*d4), 3).applicable);
  auto c9 = oracle::catalog_group("c9");
  CHECK_FALSE(rank_profile_bound(*c9, lower_central_series(*c9), 2).applicable);
}

TEST_CASE("derived-abelian bound parameters") {
  auto w = oracle::catalog_group("c3wrc3");
  DerivedAbelianBound b = derived_abelian_bound(*w, lower_central_series(*w));
  REQUIRE(b.applicable);
  CHECK(b.derived_invariants == AbelianInvariants{{1, 1}});
  CHECK(b.t_derived == 5);
  // gamma_3 has order 3 and G'^3 is trivial.
  CHECK(b.r == 1);
  CHECK(b.bound == 7);
  CHECK(b.holds_for(8));
  CHECK_FALSE(b.holds_for(6));

  auto d8 = oracle::catalog_group("d8");
  DerivedAbelianBound b2 = derived_abelian_bound(*d8, lower_central_series(*d8));
  REQUIRE(b2.applicable);
  CHECK(b2.t_derived == 4);
  CHECK(b2.r == 0);
  CHECK(b2.bound == 5);

  auto m = oracle::catalog_group("maxclass243a");
  auto lcs = lower_central_series(*m);
  DerivedAbelianBound b3 = derived_abelian_bound(*m, lcs);
  CHECK(b3.applicable == is_abelian(*m, lcs[1]));
}
