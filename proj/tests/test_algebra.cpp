#include <doctest.h>

#include <random>

#include "lienil/algebra.hpp"
#include "lienil/formulas.hpp"
#include "oracles.hpp"

using namespace lienil;

namespace {

std::vector<std::string> const kChainGroups = {"c4xc2", "d4", "q8", "d8", "q16", "m16", "heisenberg27",
                                               "extraspecial27e9", "c9", "c9xc3", "c3wrc3", "maxclass81b",
                                               "c9sdc9"};

std::vector<Subspace> spaces(LieChain const& c) {
  std::vector<Subspace> out;
  for (auto const& t : c.terms) out.push_back(t.space);
  return out;
}

}  // namespace

TEST_CASE("lower chain matches the ideal generated by n-fold brackets") {
  for (auto const& name : kChainGroups) {
    CAPTURE(name);
    auto g = oracle::catalog_group(name);
    AlgebraContext ctx(g);
    LowerChain lower = lower_lie_chain(ctx);
    CHECK(spaces(lower.chain) == oracle::lower_chain(*g));
    for (auto const& t : lower.chain.terms) CHECK(close_ideal(ctx, t.generators).space == t.space);
  }
}

TEST_CASE("upper chain matches iterated bracket ideals") {
  for (auto const& name : kChainGroups) {
    CAPTURE(name);
    auto g = oracle::catalog_group(name);
    AlgebraContext ctx(g);
    CHECK(spaces(upper_lie_chain(ctx)) == oracle::upper_chain(*g));
  }
}

TEST_CASE("augmentation chain matches powers of the augmentation ideal") {
  for (auto const& name : kChainGroups) {
    CAPTURE(name);
    auto g = oracle::catalog_group(name);
    AlgebraContext ctx(g);
    CHECK(spaces(augmentation_chain(ctx)) == oracle::augmentation_powers(*g));
  }
}

TEST_CASE("weight spaces are spans of left-normed group brackets") {
  for (auto const& name : {"d8", "heisenberg27", "c3wrc3", "maxclass81c"}) {
    CAPTURE(name);
    auto g = oracle::catalog_group(name);
    AlgebraContext ctx(g);
    auto w = lie_weight_spaces(ctx, 16);
    std::vector<CoeffVector> level;
    for (Element x = 0; x < g->order(); ++x) level.push_back(oracle::basis_vector(*g, x));
    for (std::size_t n = 2; n < w.size() + 2; ++n) {
      std::vector<CoeffVector> next;
      for (auto const& b : level)
        for (Element x = 0; x < g->order(); ++x) next.push_back(oracle::bracket(*g, b, oracle::basis_vector(*g, x)));
      level = oracle::span_of(*g, next).basis();
      CHECK(w[n - 2] == oracle::span_of(*g, level));
    }
    CHECK(w.back().is_zero());
  }
}

TEST_CASE("ideal products: generator route equals the full product span") {
  for (auto const& name : {"d8", "heisenberg27", "c3wrc3"}) {
    CAPTURE(name);
    auto g = oracle::catalog_group(name);
    AlgebraContext ctx(g);
    LowerChain lower = lower_lie_chain(ctx);
    for (std::size_t m = 1; m <= lower.index(); ++m)
      for (std::size_t n = 1; n <= lower.index(); ++n) {
        Ideal const& a = lower.chain.term(m);
        Ideal const& b = lower.chain.term(n);
        Subspace full = product_space(ctx, a.space, b.space);
        CHECK(ideal_product(ctx, a, b).space == full);
        std::vector<CoeffVector> prods;
        for (auto const& x : a.space.basis())
          for (auto const& y : b.space.basis()) prods.push_back(oracle::ring_mul(*g, x, y));
        CHECK(full == oracle::span_of(*g, prods));
      }
  }
}

TEST_CASE("right ideal generators regenerate the ideal") {
  for (auto const& name : {"d4", "d8", "heisenberg27", "c3wrc3", "maxclass81b", "c9xc3"}) {
    CAPTURE(name);
    auto g = oracle::catalog_group(name);
    AlgebraContext ctx(g);
    LowerChain lower = lower_lie_chain(ctx);
    LieChain aug = augmentation_chain(ctx);
    std::vector<Subspace> targets = spaces(lower.chain);
    for (auto const& s : spaces(aug)) targets.push_back(s);
    for (auto const& a : targets) {
      auto gens = right_ideal_generators(ctx, a);
      CHECK(close_right_ideal(ctx, gens) == a);
      CHECK(oracle::right_ideal_closure(*g, gens) == a);
      CHECK(gens.size() <= a.dimension());
      // Minimal: dropping any generator loses the ideal.
      for (std::size_t i = 0; i < gens.size(); ++i) {
        auto fewer = gens;
        fewer.erase(fewer.begin() + std::ptrdiff_t(i));
        CHECK(close_right_ideal(ctx, fewer) != a);
      }
    }
  }
}

TEST_CASE("closures agree with the test-side closure on random seeds") {
  std::mt19937_64 rng(17);
  for (auto const& name : {"q8", "heisenberg27", "c9sdc9"}) {
    CAPTURE(name);
    auto g = oracle::catalog_group(name);
    AlgebraContext ctx(g);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<CoeffVector> seeds;
      for (int k = 0; k < 2; ++k) {
        CoeffVector v(g->order());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = Coeff(rng() % 4 == 0 ? rng() % g->p() : 0);
        seeds.push_back(v);
      }
      CHECK(close_ideal(ctx, seeds).space == oracle::ideal_closure(*g, seeds));
      CHECK(ideal_closure(ctx, oracle::span_of(*g, seeds)) == oracle::ideal_closure(*g, seeds));
      CHECK(close_right_ideal(ctx, seeds) == oracle::right_ideal_closure(*g, seeds));
      CHECK(span(augmentation_multiples(ctx, oracle::span_of(*g, seeds)), FieldSpec(g->p()), g->order()) ==
            [&] {
              std::vector<CoeffVector> out;
              for (auto const& b : oracle::span_of(*g, seeds).basis())
                for (Element s : g->generators())
                  out.push_back(oracle::ring_mul(
                      *g, b, oracle::ring_sub(*g, oracle::basis_vector(*g, s), oracle::basis_vector(*g, 0))));
              return oracle::span_of(*g, out);
            }());
    }
  }
}

TEST_CASE("ring operations, brackets and units") {
  std::mt19937_64 rng(23);
  auto g = oracle::catalog_group("c3wrc3");
  AlgebraContext ctx(g);
  Subspace whole = Subspace::full(ctx.field(), ctx.dim());
  for (int trial = 0; trial < 10; ++trial) {
    AlgebraElement a = random_element(ctx, whole, rng);
    AlgebraElement b = random_element(ctx, whole, rng);
    CHECK(multiply(ctx, a, b).coeffs() == oracle::ring_mul(*g, a.coeffs(), b.coeffs()));
    CHECK(lie_bracket(ctx, a, b).coeffs() == oracle::bracket(*g, a.coeffs(), b.coeffs()));
    CHECK(power(ctx, a, 3) == multiply(ctx, a, multiply(ctx, a, a)));
    Unit u = random_unit(ctx, rng);
    CHECK(multiply(ctx, u.value(), u.inverse()) == AlgebraElement::one(ctx));
    CHECK(augmentation(ctx, u.value()) == 1);
  }
  for (Element x = 0; x < g->order(); x += 5)
    for (Element y = 0; y < g->order(); y += 11) {
      Unit ux = Unit::from(ctx, AlgebraElement::group_element(ctx, x));
      Unit uy = Unit::from(ctx, AlgebraElement::group_element(ctx, y));
      CHECK(unit_commutator(ctx, ux, uy).value() ==
            AlgebraElement::group_element(ctx, group_commutator(*g, x, y)));
    }
}

TEST_CASE("augmentation index of abelian groups") {
  for (auto const& [name, t] : std::vector<std::pair<std::string, std::size_t>>{
           {"c2", 2}, {"c3", 3}, {"c5", 5}, {"c9", 9}, {"c27", 27}, {"c9xc3", 11}, {"c4xc2", 5}, {"c3xc3xc3xc3", 9}}) {
    CAPTURE(name);
    auto g = oracle::catalog_group(name);
    AlgebraContext ctx(g);
    std::size_t brute = augmentation_chain(ctx).stop_index();
    CHECK(brute == t);
    CHECK(abelian_augmentation_index(abelian_invariants(*g, whole_group(*g)), g->p()) == t);
    CHECK(oracle::augmentation_powers(*g).size() == t);
  }
}

TEST_CASE("commutative algebras have Lie indices 2") {
  for (auto const& name : {"c2", "c4xc2", "c9xc3", "c25"}) {
    auto g = oracle::catalog_group(name);
    AlgebraContext ctx(g);
    CHECK(lower_lie_chain(ctx).index() == 2);
    CHECK(upper_lie_chain(ctx).stop_index() == 2);
  }
}
