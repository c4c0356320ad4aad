#include <doctest.h>

#include <random>

#include "lienil/checks.hpp"
#include "lienil/errors.hpp"
#include "oracles.hpp"

using namespace lienil;

namespace {

struct Fixture {
  std::shared_ptr<const FiniteGroup> g;
  AlgebraContext ctx;
  LowerChain lower;
  LowerChainView view;
  explicit Fixture(std::string const& name)
      : g(oracle::catalog_group(name)), ctx(g), lower(lower_lie_chain(ctx)), view(ctx, lower) {}
};

bool same(CheckReport const& a, CheckReport const& b) {
  return a.name == b.name && a.status == b.status && a.instances == b.instances && a.violations == b.violations &&
         a.seed == b.seed && a.samples == b.samples;
}

}  // namespace

TEST_CASE("left multiples: generator shortcut equals the full basis test") {
  std::mt19937_64 rng(31);
  for (auto const& name : {"d8", "heisenberg27", "c3wrc3"}) {
    CAPTURE(name);
    Fixture f(name);
    Subspace whole = Subspace::full(f.ctx.field(), f.ctx.dim());
    for (int trial = 0; trial < 6; ++trial) {
      std::size_t k = 1 + rng() % f.view.stop();
      AlgebraElement x = random_element(f.ctx, f.view.space(k), rng);
      if (trial == 0) x = random_element(f.ctx, whole, rng);
      for (std::size_t m = 1; m <= f.view.stop(); ++m)
        for (std::size_t n = 1; n <= f.view.stop(); ++n) {
          bool brute = true;
          for (auto const& b : f.view.space(m).basis())
            brute = brute && f.view.space(n).contains(oracle::ring_mul(*f.g, x.coeffs(), b));
          CHECK(f.view.left_multiple_in(x, m, n) == brute);
        }
    }
  }
}

TEST_CASE("all checks pass on representative groups") {
  for (auto const& name : {"d4", "q8", "d8", "heisenberg27", "c3wrc3", "maxclass81b", "c9xc3", "heisenberg125"}) {
    CAPTURE(name);
    Fixture f(name);
    SampleOptions opt{16, 1};
    std::vector<CheckReport> reports{check_lie_power_products(f.view), check_unit_commutators(f.view, 0, opt),
                                     check_commutator_power_shift(f.view, 0, opt), check_cube_ideal_powers(f.view, 0),
                                     check_double_commutator_shift(f.view, opt)};
    if (f.g->p() != 2) reports.push_back(check_triple_commutator_square(f.view, opt));
    for (auto const& r : reports) {
      CAPTURE(r.name);
      CHECK(r.status == CheckStatus::passed);
      CHECK(r.violations.empty());
    }
  }
}

TEST_CASE("sampled checks are reproducible from the seed") {
  Fixture f("c3wrc3");
  for (std::uint64_t seed : {0ull, 7ull, 1ull << 40}) {
    SampleOptions opt{12, seed};
    CHECK(same(check_unit_commutators(f.view, 0, opt), check_unit_commutators(f.view, 0, opt)));
    CHECK(same(check_commutator_power_shift(f.view, 3, opt), check_commutator_power_shift(f.view, 3, opt)));
    CHECK(same(check_double_commutator_shift(f.view, opt), check_double_commutator_shift(f.view, opt)));
    CHECK(same(check_triple_commutator_square(f.view, opt), check_triple_commutator_square(f.view, opt)));
    CheckReport r = check_unit_commutators(f.view, 0, opt);
    CHECK(r.seed == seed);
    CHECK(r.samples == 12u);
    CHECK_FALSE(r.exact);
  }
}

TEST_CASE("instance counts follow the chain") {
  Fixture f("heisenberg27");
  REQUIRE(f.view.stop() == 4);
  // Pairs (m, n) with 3 <= m + n <= 6 and m, n in 1..4.
  CHECK(check_lie_power_products(f.view).instances == 12);
  CHECK(check_unit_commutators(f.view, 0, {5, 0}).instances == 5 * 3);
  CHECK(check_unit_commutators(f.view, 2, {5, 0}).instances == 5);
  CHECK(check_double_commutator_shift(f.view, {4, 0}).instances == 4 * 2);
}

TEST_CASE("characteristic 2 gating") {
  Fixture f("d4");
  CHECK_THROWS_AS(check_triple_commutator_square(f.view, {}), DomainError);
  CheckReport cubes = check_cube_ideal_powers(f.view, 0);
  CHECK(cubes.status == CheckStatus::passed);
  CHECK(to_string(CheckStatus::skipped) == "skipped");
}

TEST_CASE("report bookkeeping") {
  CheckReport r;
  r.finish();
  CHECK(r.status == CheckStatus::passed);
  r.violations.push_back("x");
  r.finish();
  CHECK(r.status == CheckStatus::failed);
  CheckReport s;
  s.status = CheckStatus::skipped;
  s.violations.push_back("ignored");
  s.finish();
  CHECK(s.status == CheckStatus::skipped);
}
