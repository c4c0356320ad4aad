#include "lienil/checks.hpp"

#include <random>

#include "lienil/errors.hpp"

namespace lienil {

namespace {

std::mt19937_64 make_rng(std::uint64_t seed, std::uint32_t salt) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), salt};
  return std::mt19937_64(seq);
}

AlgebraElement minus_one(AlgebraContext const& ctx, Unit const& u) {
  return subtract(ctx, u.value(), AlgebraElement::one(ctx));
}

std::string label(std::size_t n) { return "R^[" + std::to_string(n) + "]"; }

CheckReport make_report(std::string name, std::string statement) {
  CheckReport r;
  r.name = std::move(name);
  r.statement = std::move(statement);
  return r;
}

void start_sampled(CheckReport& r, SampleOptions opt) {
  r.exact = false;
  r.seed = opt.seed;
  r.samples = opt.samples;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed:
      return "passed";
    case CheckStatus::failed:
      return "failed";
    case CheckStatus::skipped:
      return "skipped";
  }
  return "?";
}

LowerChainView::LowerChainView(AlgebraContext const& ctx, LowerChain const& lower) : ctx_(&ctx), lower_(&lower) {
  for (std::size_t n = 1; n <= lower.index(); ++n) right_gens_.push_back(right_ideal_generators(ctx, space(n)));
}

std::vector<CoeffVector> const& LowerChainView::right_generators(std::size_t n) const {
  if (n == 0) throw InputError("chain terms are indexed from 1");
  return right_gens_[std::min(n, right_gens_.size()) - 1];
}

bool LowerChainView::left_multiple_in(AlgebraElement const& x, std::size_t m, std::size_t n) const {
  Subspace const& target = space(n);
  for (auto const& t : right_generators(m))
    if (!target.contains(multiply(*ctx_, x.view(), t.view()).view())) return false;
  return true;
}

CheckReport check_lie_power_products(LowerChainView const& view) {
  CheckReport r = make_report("lie_power_products", "R^[m] R^[n] is contained in R^[m+n-2]");
  const std::size_t stop = view.stop();
  for (std::size_t m = 1; m <= stop; ++m)
    for (std::size_t n = 1; n <= stop && m + n <= stop + 2; ++n) {
      if (m + n < 3) continue;
      ++r.instances;
      Subspace const& target = view.space(m + n - 2);
      bool ok = true;
      // R^[m] R^[n] = T_m KG T_n KG = T_m T_n KG.
      for (auto const& a : view.right_generators(m)) {
        for (auto const& b : view.right_generators(n))
          if (!target.contains(multiply(view.ctx(), a.view(), b.view()).view())) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (!ok) r.violations.push_back(label(m) + " " + label(n) + " not in " + label(m + n - 2));
    }
  r.finish();
  return r;
}

CheckReport check_unit_commutators(LowerChainView const& view, std::size_t m_max, SampleOptions opt) {
  CheckReport r = make_report("unit_commutators", "(u_1, ..., u_m) - 1 lies in R^[m]");
  start_sampled(r, opt);
  AlgebraContext const& ctx = view.ctx();
  if (m_max == 0) m_max = view.stop();
  auto rng = make_rng(opt.seed, 1);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    Unit c = random_unit(ctx, rng);
    for (std::size_t m = 2; m <= m_max; ++m) {
      c = unit_commutator(ctx, c, random_unit(ctx, rng));
      ++r.instances;
      if (!view.space(m).contains(minus_one(ctx, c).view()))
        r.violations.push_back("sample " + std::to_string(s) + ": weight " + std::to_string(m) +
                               " commutator minus 1 not in " + label(m));
    }
  }
  r.finish();
  return r;
}

CheckReport check_commutator_power_shift(LowerChainView const& view, std::size_t m_max, SampleOptions opt) {
  CheckReport r = make_report("commutator_power_shift", "((x, y) - 1)^k R^[m] is contained in R^[m+k]");
  start_sampled(r, opt);
  AlgebraContext const& ctx = view.ctx();
  const std::size_t stop = view.stop();
  if (m_max == 0) m_max = stop;
  auto rng = make_rng(opt.seed, 2);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    Unit x = random_unit(ctx, rng);
    Unit y = random_unit(ctx, rng);
    AlgebraElement c = minus_one(ctx, unit_commutator(ctx, x, y));
    AlgebraElement ck = c;
    for (std::size_t k = 1; k < stop; ++k) {
      for (std::size_t m = 1; m <= m_max && m + k <= stop; ++m) {
        ++r.instances;
        if (!view.left_multiple_in(ck, m, m + k))
          r.violations.push_back("sample " + std::to_string(s) + ": k=" + std::to_string(k) + " " + label(m) +
                                 " not shifted into " + label(m + k));
      }
      ck = multiply(ctx, ck, c);
    }
  }
  r.finish();
  return r;
}

CheckReport check_cube_ideal_powers(LowerChainView const& view, std::size_t k_max) {
  CheckReport r = make_report("cube_ideal_powers",
                              "(R^[3])^(2k) in R^[3k+2], (R^[3])^(2k+1) in R^[3k+3], "
                              "(R^[3])^k in R^[2k+1] if 3 is a unit");
  AlgebraContext const& ctx = view.ctx();
  const bool three_invertible = ctx.field().p() != 3;
  Ideal const& cube = view.term(3);
  Ideal power = cube;
  for (std::size_t j = 1; !power.space.is_zero() && (k_max == 0 || j <= 2 * k_max + 1); ++j) {
    auto expect = [&](std::size_t target, char const* part) {
      ++r.instances;
      if (!subspace_leq(power.space, view.space(target)))
        r.violations.push_back(std::string(part) + ": (R^[3])^" + std::to_string(j) + " not in " + label(target));
    };
    if (j >= 2 && j % 2 == 0) expect(3 * (j / 2) + 2, "even power");
    if (j >= 3 && j % 2 == 1) expect(3 * (j / 2) + 3, "odd power");
    if (three_invertible && (k_max == 0 || j <= k_max)) expect(2 * j + 1, "unit three");
    power = ideal_product(ctx, power, cube);
  }
  r.finish();
  return r;
}

CheckReport check_double_commutator_shift(LowerChainView const& view, SampleOptions opt) {
  CheckReport r = make_report("double_commutator_shift", "((x, y, y) - 1) R^[m] is contained in R^[m+2]");
  start_sampled(r, opt);
  AlgebraContext const& ctx = view.ctx();
  auto rng = make_rng(opt.seed, 3);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    Unit x = random_unit(ctx, rng);
    Unit y = random_unit(ctx, rng);
    AlgebraElement c = minus_one(ctx, unit_commutator(ctx, unit_commutator(ctx, x, y), y));
    for (std::size_t m = 1; m + 2 <= view.stop(); ++m) {
      ++r.instances;
      if (!view.left_multiple_in(c, m, m + 2))
        r.violations.push_back("sample " + std::to_string(s) + ": " + label(m) + " not shifted into " +
                               label(m + 2));
    }
  }
  r.finish();
  return r;
}

CheckReport check_triple_commutator_square(LowerChainView const& view, SampleOptions opt) {
  AlgebraContext const& ctx = view.ctx();
  if (ctx.field().p() == 2) throw DomainError("needs 2 to be a unit, which fails in characteristic 2");
  CheckReport r = make_report("triple_commutator_square", "((x, y, y, y) - 1)^2 lies in R^[7]");
  start_sampled(r, opt);
  auto rng = make_rng(opt.seed, 4);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    Unit x = random_unit(ctx, rng);
    Unit y = random_unit(ctx, rng);
    Unit c = unit_commutator(ctx, unit_commutator(ctx, unit_commutator(ctx, x, y), y), y);
    AlgebraElement d = minus_one(ctx, c);
    ++r.instances;
    if (!view.space(7).contains(multiply(ctx, d, d).view()))
      r.violations.push_back("sample " + std::to_string(s) + ": square not in R^[7]");
  }
  r.finish();
  return r;
}

}  // namespace lienil
