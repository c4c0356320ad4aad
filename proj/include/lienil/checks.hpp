#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lienil/algebra.hpp"

namespace lienil {

enum class CheckStatus { passed, failed, skipped };
std::string to_string(CheckStatus s);

/// Outcome of one family of containment checks. Violations are content, not errors.
struct CheckReport {
  std::string name;
  std::string statement;
  CheckStatus status = CheckStatus::passed;
  std::string skip_reason;
  bool exact = true;
  std::size_t instances = 0;
  std::vector<std::string> violations;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;

  void finish() {
    if (status != CheckStatus::skipped) status = violations.empty() ? CheckStatus::passed : CheckStatus::failed;
  }
};

struct SampleOptions {
  std::size_t samples = 64;
  std::uint64_t seed = 0;
};

/// Lower chain plus, for each term, a small set generating it as a right ideal.
/// x R^[m] lies in an ideal C iff x t lies in C for each such generator t.
class LowerChainView {
 public:
  LowerChainView(AlgebraContext const& ctx, LowerChain const& lower);

  AlgebraContext const& ctx() const { return *ctx_; }
  std::size_t stop() const { return lower_->index(); }
  Subspace const& space(std::size_t n) const { return lower_->chain.space(n); }
  Ideal const& term(std::size_t n) const { return lower_->chain.term(n); }
  std::vector<CoeffVector> const& right_generators(std::size_t n) const;
  /// Is x R^[m] contained in R^[n]?
  bool left_multiple_in(AlgebraElement const& x, std::size_t m, std::size_t n) const;

 private:
  AlgebraContext const* ctx_;
  LowerChain const* lower_;
  std::vector<std::vector<CoeffVector>> right_gens_;  // right_gens_[n-1]
};

/// R^[m] R^[n] inside R^[m+n-2], exact, for all m, n with m + n - 2 <= stop.
CheckReport check_lie_power_products(LowerChainView const& view);
/// (u_1, ..., u_m) - 1 in R^[m] for sampled units, m = 2 .. m_max (0 = stop index).
CheckReport check_unit_commutators(LowerChainView const& view, std::size_t m_max, SampleOptions opt);
/// ((x, y) - 1)^k R^[m] inside R^[m+k] for sampled units, m = 1 .. m_max, m + k <= stop.
CheckReport check_commutator_power_shift(LowerChainView const& view, std::size_t m_max, SampleOptions opt);
/// (R^[3])^(2k) in R^[3k+2], (R^[3])^(2k+1) in R^[3k+3], and for p != 3
/// (R^[3])^k in R^[2k+1]; exact for k <= k_max (0 = until the power vanishes).
CheckReport check_cube_ideal_powers(LowerChainView const& view, std::size_t k_max);
/// ((x, y, y) - 1) R^[m] inside R^[m+2] for sampled units, m + 2 <= stop.
CheckReport check_double_commutator_shift(LowerChainView const& view, SampleOptions opt);
/// ((x, y, y, y) - 1)^2 in R^[7] for sampled units. Needs 2 to be invertible,
/// so throws DomainError for p = 2.
CheckReport check_triple_commutator_square(LowerChainView const& view, SampleOptions opt);

}  // namespace lienil
