#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lienil {

using Element = std::uint32_t;

/// A normal word x_{k1}^{e1} x_{k2}^{e2} ... with k strictly increasing and
/// 1 <= e < p. Generator indices are 0-based.
struct PcWord {
  std::vector<std::pair<unsigned, unsigned>> letters;

  bool empty() const { return letters.empty(); }
  friend bool operator==(PcWord const&, PcWord const&) = default;
};

/// Power-commutator presentation of a finite p-group of order p^n_gens.
///
/// power(i) is the word for x_i^p; commutator(j, i) for j > i is the word
/// for (x_j, x_i). Relations not set are the identity.
class PcPresentation {
 public:
  PcPresentation(unsigned p, unsigned n_gens);

  unsigned p() const { return p_; }
  unsigned n_gens() const { return n_; }

  PcWord const& power(unsigned i) const { return powers_.at(i); }
  PcWord const& commutator(unsigned j, unsigned i) const;
  void set_power(unsigned i, PcWord w);
  void set_commutator(unsigned j, unsigned i, PcWord w);

  std::vector<std::string> const& names() const { return names_; }
  void set_names(std::vector<std::string> names);

  /// Checks every relation word; throws InputError naming the bad relation.
  void validate() const;

 private:
  unsigned p_;
  unsigned n_;
  std::vector<PcWord> powers_;
  std::vector<PcWord> comms_;  // j * n + i
  std::vector<std::string> names_;
};

/// A finite p-group given by its full Cayley table. Element 0 is the identity.
class FiniteGroup {
 public:
  /// Takes ownership of a row-major order x order table. Verifies identity,
  /// Latin-square rows and p-power order; associativity is the caller's job
  /// (build_group and parse_cayley_file each certify it).
  FiniteGroup(unsigned p, std::size_t order, std::vector<Element> table, std::vector<Element> generators,
              std::vector<std::vector<unsigned>> element_words = {});

  unsigned p() const { return p_; }
  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[std::size_t(a) * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  std::span<const Element> generators() const { return gens_; }
  /// Normal-form exponent vectors, present when built from a presentation.
  std::vector<std::vector<unsigned>> const& element_words() const { return words_; }

  Element power(Element g, std::uint64_t e) const;
  std::size_t element_order(Element g) const;
  /// Largest element order.
  std::size_t exponent() const;
  bool is_abelian() const;
  /// log_p of a p-power; throws InvariantError otherwise.
  unsigned log_p(std::size_t n) const;

 private:
  unsigned p_;
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<Element> gens_;
  std::vector<std::vector<unsigned>> words_;
};

/// A subgroup stored as an explicit sorted element set.
class Subgroup {
 public:
  Subgroup(std::size_t group_order, std::vector<Element> elements, std::vector<Element> generators);

  std::size_t order() const { return elements_.size(); }
  std::vector<Element> const& elements() const { return elements_; }
  std::vector<Element> const& generators() const { return generators_; }
  bool contains(Element g) const { return mask_[g] != 0; }
  bool is_trivial() const { return elements_.size() == 1; }

  friend bool operator==(Subgroup const& a, Subgroup const& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<Element> elements_;
  std::vector<Element> generators_;
  std::vector<std::uint8_t> mask_;
};

/// Non-increasing exponents (m_1, ..., m_s): the abelian group is
/// C_{p^m_1} x ... x C_{p^m_s}.
struct AbelianInvariants {
  std::vector<unsigned> exponents;
  friend bool operator==(AbelianInvariants const&, AbelianInvariants const&) = default;
};

/// Ranks m_i of gamma_i / gamma_{i+1} for 2 <= i <= class.
struct RankProfile {
  std::vector<unsigned> ranks;  // ranks[0] is m_2
  unsigned nilpotency_class = 1;
};

struct BuildOptions {
  std::size_t max_order = 1024;
};

FiniteGroup build_group(PcPresentation const& pres, BuildOptions const& options = {});

Element group_commutator(FiniteGroup const& g, Element x, Element y);
/// Left-normed (x1, ..., xk); needs k >= 1.
Element group_commutator(FiniteGroup const& g, std::span<const Element> xs);

Subgroup whole_group(FiniteGroup const& g);
Subgroup trivial_subgroup(FiniteGroup const& g);
Subgroup subgroup_closure(FiniteGroup const& g, std::span<const Element> seed);
/// gamma_1 = G, ..., ending with the trivial subgroup gamma_{c+1}.
std::vector<Subgroup> lower_central_series(FiniteGroup const& g);
Subgroup power_subgroup(FiniteGroup const& g, Subgroup const& h, std::uint64_t q);
Subgroup subgroup_product(FiniteGroup const& g, Subgroup const& h, Subgroup const& k);
Subgroup subgroup_intersection(FiniteGroup const& g, Subgroup const& h, Subgroup const& k);
Subgroup center(FiniteGroup const& g);
bool is_normal(FiniteGroup const& g, Subgroup const& h);
bool is_abelian(FiniteGroup const& g, Subgroup const& h);
bool is_subset(Subgroup const& h, Subgroup const& k);
AbelianInvariants abelian_invariants(FiniteGroup const& g, Subgroup const& h);
/// Rank of the abelian section H/K.
unsigned section_rank(FiniteGroup const& g, Subgroup const& h, Subgroup const& k);
RankProfile rank_profile(FiniteGroup const& g, std::vector<Subgroup> const& lcs);

}  // namespace lienil
