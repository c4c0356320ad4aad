#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lienil/group.hpp"

namespace lienil {

/// Values known independently of the chain computations, each with a note on why.
struct ExpectedValues {
  std::optional<std::size_t> order;
  std::optional<std::size_t> derived_order;
  std::optional<unsigned> nilpotency_class;
  std::optional<std::size_t> t_lower;
  std::optional<std::size_t> t_upper;
  std::optional<std::size_t> t_aug;
  std::string note;
};

struct CatalogEntry {
  std::string name;
  unsigned p = 0;
  std::string pc_text;
  std::vector<std::string> tags;
  ExpectedValues expected;

  PcPresentation presentation() const;
  std::size_t order() const;
};

/// Built-in groups, sorted by name.
std::vector<CatalogEntry> const& builtin_catalog();
/// nullptr when no entry has that name.
CatalogEntry const* find_entry(std::string_view name);

/// Parses the line-oriented presentation format:
///   p <prime>
///   gens <n>
///   pow <i> : <word>
///   comm <j> <i> : <word>     (j > i)
/// where a word is "e" or tokens x<k>^<e> with k increasing and 1 <= e < p.
/// Generators are 1-based in the text. Throws ParseError.
PcPresentation parse_pc_file(std::string_view text);
/// Canonical text form; parse_pc_file(serialize_pc(x)) reproduces x.
std::string serialize_pc(PcPresentation const& pres);

/// Parses "order N" followed by N rows of N 0-based indices, element 0 the
/// identity. p = 0 infers the prime from N. Every triple is checked for
/// associativity. Throws InputError (ParseError for malformed text).
FiniteGroup parse_cayley_file(std::string_view text, unsigned p = 0);

/// How a case of the t = 12 / t = 14 classification for p = 3 is covered.
struct WitnessCase {
  std::size_t t_upper;
  std::string condition;
  std::vector<std::string> witnesses;  // catalog names; empty means formula-only
  std::string note;
};

std::vector<WitnessCase> const& witness_coverage();

}  // namespace lienil
