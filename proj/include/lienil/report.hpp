#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "lienil/checks.hpp"
#include "lienil/group.hpp"

namespace lienil {

using Json = nlohmann::json;

struct LoadedGroup {
  std::string name;
  std::string source;  // "catalog", "pc-file" or "cayley-file"
  std::shared_ptr<const FiniteGroup> group;
};

/// Resolves a catalog name or a file path. Cayley files start with "order";
/// anything else is read as a pc presentation. p_hint = 0 lets Cayley files
/// infer the prime from the order.
LoadedGroup load_group(std::string const& ref, unsigned p_hint, std::size_t max_order);

struct RunOptions {
  bool formula_only = false;
  SampleOptions sampling;
  std::size_t max_order = 1024;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// A report value. The payload is deterministic; timings go to the envelope.
struct Report {
  Json payload;
  Json timings_ms = Json::object();

  bool passed() const { return payload.value("status", "failed") == "passed"; }
  /// {"payload": ..., "envelope": {tool, command, timestamp, timings_ms}}.
  Json document(std::string const& command) const;
};

Report index_report(LoadedGroup const& g, RunOptions const& opt);
Report series_report(LoadedGroup const& g);
Report lemma_report(LoadedGroup const& g, RunOptions const& opt);
Report scan_report(unsigned p, std::size_t max_order, RunOptions const& opt);

/// {p+1, 2p, 3p-1, 4p-2, 5p-3, 6p-4}.
std::vector<std::size_t> scan_index_set(unsigned p);
/// 2^6, 3^5, 5^3, and p^3 for other primes.
std::size_t default_scan_cap(unsigned p);

Json to_json(CheckReport const& r);

/// Human-readable projection of a payload.
std::string render_text(Json const& payload);

}  // namespace lienil
