#include "lienil/report.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "lienil/algebra.hpp"
#include "lienil/catalog.hpp"
#include "lienil/errors.hpp"
#include "lienil/formulas.hpp"

namespace lienil {

namespace {

constexpr std::size_t kMaxListedViolations = 20;

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  explicit Stopwatch(Json& sink) : sink_(sink), start_(Clock::now()) {}
  void lap(std::string const& phase) {
    auto now = Clock::now();
    sink_[phase] = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
  }

 private:
  Json& sink_;
  Clock::time_point start_;
};

Json verdict(std::string name, std::string status, std::string detail) {
  return {{"name", std::move(name)}, {"status", std::move(status)}, {"detail", std::move(detail)}};
}

std::string pass_fail(bool ok) { return ok ? "passed" : "failed"; }

std::string overall(Json const& verdicts, char const* status_key = "status") {
  for (auto const& v : verdicts)
    if (v.at(status_key) == "failed") return "failed";
  return "passed";
}

std::size_t derived_order(std::vector<Subgroup> const& lcs) { return lcs.size() > 1 ? lcs[1].order() : 1; }

unsigned nilpotency_class(std::vector<Subgroup> const& lcs) {
  // lcs ends with the trivial subgroup; the trivial group has class 0.
  return lcs.size() <= 1 ? 0 : unsigned(lcs.size() - 1);
}

Json group_json(LoadedGroup const& g, std::vector<Subgroup> const& lcs) {
  FiniteGroup const& grp = *g.group;
  return {{"name", g.name},
          {"source", g.source},
          {"p", grp.p()},
          {"order", grp.order()},
          {"derived_order", derived_order(lcs)},
          {"class", nilpotency_class(lcs)},
          {"abelian", grp.is_abelian()}};
}

Json orders(std::vector<Subgroup> const& subgroups) {
  Json out = Json::array();
  for (auto const& s : subgroups) out.push_back(s.order());
  return out;
}

Json cyclic_orders(AbelianInvariants const& inv, unsigned p) {
  Json out = Json::array();
  for (unsigned m : inv.exponents) {
    std::size_t q = 1;
    for (unsigned k = 0; k < m; ++k) q *= p;
    out.push_back(q);
  }
  return out;
}

Json derived_bound_json(DerivedAbelianBound const& b, FiniteGroup const& g, std::optional<std::size_t> t_lower) {
  Json j = {{"applicable", b.applicable}};
  if (!b.applicable) {
    j["reason"] = b.reason;
    return j;
  }
  j["r"] = b.r;
  j["derived_invariants"] = cyclic_orders(b.derived_invariants, g.p());
  j["t_derived"] = b.t_derived;
  j["bound"] = b.bound;
  j["holds"] = t_lower ? Json(*t_lower >= b.bound) : Json(nullptr);
  return j;
}

Json rank_bound_json(RankProfileBound const& b) {
  Json j = {{"applicable", b.applicable}, {"ranks", b.profile.ranks}};
  if (!b.applicable) {
    j["reason"] = b.reason;
    return j;
  }
  j["n"] = b.n;
  j["lhs"] = b.lhs.str();
  j["rhs"] = b.rhs.str();
  j["holds"] = b.holds;
  return j;
}

std::string join(std::vector<std::string> const& xs) {
  std::string s;
  for (auto const& x : xs) s += (s.empty() ? "" : ", ") + x;
  return s.empty() ? "none" : s;
}

std::string timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string read_file(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool looks_like_cayley(std::string const& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string first;
    if (ls >> first) return first == "order";
  }
  return false;
}

}  // namespace

Json Report::document(std::string const& command) const {
  return {{"payload", payload},
          {"envelope", {{"tool", "lienil"}, {"command", command}, {"timestamp", timestamp()}, {"timings_ms", timings_ms}}}};
}

LoadedGroup load_group(std::string const& ref, unsigned p_hint, std::size_t max_order) {
  if (CatalogEntry const* e = find_entry(ref)) {
    if (p_hint != 0 && p_hint != e->p)
      throw InputError("catalog group " + ref + " is a " + std::to_string(e->p) + "-group, not a " +
                       std::to_string(p_hint) + "-group");
    return {e->name, "catalog", std::make_shared<FiniteGroup>(build_group(e->presentation(), {max_order}))};
  }
  std::filesystem::path path(ref);
  if (!std::filesystem::is_regular_file(path)) throw InputError("no catalog group or file named '" + ref + "'");
  std::string text = read_file(path);
  if (looks_like_cayley(text)) {
    auto g = std::make_shared<FiniteGroup>(parse_cayley_file(text, p_hint));
    if (g->order() > max_order)
      throw ResourceError("group order " + std::to_string(g->order()) + " exceeds the order cap " +
                          std::to_string(max_order));
    return {ref, "cayley-file", std::move(g)};
  }
  PcPresentation pres = parse_pc_file(text);
  if (p_hint != 0 && p_hint != pres.p())
    throw InputError("presentation is over p = " + std::to_string(pres.p()) + ", not " + std::to_string(p_hint));
  return {ref, "pc-file", std::make_shared<FiniteGroup>(build_group(pres, {max_order}))};
}

std::vector<std::size_t> scan_index_set(unsigned p) {
  std::size_t q = p;
  return {q + 1, 2 * q, 3 * q - 1, 4 * q - 2, 5 * q - 3, 6 * q - 4};
}

std::size_t default_scan_cap(unsigned p) {
  switch (p) {
    case 2:
      return 64;
    case 3:
      return 243;
    default:
      return std::size_t(p) * p * p;
  }
}

Json to_json(CheckReport const& r) {
  Json j = {{"name", r.name},
            {"statement", r.statement},
            {"status", to_string(r.status)},
            {"exact", r.exact},
            {"instances", r.instances},
            {"violation_count", r.violations.size()}};
  Json v = Json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < kMaxListedViolations; ++i) v.push_back(r.violations[i]);
  j["violations"] = v;
  if (r.status == CheckStatus::skipped) j["skip_reason"] = r.skip_reason;
  if (r.seed) j["seed"] = *r.seed;
  if (r.samples) j["samples"] = *r.samples;
  return j;
}

Report index_report(LoadedGroup const& g, RunOptions const& opt) {
  Report rep;
  Stopwatch sw(rep.timings_ms);
  FiniteGroup const& grp = *g.group;
  const unsigned p = grp.p();
  auto lcs = lower_central_series(grp);
  DimensionChain dims = dimension_subgroup_chain(grp, lcs);
  const std::size_t closed = upper_index_closed_form(dims.d, p);
  sw.lap("group");

  Json& out = rep.payload;
  out["kind"] = "indices";
  out["group"] = group_json(g, lcs);
  out["formula_only"] = opt.formula_only;
  out["t_upper_closed_form"] = closed;
  out["d_profile"] = dims.d;
  out["dimension_subgroup_orders"] = dims.orders();
  out["lower_central_orders"] = orders(lcs);

  std::optional<std::size_t> t_lower, t_upper;
  Json verdicts = Json::array();
  const std::size_t dg = derived_order(lcs);
  const bool abelian = grp.is_abelian();
  if (!opt.formula_only) {
    AlgebraContext ctx(g.group);
    LowerChain lower = lower_lie_chain(ctx);
    sw.lap("lower_chain");
    LieChain upper = upper_lie_chain(ctx);
    sw.lap("upper_chain");
    LieChain aug = augmentation_chain(ctx);
    sw.lap("augmentation_chain");
    t_lower = lower.index();
    t_upper = upper.stop_index();
    out["chains"] = {{"lower", lower.chain.dimensions()},
                     {"upper", upper.dimensions()},
                     {"augmentation", aug.dimensions()},
                     {"weight_spaces", [&] {
                        Json w = Json::array();
                        for (auto const& s : lower.weights) w.push_back(s.dimension());
                        return w;
                      }()}};
    out["t_lower"] = *t_lower;
    out["t_upper_bruteforce"] = *t_upper;
    out["t_aug"] = aug.stop_index();

    bool nested = true;
    for (std::size_t n = 1; n <= upper.stop_index(); ++n)
      nested = nested && subspace_leq(lower.chain.space(n), upper.space(n));
    verdicts.push_back(verdict("lower_inside_upper", pass_fail(nested && *t_lower <= *t_upper),
                               "R^[n] inside R^(n) for every n, so t_L <= t^L"));
    verdicts.push_back(verdict("upper_index_oracle", pass_fail(*t_upper == closed),
                               "brute-force t^L " + std::to_string(*t_upper) + ", closed form " + std::to_string(closed)));
    if (abelian) {
      verdicts.push_back(verdict("index_range", pass_fail(*t_lower == 2 && *t_upper == 2), "commutative: t_L = t^L = 2"));
    } else {
      bool ok = *t_lower >= p + 1 && *t_upper <= dg + 1;
      verdicts.push_back(verdict("index_range", pass_fail(ok),
                                 "p + 1 = " + std::to_string(p + 1) + " <= t_L and t^L <= |G'| + 1 = " +
                                     std::to_string(dg + 1)));
    }
    if (p > 3)
      verdicts.push_back(verdict("lower_equals_upper", pass_fail(*t_lower == *t_upper), "t_L = t^L for p > 3"));
    else
      verdicts.push_back(verdict("lower_equals_upper", "skipped", "only asserted for p > 3"));
  } else {
    out["chains"] = nullptr;
    out["t_lower"] = nullptr;
    out["t_upper_bruteforce"] = nullptr;
    out["t_aug"] = nullptr;
    for (char const* name : {"lower_inside_upper", "upper_index_oracle", "index_range", "lower_equals_upper"})
      verdicts.push_back(verdict(name, "not checked", "brute force skipped"));
  }
  unsigned dsum = 0;
  for (unsigned x : dims.d) dsum += x;
  verdicts.push_back(verdict("d_profile_sum", pass_fail(dsum == grp.log_p(dg)),
                             "sum of d_(m) = " + std::to_string(dsum) + ", log_p |G'| = " + std::to_string(grp.log_p(dg))));

  out["bounds"] = {{"derived_abelian", derived_bound_json(derived_abelian_bound(grp, lcs), grp, t_lower)},
                   {"rank_profile", t_lower ? rank_bound_json(rank_profile_bound(grp, lcs, *t_lower))
                                            : Json{{"applicable", false}, {"reason", "t_L not computed"}}}};
  sw.lap("bounds");
  out["verdicts"] = verdicts;
  out["status"] = overall(verdicts);
  return rep;
}

Report series_report(LoadedGroup const& g) {
  Report rep;
  Stopwatch sw(rep.timings_ms);
  FiniteGroup const& grp = *g.group;
  auto lcs = lower_central_series(grp);
  DimensionChain dims = dimension_subgroup_chain(grp, lcs);
  RankProfile rp = rank_profile(grp, lcs);
  Json& out = rep.payload;
  out["kind"] = "series";
  out["group"] = group_json(g, lcs);
  out["lower_central_orders"] = orders(lcs);
  out["dimension_subgroup_orders"] = dims.orders();
  out["d_profile"] = dims.d;
  out["rank_profile"] = rp.ranks;
  out["center_order"] = center(grp).order();
  out["exponent"] = grp.exponent();
  Subgroup derived = lcs.size() > 1 ? lcs[1] : trivial_subgroup(grp);
  out["derived_invariants"] =
      is_abelian(grp, derived) ? cyclic_orders(abelian_invariants(grp, derived), grp.p()) : Json(nullptr);
  out["status"] = "passed";
  sw.lap("series");
  return rep;
}

Report lemma_report(LoadedGroup const& g, RunOptions const& opt) {
  Report rep;
  Stopwatch sw(rep.timings_ms);
  FiniteGroup const& grp = *g.group;
  auto lcs = lower_central_series(grp);
  AlgebraContext ctx(g.group);
  LowerChain lower = lower_lie_chain(ctx);
  LowerChainView view(ctx, lower);
  sw.lap("lower_chain");

  std::vector<CheckReport> checks;
  checks.push_back(check_lie_power_products(view));
  sw.lap("lie_power_products");
  checks.push_back(check_unit_commutators(view, 0, opt.sampling));
  sw.lap("unit_commutators");
  checks.push_back(check_commutator_power_shift(view, 0, opt.sampling));
  sw.lap("commutator_power_shift");
  checks.push_back(check_cube_ideal_powers(view, 0));
  sw.lap("cube_ideal_powers");
  checks.push_back(check_double_commutator_shift(view, opt.sampling));
  sw.lap("double_commutator_shift");
  if (grp.p() == 2) {
    CheckReport r;
    r.name = "triple_commutator_square";
    r.statement = "((x, y, y, y) - 1)^2 lies in R^[7]";
    r.status = CheckStatus::skipped;
    r.skip_reason = "needs 2 to be a unit; fails in characteristic 2";
    checks.push_back(r);
  } else {
    checks.push_back(check_triple_commutator_square(view, opt.sampling));
  }
  sw.lap("triple_commutator_square");

  const std::size_t tl = lower.index();
  {
    DerivedAbelianBound b = derived_abelian_bound(grp, lcs);
    CheckReport r;
    r.name = "derived_abelian_bound";
    r.statement = "t_L >= t(G') + r + 1 (p = 3) or t(G') + r(p - 1) + 1 (p != 3)";
    if (!b.applicable) {
      r.status = CheckStatus::skipped;
      r.skip_reason = b.reason;
    } else {
      r.instances = 1;
      if (tl < b.bound)
        r.violations.push_back("t_L = " + std::to_string(tl) + " < bound " + std::to_string(b.bound));
    }
    r.finish();
    checks.push_back(r);
  }
  {
    RankProfileBound b = rank_profile_bound(grp, lcs, tl);
    CheckReport r;
    r.name = "rank_profile_bound";
    r.statement = "m_2 + (3/2) m_3 + 2 m_4 + ... + (c-2) m_c <= (t_L - 3)/(p - 1)";
    if (!b.applicable) {
      r.status = CheckStatus::skipped;
      r.skip_reason = b.reason;
    } else {
      r.instances = 1;
      if (!b.holds) r.violations.push_back("left side " + b.lhs.str() + " > right side " + b.rhs.str());
    }
    r.finish();
    checks.push_back(r);
  }
  sw.lap("bounds");

  Json& out = rep.payload;
  out["kind"] = "lemmas";
  out["group"] = group_json(g, lcs);
  out["t_lower"] = tl;
  out["sampling"] = {{"samples", opt.sampling.samples}, {"seed", opt.sampling.seed}};
  Json arr = Json::array();
  for (auto const& c : checks) arr.push_back(to_json(c));
  out["checks"] = arr;
  out["status"] = overall(arr);
  return rep;
}

Report scan_report(unsigned p, std::size_t max_order, RunOptions const& opt) {
  Report rep;
  Stopwatch sw(rep.timings_ms);
  std::vector<CatalogEntry const*> entries;
  Json excluded = Json::array();
  for (auto const& e : builtin_catalog()) {
    if (e.p != p) continue;
    if (e.order() <= max_order)
      entries.push_back(&e);
    else
      excluded.push_back(e.name);
  }

  struct Row {
    std::size_t order = 0, derived = 0, closed = 0, t_lower = 0, t_upper = 0;
    unsigned cls = 0;
  };
  std::vector<Row> rows(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < entries.size();) {
      try {
        auto grp = std::make_shared<FiniteGroup>(build_group(entries[i]->presentation(), {max_order}));
        auto lcs = lower_central_series(*grp);
        Row& r = rows[i];
        r.order = grp->order();
        r.derived = derived_order(lcs);
        r.cls = nilpotency_class(lcs);
        r.closed = upper_index_closed_form(dimension_subgroup_chain(*grp, lcs).d, p);
        if (!opt.formula_only) {
          AlgebraContext ctx(grp);
          r.t_lower = lower_lie_chain(ctx).index();
          r.t_upper = upper_lie_chain(ctx).stop_index();
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned nthreads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  nthreads = unsigned(std::min<std::size_t>(nthreads, std::max<std::size_t>(entries.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto const& e : errors)
    if (e) std::rethrow_exception(e);
  sw.lap("rows");

  Json out_rows = Json::array();
  Json verdicts = Json::array();
  const bool brute = !opt.formula_only;
  std::vector<std::string> oracle_bad, order_bad, range_bad;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Row const& r = rows[i];
    Json row = {{"name", entries[i]->name},
                {"order", r.order},
                {"derived_order", r.derived},
                {"class", r.cls},
                {"t_upper_closed_form", r.closed}};
    if (brute) {
      row["t_lower"] = r.t_lower;
      row["t_upper"] = r.t_upper;
      if (r.t_upper != r.closed) oracle_bad.push_back(entries[i]->name);
      if (r.t_lower > r.t_upper) order_bad.push_back(entries[i]->name);
      bool in_range = r.derived == 1 ? (r.t_lower == 2 && r.t_upper == 2)
                                     : (r.t_lower >= p + 1 && r.t_upper <= r.derived + 1);
      if (!in_range) range_bad.push_back(entries[i]->name);
    } else {
      row["t_lower"] = nullptr;
      row["t_upper"] = nullptr;
    }
    out_rows.push_back(row);
  }
  if (brute) {
    verdicts.push_back(verdict("upper_index_oracle", pass_fail(oracle_bad.empty()),
                               "rows where brute-force t^L differs from the closed form: " + join(oracle_bad)));
    verdicts.push_back(verdict("lower_at_most_upper", pass_fail(order_bad.empty()), "rows with t_L > t^L: " + join(order_bad)));
    verdicts.push_back(verdict("index_range", pass_fail(range_bad.empty()),
                               "rows outside p + 1 <= t_L <= t^L <= |G'| + 1: " + join(range_bad)));
  }
  for (std::size_t k : scan_index_set(p)) {
    std::string name = "lower_iff_upper_" + std::to_string(k);
    if (!brute) {
      verdicts.push_back(verdict(name, "not checked", "brute force skipped"));
      continue;
    }
    std::vector<std::string> lower_k, upper_k;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (rows[i].t_lower == k) lower_k.push_back(entries[i]->name);
      if (rows[i].t_upper == k) upper_k.push_back(entries[i]->name);
    }
    verdicts.push_back(verdict(name, pass_fail(lower_k == upper_k),
                               "t_L = " + std::to_string(k) + ": " + join(lower_k) + "; t^L = " + std::to_string(k) +
                                   ": " + join(upper_k)));
  }
  if (p == 3) {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (brute && (rows[i].t_lower == 11 || rows[i].t_lower == 13)) bad.push_back(entries[i]->name);
    verdicts.push_back(verdict("no_lower_index_11_or_13", brute ? pass_fail(bad.empty()) : "not checked",
                               "rows with t_L in {11, 13}: " + join(bad)));
  }
  if (p > 3) {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < entries.size(); ++i)
      if (brute && rows[i].t_lower != rows[i].t_upper) bad.push_back(entries[i]->name);
    verdicts.push_back(verdict("lower_equals_upper", brute ? pass_fail(bad.empty()) : "not checked",
                               "rows with t_L != t^L: " + join(bad)));
  }

  Json& out = rep.payload;
  out["kind"] = "scan";
  out["p"] = p;
  out["max_order"] = max_order;
  out["formula_only"] = opt.formula_only;
  out["index_set"] = scan_index_set(p);
  out["rows"] = out_rows;
  out["excluded"] = excluded;
  out["verdicts"] = verdicts;
  out["status"] = overall(verdicts);
  sw.lap("verdicts");
  return rep;
}

namespace {

std::string value_text(Json const& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string list_text(Json const& v) {
  if (v.is_null()) return "-";
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + value_text(v[i]);
  return s + ")";
}

void group_line(std::ostream& out, Json const& g) {
  out << "group " << value_text(g["name"]) << " (" << value_text(g["source"]) << "): p = " << g["p"]
      << ", |G| = " << g["order"] << ", |G'| = " << g["derived_order"] << ", class " << g["class"] << "\n";
}

void verdict_lines(std::ostream& out, Json const& verdicts) {
  for (auto const& v : verdicts)
    out << "  [" << value_text(v["status"]) << "] " << value_text(v["name"]) << ": " << value_text(v["detail"]) << "\n";
}

void bound_lines(std::ostream& out, Json const& b) {
  Json const& d = b["derived_abelian"];
  out << "  derived-abelian bound: ";
  if (!d.value("applicable", false))
    out << "not applicable (" << value_text(d["reason"]) << ")\n";
  else
    out << "r = " << d["r"] << ", t(G') = " << d["t_derived"] << ", bound " << d["bound"]
        << ", holds: " << value_text(d["holds"]) << "\n";
  Json const& r = b["rank_profile"];
  out << "  rank-profile bound: ";
  if (!r.value("applicable", false))
    out << "not applicable (" << value_text(r["reason"]) << ")\n";
  else
    out << "ranks " << list_text(r["ranks"]) << ", " << value_text(r["lhs"]) << " <= " << value_text(r["rhs"])
        << ": " << value_text(r["holds"]) << "\n";
}

}  // namespace

std::string render_text(Json const& payload) {
  std::ostringstream out;
  std::string kind = payload.value("kind", "");
  if (kind == "indices") {
    group_line(out, payload["group"]);
    out << "t_L = " << value_text(payload["t_lower"]) << ", t^L = " << value_text(payload["t_upper_bruteforce"])
        << " (closed form " << payload["t_upper_closed_form"] << "), t(G) = " << value_text(payload["t_aug"]) << "\n";
    out << "d profile " << list_text(payload["d_profile"]) << ", D_(m) orders "
        << list_text(payload["dimension_subgroup_orders"]) << "\n";
    if (!payload["chains"].is_null()) {
      out << "dimensions: lower " << list_text(payload["chains"]["lower"]) << "\n";
      out << "            upper " << list_text(payload["chains"]["upper"]) << "\n";
      out << "            augmentation " << list_text(payload["chains"]["augmentation"]) << "\n";
    }
    out << "bounds:\n";
    bound_lines(out, payload["bounds"]);
    out << "verdicts:\n";
    verdict_lines(out, payload["verdicts"]);
  } else if (kind == "series") {
    group_line(out, payload["group"]);
    out << "gamma orders " << list_text(payload["lower_central_orders"]) << "\n";
    out << "D_(m) orders " << list_text(payload["dimension_subgroup_orders"]) << "\n";
    out << "d profile " << list_text(payload["d_profile"]) << "\n";
    out << "rank profile (m_2, ...) " << list_text(payload["rank_profile"]) << "\n";
    out << "|Z(G)| = " << payload["center_order"] << ", exponent " << payload["exponent"] << "\n";
    out << "G' invariants " << list_text(payload["derived_invariants"]) << "\n";
  } else if (kind == "lemmas") {
    group_line(out, payload["group"]);
    out << "t_L = " << payload["t_lower"] << ", samples " << payload["sampling"]["samples"] << ", seed "
        << payload["sampling"]["seed"] << "\n";
    for (auto const& c : payload["checks"]) {
      out << "  [" << value_text(c["status"]) << "] " << value_text(c["name"]) << ": " << value_text(c["statement"]);
      if (c["status"] == "skipped")
        out << " (" << value_text(c["skip_reason"]) << ")";
      else
        out << " (" << c["instances"] << (c["exact"].get<bool>() ? " exact" : " sampled") << " instances)";
      out << "\n";
      for (auto const& v : c["violations"]) out << "      " << value_text(v) << "\n";
    }
  } else if (kind == "scan") {
    out << "scan p = " << payload["p"] << ", max order " << payload["max_order"] << ", K = "
        << list_text(payload["index_set"]) << "\n";
    out << std::left << std::setw(20) << "group" << std::right << std::setw(6) << "|G|" << std::setw(6) << "|G'|"
        << std::setw(6) << "cls" << std::setw(6) << "t_L" << std::setw(6) << "t^L" << std::setw(8) << "closed" << "\n";
    for (auto const& r : payload["rows"])
      out << std::left << std::setw(20) << value_text(r["name"]) << std::right << std::setw(6) << value_text(r["order"])
          << std::setw(6) << value_text(r["derived_order"]) << std::setw(6) << value_text(r["class"]) << std::setw(6)
          << value_text(r["t_lower"]) << std::setw(6) << value_text(r["t_upper"]) << std::setw(8)
          << value_text(r["t_upper_closed_form"]) << "\n";
    if (!payload["excluded"].empty()) out << "above the order cap: " << list_text(payload["excluded"]) << "\n";
    out << "verdicts:\n";
    verdict_lines(out, payload["verdicts"]);
  }
  out << "status: " << value_text(payload["status"]) << "\n";
  return out.str();
}

}  // namespace lienil
