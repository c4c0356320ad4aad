#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lienil/errors.hpp"
#include "lienil/report.hpp"

namespace {

enum class Exit { ok = 0, verdict_failed = 1, usage = 2 };

struct Flags {
  std::string group;
  unsigned p = 0;
  std::string format = "text";
  std::size_t max_order = 0;
  std::size_t samples = 64;
  std::uint64_t seed = 0;
  bool formula_only = false;
};

void add_common(CLI::App* cmd, Flags& f, bool needs_group) {
  auto* g = cmd->add_option("--group", f.group, "catalog name or path to a presentation / Cayley table file");
  if (needs_group) g->required();
  cmd->add_option("--p", f.p, "prime")->check(CLI::PositiveNumber);
  cmd->add_option("--format", f.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-order", f.max_order, "largest group order to build")->check(CLI::PositiveNumber);
  cmd->add_option("--samples", f.samples, "samples per sampled check");
  cmd->add_option("--seed", f.seed, "seed for sampled checks");
  cmd->add_flag("--formula-only", f.formula_only, "skip brute-force chains");
}

std::string command_line(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie nilpotency indices of modular group algebras"};
  app.require_subcommand(1);
  Flags f;
  CLI::App* indices = app.add_subcommand("indices", "lower, upper and augmentation indices of one group");
  CLI::App* series = app.add_subcommand("series", "central and dimension subgroup series of one group");
  CLI::App* lemmas = app.add_subcommand("lemmas", "containment and bound checks on one group");
  CLI::App* scan = app.add_subcommand("scan", "index scan over the built-in catalog for one prime");
  add_common(indices, f, true);
  add_common(series, f, true);
  add_common(lemmas, f, true);
  add_common(scan, f, false);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : int(Exit::usage);
  }

  try {
    lienil::RunOptions opt;
    opt.formula_only = f.formula_only;
    opt.sampling.samples = f.samples;
    opt.sampling.seed = f.seed;
    lienil::Report report;
    if (scan->parsed()) {
      if (f.p == 0) throw lienil::InputError("scan needs --p");
      std::size_t cap = f.max_order ? f.max_order : lienil::default_scan_cap(f.p);
      opt.max_order = cap;
      report = lienil::scan_report(f.p, cap, opt);
    } else {
      if (f.max_order) opt.max_order = f.max_order;
      lienil::LoadedGroup g = lienil::load_group(f.group, f.p, opt.max_order);
      if (indices->parsed())
        report = lienil::index_report(g, opt);
      else if (series->parsed())
        report = lienil::series_report(g);
      else
        report = lienil::lemma_report(g, opt);
    }
    if (f.format == "json")
      std::cout << report.document(command_line(argc, argv)).dump(2) << "\n";
    else
      std::cout << lienil::render_text(report.payload);
    return int(report.passed() ? Exit::ok : Exit::verdict_failed);
  } catch (lienil::InputError const& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (lienil::PresentationInconsistency const& e) {
    std::cerr << "inconsistent presentation: " << e.what() << "\n";
  } catch (lienil::ResourceError const& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
  } catch (lienil::DomainError const& e) {
    std::cerr << "domain error: " << e.what() << "\n";
  }
  return int(Exit::usage);
}
