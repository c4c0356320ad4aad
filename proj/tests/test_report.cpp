#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "lienil/errors.hpp"
#include "lienil/report.hpp"

using namespace lienil;

namespace {

LoadedGroup load(std::string const& name) { return load_group(name, 0, 1024); }

Json find_named(Json const& list, std::string const& name) {
  for (auto const& v : list)
    if (v.at("name") == name) return v;
  FAIL("missing " << name);
  return {};
}

std::filesystem::path write_temp(std::string const& name, std::string const& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("index reports on forced cases") {
  for (auto const& [name, t] :
       std::vector<std::pair<std::string, std::size_t>>{{"d4", 3}, {"q8", 3}, {"heisenberg27", 4}, {"c9", 2}}) {
    CAPTURE(name);
    Report r = index_report(load(name), {});
    CHECK(r.passed());
    CHECK(r.payload["t_lower"] == t);
    CHECK(r.payload["t_upper_bruteforce"] == t);
    CHECK(r.payload["t_upper_closed_form"] == t);
  }
  Report c9 = index_report(load("c9"), {});
  CHECK(c9.payload["t_aug"] == 9);
  CHECK(c9.payload["group"]["abelian"] == true);
}

TEST_CASE("formula-only index reports mark brute force as not checked") {
  RunOptions opt;
  opt.formula_only = true;
  Report r = index_report(load("g729class4"), opt);
  CHECK(r.payload["t_lower"].is_null());
  CHECK(r.payload["t_upper_closed_form"] == 14);
  CHECK(find_named(r.payload["verdicts"], "upper_index_oracle")["status"] == "not checked");
  CHECK(find_named(r.payload["verdicts"], "d_profile_sum")["status"] == "passed");
  CHECK(r.passed());
}

TEST_CASE("series reports") {
  Report d4 = series_report(load("d4"));
  CHECK(d4.payload["lower_central_orders"] == Json::array({8, 2, 1}));
  CHECK(d4.payload["dimension_subgroup_orders"] == Json::array({8, 2, 1}));
  CHECK(d4.payload["d_profile"] == Json::array({1}));
  CHECK(series_report(load("c3wrc3")).payload["lower_central_orders"] == Json::array({81, 9, 3, 1}));
  Report c27 = series_report(load("c27"));
  CHECK(c27.payload["lower_central_orders"] == Json::array({27, 1}));
  CHECK(c27.payload["d_profile"].empty());
}

TEST_CASE("lemma reports gate hypotheses") {
  Report d4 = lemma_report(load("d4"), {});
  CHECK(d4.passed());
  CHECK(find_named(d4.payload["checks"], "triple_commutator_square")["status"] == "skipped");
  CHECK(find_named(d4.payload["checks"], "rank_profile_bound")["status"] == "skipped");
  CHECK(d4.payload["sampling"]["samples"] == 64);
  CHECK(d4.payload["sampling"]["seed"] == 0);

  Report c9 = lemma_report(load("c9"), {});
  CHECK(c9.passed());
  for (auto const& c : c9.payload["checks"]) CHECK(c["violation_count"] == 0);
}

TEST_CASE("rank profile bound on the order 27 exponent 3 group") {
  RunOptions opt;
  opt.sampling = {32, 7};
  Report r = lemma_report(load("heisenberg27"), opt);
  Json rank = find_named(r.payload["checks"], "rank_profile_bound");
  // m_2 = 1 against (4 - 3)/2.
  CHECK(rank["status"] == "failed");
  CHECK(rank["violations"][0] == "left side 1 > right side 1/2");
  for (auto const& c : r.payload["checks"])
    if (c["name"] != "rank_profile_bound") CHECK(c["status"] == "passed");
}

TEST_CASE("scan reports") {
  RunOptions opt;
  Report p3 = scan_report(3, default_scan_cap(3), opt);
  CHECK(p3.payload["index_set"] == Json::array({4, 6, 8, 10, 12, 14}));
  CHECK(p3.passed());
  CHECK(scan_index_set(2) == std::vector<std::size_t>{3, 4, 5, 6, 7, 8});
  Report p5 = scan_report(5, default_scan_cap(5), opt);
  for (auto const& row : p5.payload["rows"]) CHECK(row["t_lower"] == row["t_upper"]);
  CHECK(find_named(p5.payload["verdicts"], "lower_equals_upper")["status"] == "passed");
  CHECK(p5.payload["excluded"] == Json::array({"maxclass625"}));

  RunOptions serial = opt;
  serial.threads = 1;
  RunOptions parallel = opt;
  parallel.threads = 4;
  CHECK(scan_report(2, 64, serial).payload.dump() == scan_report(2, 64, parallel).payload.dump());
  std::vector<std::string> names;
  for (auto const& row : p3.payload["rows"]) names.push_back(row["name"]);
  CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("documents carry an envelope outside the payload") {
  Report r = series_report(load("q8"));
  Json doc = r.document("series --group q8");
  CHECK(doc["payload"] == r.payload);
  CHECK(doc["envelope"]["tool"] == "lienil");
  CHECK(doc["envelope"]["command"] == "series --group q8");
  CHECK(render_text(r.payload).find("status: passed") != std::string::npos);
}

TEST_CASE("loading groups from files and failures") {
  auto pc = write_temp("lienil_test_d4.pc", "p 2\ngens 3\npow 1 : x3\ncomm 2 1 : x3\n");
  LoadedGroup g = load_group(pc.string(), 0, 1024);
  CHECK(g.source == "pc-file");
  CHECK(g.group->order() == 8);
  CHECK_THROWS_AS(load_group(pc.string(), 3, 1024), InputError);

  auto cayley = write_temp("lienil_test_c3.txt", "order 3\n0 1 2\n1 2 0\n2 0 1\n");
  LoadedGroup c = load_group(cayley.string(), 0, 1024);
  CHECK(c.source == "cayley-file");
  CHECK(index_report(c, {}).payload["t_aug"] == 3);

  auto bad = write_temp("lienil_test_bad.pc", "p 2\ngens 2\nbogus\n");
  CHECK_THROWS_AS(load_group(bad.string(), 0, 1024), ParseError);
  CHECK_THROWS_AS(load_group("no-such-group", 0, 1024), InputError);
  CHECK_THROWS_AS(load_group("d4", 3, 1024), InputError);
  CHECK_THROWS_AS(load_group("g729class3", 0, 243), ResourceError);
  for (auto const& p : {pc, cayley, bad}) std::filesystem::remove(p);
}
