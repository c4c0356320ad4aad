#include <doctest.h>

#include <array>
#include <map>

#include "lienil/catalog.hpp"
#include "lienil/errors.hpp"
#include "lienil/group.hpp"
#include "oracles.hpp"

using namespace lienil;

namespace {

using Perm = std::array<int, 4>;
using Mat2 = std::array<int, 4>;
using Mat3 = std::array<int, 9>;

std::vector<std::vector<std::size_t>> dihedral8() {
  std::function<Perm(Perm const&, Perm const&)> mul = [](Perm const& a, Perm const& b) {
    Perm c{};
    for (int i = 0; i < 4; ++i) c[i] = b[a[i]];
    return c;
  };
  return oracle::cayley_table<Perm>({Perm{1, 2, 3, 0}, Perm{0, 3, 2, 1}}, Perm{0, 1, 2, 3}, mul);
}

std::vector<std::vector<std::size_t>> quaternion8() {
  std::function<Mat2(Mat2 const&, Mat2 const&)> mul = [](Mat2 const& a, Mat2 const& b) {
    return Mat2{(a[0] * b[0] + a[1] * b[2]) % 3, (a[0] * b[1] + a[1] * b[3]) % 3, (a[2] * b[0] + a[3] * b[2]) % 3,
                (a[2] * b[1] + a[3] * b[3]) % 3};
  };
  return oracle::cayley_table<Mat2>({Mat2{0, 2, 1, 0}, Mat2{1, 1, 1, 2}}, Mat2{1, 0, 0, 1}, mul);
}

std::vector<std::vector<std::size_t>> unitriangular(int p) {
  std::function<Mat3(Mat3 const&, Mat3 const&)> mul = [p](Mat3 const& a, Mat3 const& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int s = 0;
        for (int k = 0; k < 3; ++k) s += a[3 * i + k] * b[3 * k + j];
        c[3 * i + j] = s % p;
      }
    return c;
  };
  return oracle::cayley_table<Mat3>({Mat3{1, 1, 0, 0, 1, 0, 0, 0, 1}, Mat3{1, 0, 0, 0, 1, 1, 0, 0, 1}},
                                    Mat3{1, 0, 0, 0, 1, 0, 0, 0, 1}, mul);
}

std::set<Element> as_set(Subgroup const& s) { return {s.elements().begin(), s.elements().end()}; }

std::vector<std::string> small_catalog(std::size_t cap) {
  std::vector<std::string> out;
  for (auto const& e : builtin_catalog())
    if (e.order() <= cap) out.push_back(e.name);
  return out;
}

}  // namespace

TEST_CASE("pc groups match concrete permutation and matrix groups") {
  CHECK(dihedral8().size() == 8);
  CHECK(quaternion8().size() == 8);
  CHECK(unitriangular(3).size() == 27);
  CHECK(oracle::isomorphic_to_table(*oracle::catalog_group("d4"), dihedral8()));
  CHECK(oracle::isomorphic_to_table(*oracle::catalog_group("q8"), quaternion8()));
  CHECK(oracle::isomorphic_to_table(*oracle::catalog_group("heisenberg27"), unitriangular(3)));
  CHECK_FALSE(oracle::isomorphic_to_table(*oracle::catalog_group("q8"), dihedral8()));
  CHECK_FALSE(oracle::isomorphic_to_table(*oracle::catalog_group("extraspecial27e9"), unitriangular(3)));
}

TEST_CASE("built tables are associative groups with identity 0") {
  for (auto const& name : small_catalog(81)) {
    CAPTURE(name);
    auto g = oracle::catalog_group(name);
    for (Element x = 0; x < g->order(); ++x) {
      CHECK(g->mul(0, x) == x);
      CHECK(g->mul(x, g->inv(x)) == 0);
      for (Element y = 0; y < g->order(); y += 3)
        for (Element z = 0; z < g->order(); z += 5) CHECK(g->mul(g->mul(x, y), z) == g->mul(x, g->mul(y, z)));
    }
    CHECK(oracle::closure(*g, {g->generators().begin(), g->generators().end()}).size() == g->order());
  }
}

TEST_CASE("lower central series and center match the definitions") {
  for (auto const& name : small_catalog(243)) {
    CAPTURE(name);
    auto g = oracle::catalog_group(name);
    auto lcs = lower_central_series(*g);
    auto expect = oracle::lower_central(*g);
    REQUIRE(lcs.size() == expect.size());
    for (std::size_t i = 0; i < lcs.size(); ++i) CHECK(as_set(lcs[i]) == expect[i]);
    std::set<Element> z;
    for (Element x = 0; x < g->order(); ++x) {
      bool central = true;
      for (Element y = 0; y < g->order() && central; ++y) central = g->mul(x, y) == g->mul(y, x);
      if (central) z.insert(x);
    }
    CHECK(as_set(center(*g)) == z);
    CHECK(g->is_abelian() == (z.size() == g->order()));
  }
}

TEST_CASE("power subgroups, products and abelian invariants") {
  auto g = oracle::catalog_group("c9xc3");
  Subgroup whole = whole_group(*g);
  CHECK(power_subgroup(*g, whole, 3).order() == 3);
  CHECK(power_subgroup(*g, whole, 9).order() == 1);
  CHECK(abelian_invariants(*g, whole) == AbelianInvariants{{2, 1}});
  CHECK(section_rank(*g, whole, power_subgroup(*g, whole, 3)) == 2);

  auto e = oracle::catalog_group("c3xc3xc3xc3");
  CHECK(abelian_invariants(*e, whole_group(*e)) == AbelianInvariants{{1, 1, 1, 1}});

  auto w = oracle::catalog_group("c3wrc3");
  auto lcs = lower_central_series(*w);
  CHECK(is_abelian(*w, lcs[1]));
  CHECK(abelian_invariants(*w, lcs[1]) == AbelianInvariants{{1, 1}});
  CHECK(subgroup_product(*w, lcs[2], power_subgroup(*w, whole_group(*w), 3)).order() ==
        oracle::closure(*w, [&] {
          std::vector<Element> seeds(lcs[2].elements());
          for (Element x = 0; x < w->order(); ++x) seeds.push_back(w->power(x, 3));
          return seeds;
        }()).size());
  RankProfile rp = rank_profile(*w, lcs);
  CHECK(rp.nilpotency_class == 3);
  CHECK(rp.ranks == std::vector<unsigned>{1, 1});
}

TEST_CASE("element orders and exponent") {
  auto d4 = oracle::catalog_group("d4");
  std::map<std::size_t, int> hist;
  for (Element x = 0; x < 8; ++x) ++hist[d4->element_order(x)];
  CHECK(hist == std::map<std::size_t, int>{{1, 1}, {2, 5}, {4, 2}});
  auto q8 = oracle::catalog_group("q8");
  hist.clear();
  for (Element x = 0; x < 8; ++x) ++hist[q8->element_order(x)];
  CHECK(hist == std::map<std::size_t, int>{{1, 1}, {2, 1}, {4, 6}});
  CHECK(oracle::catalog_group("heisenberg27")->exponent() == 3);
  CHECK(oracle::catalog_group("extraspecial27e9")->exponent() == 9);
  CHECK(oracle::catalog_group("c27")->log_p(27) == 3);
}

TEST_CASE("inconsistent presentations are rejected") {
  // x1^2 = x2 makes x2 central in <x1>, so (x2, x1) must be trivial.
  PcPresentation pres(2, 3);
  pres.set_power(0, PcWord{{{1, 1}}});
  pres.set_commutator(1, 0, PcWord{{{2, 1}}});
  CHECK_THROWS_AS(build_group(pres), PresentationInconsistency);

  CHECK_THROWS_AS(build_group(parse_pc_file("p 2\ngens 3\npow 1 : x2\ncomm 2 1 : x3\n")),
                  PresentationInconsistency);
}

TEST_CASE("order cap is enforced") {
  PcPresentation pres(3, 6);
  CHECK_THROWS_AS(build_group(pres, {243}), ResourceError);
  CHECK(build_group(pres, {729}).order() == 729);
}

TEST_CASE("commutator conventions agree") {
  auto g = oracle::catalog_group("c3wrc3");
  for (Element x = 0; x < g->order(); x += 4)
    for (Element y = 0; y < g->order(); y += 7) {
      CHECK(group_commutator(*g, x, y) == oracle::commutator(*g, x, y));
      std::array<Element, 3> xs{x, y, y};
      CHECK(group_commutator(*g, xs) ==
            oracle::commutator(*g, oracle::commutator(*g, x, y), y));
    }
}
