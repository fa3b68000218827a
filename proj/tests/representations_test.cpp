#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitsym/representations.hpp"

using namespace orbitsym;

namespace {

RootSystemPtr rs(const std::string& name) { return RootSystem::build(SimpleType::parse(name)); }
LieAlgebraPtr alg(const std::string& name) { return chevalley_basis(rs(name)); }

void check_commutators(const ModuleRepPtr& m, bool full) {
  auto L = m->algebra;
  int r = L->rank();
  std::vector<int> picks;
  if (full) {
    for (int i = 0; i < L->dim(); ++i) picks.push_back(i);
  } else {
    for (int i = 0; i < r; ++i) picks.push_back(i);  // h_i
    for (size_t k = 0; k < L->root_system()->num_positive(); ++k) {
      if (ivec_sum(L->root_system()->roots()[k]) != 1) continue;
      picks.push_back(r + static_cast<int>(k));
      picks.push_back(r + static_cast<int>(k + L->root_system()->num_positive()));
    }
  }
  for (size_t a = 0; a < picks.size(); ++a)
    for (size_t b = a + 1; b < picks.size(); ++b) {
      int i = picks[a], j = picks[b];
      Mat lhs = m->action[i] * m->action[j] - m->action[j] * m->action[i];
      Mat want(m->dim, m->dim);
      for (const auto& [k, c] : L->table().at(i, j)) want = want + m->action[k] * Rat(c);
      CHECK((lhs - want).is_zero());
    }
}

}  // namespace

TEST_CASE("weyl dimension formula") {
  CHECK(weyl_dim(rs("G2"), {1, 0}) == 7);
  CHECK(weyl_dim(rs("G2"), {0, 1}) == 14);
  CHECK(weyl_dim(rs("F4"), {0, 0, 0, 1}) == 26);
  CHECK(weyl_dim(rs("F4"), {1, 0, 0, 0}) == 52);
  CHECK(weyl_dim(rs("C2"), {0, 1}) == 5);
  CHECK(weyl_dim(rs("A2"), {1, 1}) == 8);
  CHECK(weyl_dim(rs("B4"), {0, 0, 0, 1}) == 16);
  CHECK(weyl_dim(rs("A5"), {0, 1, 0, 0, 0}) == 15);
  CHECK(weyl_dim(rs("E6"), {1, 0, 0, 0, 0, 0}) == 27);
  CHECK(weyl_dim(rs("E6"), {0, 1, 0, 0, 0, 0}) == 78);
  CHECK(weyl_dim(rs("D4"), {1, 0, 0, 0}) == 8);
  CHECK(weyl_dim(rs("D4"), {0, 0, 1, 0}) == 8);
  CHECK(weyl_dim(rs("D4"), {0, 0, 0, 1}) == 8);
  CHECK_THROWS_AS(weyl_dim(rs("A2"), {-1, 0}), std::invalid_argument);
}

TEST_CASE("freudenthal multiplicities") {
  auto a2 = freudenthal_character(rs("A2"), {1, 1});
  CHECK(a2.total() == 8);
  CHECK(a2.mult({0, 0}) == 2);

  auto a1 = freudenthal_character(rs("A1"), {2});
  CHECK(a1.total() == 3);
  CHECK(a1.mult({2}) == 1);
  CHECK(a1.mult({0}) == 1);
  CHECK(a1.mult({-2}) == 1);

  auto g2 = freudenthal_character(rs("G2"), {0, 1});
  CHECK(g2.total() == 14);
  CHECK(g2.mult({0, 0}) == 2);

  for (const std::string name : {"B3", "C3", "D4", "F4"}) {
    auto r = rs(name);
    for (int node = 0; node < r->rank(); ++node) {
      Weight w(r->rank(), 0);
      w[node] = 1;
      CHECK(freudenthal_character(r, w).total() == weyl_dim(r, w));
    }
  }
}

TEST_CASE("characters are weyl invariant") {
  auto r = rs("B3");
  auto c = freudenthal_character(r, {1, 0, 1});
  for (const auto& [w, m] : c.mults)
    for (int i = 0; i < r->rank(); ++i) CHECK(c.mult(r->reflect_weight(w, i)) == m);
}

TEST_CASE("adjoint character agrees with freudenthal at the highest root") {
  for (const std::string name : {"A2", "B3", "G2"}) {
    auto r = rs(name);
    CHECK(adjoint_character(r) == freudenthal_character(r, r->weight_of_root(r->highest_root())));
  }
}

TEST_CASE("peel decomposition") {
  auto r = rs("A2");
  auto v = freudenthal_character(r, {1, 0});
  auto vdual = freudenthal_character(r, {0, 1});
  auto prod = tensor_character(v, vdual);
  auto parts = peel_decompose(prod);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == std::pair<Weight, long>{{1, 1}, 1});
  CHECK(parts[1] == std::pair<Weight, long>{{0, 0}, 1});

  auto ad = adjoint_character(rs("F4"));
  auto adparts = peel_decompose(ad);
  REQUIRE(adparts.size() == 1);
  CHECK(adparts[0] == std::pair<Weight, long>{{1, 0, 0, 0}, 1});

  // broken input: strip one weight off a genuine character
  Character broken = prod;
  broken.add({1, 1}, -1);
  CHECK_THROWS_AS(peel_decompose(broken), std::invalid_argument);
}

TEST_CASE("peel round trip over random sums") {
  auto r = rs("C2");
  std::vector<Weight> hws = {{1, 0}, {0, 1}, {2, 0}, {1, 1}};
  Character sum{r, {}};
  std::vector<std::pair<Weight, long>> want;
  for (size_t k = 0; k < hws.size(); ++k) {
    long mult = static_cast<long>(k % 2 + 1);
    Character c = freudenthal_character(r, hws[k]);
    sum.subtract(c, -mult);
    want.emplace_back(hws[k], mult);
  }
  auto got = peel_decompose(sum);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("branching through foldings") {
  // so(7) restricted to G2
  auto b3 = rs("B3");
  auto parts = peel_decompose(branch_character(adjoint_character(b3), restriction_of(fold_so7_to_g2())));
  std::sort(parts.begin(), parts.end());
  CHECK(parts == std::vector<std::pair<Weight, long>>{{{0, 1}, 1}, {{1, 0}, 1}});

  // E6 restricted to F4
  auto e6 = rs("E6");
  auto f4fold = fold(e6, {5, 1, 4, 3, 2, 0});
  auto fparts = peel_decompose(branch_character(adjoint_character(e6), restriction_of(f4fold)));
  std::sort(fparts.begin(), fparts.end());
  CHECK(fparts ==
        std::vector<std::pair<Weight, long>>{{{0, 0, 0, 1}, 1}, {{1, 0, 0, 0}, 1}});

  // so(8) under triality restricted to G2: adjoint plus two copies of the 7
  auto d4 = rs("D4");
  auto gfold = fold(d4, {2, 1, 3, 0});
  auto gparts = peel_decompose(branch_character(adjoint_character(d4), restriction_of(gfold)));
  std::sort(gparts.begin(), gparts.end());
  CHECK(gparts == std::vector<std::pair<Weight, long>>{{{0, 1}, 1}, {{1, 0}, 2}});
}

TEST_CASE("branching to the long-root subsystem of sp(4)") {
  auto c2 = rs("C2");
  auto sub = long_root_subsystem(c2);
  REQUIRE(sub.sub->components().size() == 2);
  auto parts = peel_decompose(branch_character(adjoint_character(c2), restriction_of(sub)));
  std::sort(parts.begin(), parts.end());
  CHECK(parts == std::vector<std::pair<Weight, long>>{{{0, 2}, 1}, {{1, 1}, 1}, {{2, 0}, 1}});
}

TEST_CASE("branching preserves total dimension") {
  auto b4 = rs("B4");
  auto sub = long_root_subsystem(b4);
  for (const Weight hw : std::vector<Weight>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}) {
    auto c = freudenthal_character(b4, hw);
    CHECK(branch_character(c, restriction_of(sub)).total() == c.total());
  }
}

TEST_CASE("defining and adjoint modules") {
  auto L = alg("C2");
  auto def = defining_module(L);
  CHECK(def->dim == 4);
  CHECK(def->highest == Weight{1, 0});
  check_commutators(def, true);

  auto ad = adjoint_rep(L);
  CHECK(ad->dim == 10);
  CHECK(ad->highest == Weight{2, 0});
  check_commutators(ad, true);
}

TEST_CASE("spin modules") {
  auto b3 = alg("B3");
  auto spin = spin_module(b3);
  CHECK(spin->dim == 8);
  CHECK(spin->highest == Weight{0, 0, 1});
  CHECK(character_of(*spin) == freudenthal_character(b3->root_system(), {0, 0, 1}));
  check_commutators(spin, true);

  auto d4 = alg("D4");
  auto [sp, sm] = half_spin_modules(d4);
  CHECK(sp->dim == 8);
  CHECK(sm->dim == 8);
  CHECK(sp->highest == Weight{0, 0, 0, 1});
  CHECK(sm->highest == Weight{0, 0, 1, 0});
  check_commutators(sp, true);
  check_commutators(sm, true);
}

TEST_CASE("realize small modules") {
  ModuleFactory f(alg("A1"));
  auto two = f.realize({1});
  CHECK(two->dim == 2);

  ModuleFactory c2(alg("C2"));
  auto five = c2.realize({0, 1});
  CHECK(five->dim == 5);
  CHECK(character_of(*five) == freudenthal_character(c2.algebra()->root_system(), {0, 1}));
  check_commutators(five, true);
}

TEST_CASE("realize the 7 of G2 from adjoint tensor powers") {
  ModuleFactory f(alg("G2"));
  auto seven = f.realize({1, 0});
  REQUIRE(seven->dim == 7);
  CHECK(character_of(*seven) == freudenthal_character(f.algebra()->root_system(), {1, 0}));
  check_commutators(seven, true);
}

TEST_CASE("realize the 26 of F4") {
  ModuleFactory f(alg("F4"));
  auto m = f.realize({0, 0, 0, 1});
  REQUIRE(m->dim == 26);
  CHECK(character_of(*m) == freudenthal_character(f.algebra()->root_system(), {0, 0, 0, 1}));
  check_commutators(m, false);
}

TEST_CASE("duals") {
  ModuleFactory f(alg("A2"));
  auto v = f.realize({1, 0});
  auto vd = dual_module(v);
  CHECK(vd->highest == Weight{0, 1});
  CHECK(character_of(*vd) == freudenthal_character(f.algebra()->root_system(), {0, 1}));

  ModuleFactory g(alg("G2"));
  auto seven = g.realize({1, 0});
  CHECK(dual_module(seven)->highest == Weight{1, 0});
  CHECK(character_of(*dual_module(seven)) == character_of(*seven));

  auto triv = f.realize({0, 0});
  CHECK(dual_module(triv)->dim == 1);
  CHECK(dual_module(triv)->highest == Weight{0, 0});
}

TEST_CASE("factory validation") {
  ModuleFactory f(alg("A2"), 5);
  CHECK_THROWS_AS(f.realize({-1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(f.realize({2, 0}), std::invalid_argument);  // dim 6 > bound 5
}
