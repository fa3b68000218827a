#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitsym/nilpotent_orbits.hpp"

using namespace orbitsym;

namespace {
LieAlgebraPtr alg(const std::string& name) {
  return chevalley_basis(RootSystem::build(SimpleType::parse(name)));
}
}  // namespace

TEST_CASE("orbit dimensions of root vector orbits") {
  auto g2 = alg("G2");
  CHECK(orbit_dim(g2, orbit_element(g2, OrbitSpec::highest_short_root())) == 8);
  CHECK(orbit_dim(g2, orbit_element(g2, OrbitSpec::highest_long_root())) == 6);

  auto b3 = alg("B3");
  CHECK(orbit_dim(b3, orbit_element(b3, OrbitSpec::highest_long_root())) == 8);

  auto f4 = alg("F4");
  CHECK(orbit_dim(f4, orbit_element(f4, OrbitSpec::highest_long_root())) == 16);
  CHECK(orbit_dim(f4, orbit_element(f4, OrbitSpec::highest_short_root())) == 22);

  CHECK(orbit_dim(g2, g2->zero()) == 0);
}

TEST_CASE("principal orbit of sl3") {
  auto a2 = alg("A2");
  Element e = orbit_element(a2, OrbitSpec::principal());
  CHECK(orbit_dim(a2, e) == 6);
  CHECK(centralizer(a2, e).size() == 2);
}

TEST_CASE("ten dimensional orbit of G2 by search") {
  auto g2 = alg("G2");
  Element e = orbit_element(g2, OrbitSpec::by_dimension(10));
  CHECK(orbit_dim(g2, e) == 10);
  CHECK(centralizer(g2, e).size() == 4);
  // deterministic: the search repeats to the same representative
  Element e2 = orbit_element(g2, OrbitSpec::by_dimension(10));
  CHECK(e.c == e2.c);
  CHECK_THROWS_AS(orbit_element(g2, OrbitSpec::by_dimension(7)), std::invalid_argument);
}

TEST_CASE("partition dimension formulas") {
  CHECK(partition_orbit_dim(SimpleType{'B', 4}, {2, 2, 2, 2, 1}) == 16);
  CHECK(partition_orbit_dim(SimpleType{'D', 4}, {3, 2, 2, 1}) == 16);
  CHECK(partition_orbit_dim(SimpleType{'D', 3}, {3, 1, 1, 1}) == 8);
  CHECK(partition_orbit_dim(SimpleType{'B', 3}, {3, 1, 1, 1, 1}) == 10);
  CHECK(partition_orbit_dim(SimpleType{'B', 2}, {3, 1, 1}) == 6);
  CHECK(partition_orbit_dim(SimpleType{'C', 2}, {2, 2}) == 6);
  CHECK(partition_orbit_dim(SimpleType{'C', 2}, {2, 1, 1}) == 4);
  CHECK(partition_orbit_dim(SimpleType{'A', 2}, {3}) == 6);
  CHECK(partition_orbit_dim(SimpleType{'D', 4}, {3, 1, 1, 1, 1, 1}) == 12);

  CHECK_THROWS_AS(partition_orbit_dim(SimpleType{'B', 4}, {2, 2, 2, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(partition_orbit_dim(SimpleType{'D', 4}, {2, 2, 2, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(partition_orbit_dim(SimpleType{'C', 2}, {3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(partition_orbit_dim(SimpleType{'G', 2}, {3, 1}), std::invalid_argument);
}

TEST_CASE("jordan type representatives match both oracles") {
  struct Case {
    std::string type;
    std::vector<int> partition;
    int dim;
  };
  for (const auto& c : {Case{"B4", {2, 2, 2, 2, 1}, 16}, Case{"D4", {3, 2, 2, 1}, 16},
                        Case{"D3", {3, 1, 1, 1}, 8}, Case{"B3", {3, 1, 1, 1, 1}, 10},
                        Case{"B2", {3, 1, 1}, 6}, Case{"C2", {2, 2}, 6}}) {
    CAPTURE(c.type);
    auto L = alg(c.type);
    Element e = orbit_element(L, OrbitSpec::jordan(c.partition));
    CHECK(orbit_dim(L, e) == c.dim);
    CHECK(partition_orbit_dim(SimpleType::parse(c.type), c.partition) == c.dim);
    // the defining matrix really has the requested block sizes
    DefiningRep rep = defining_rep(L);
    CHECK(jordan_type(rep.matrix_of(e)) == c.partition);
  }
}

TEST_CASE("gl-orbit dimension cross check") {
  // rank of the commutator map on all of gl(N) equals N^2 - sum of squared
  // dual-partition parts; an oracle independent of the so/sp structure.
  auto L = alg("B2");
  Element e = orbit_element(L, OrbitSpec::jordan({3, 1, 1}));
  DefiningRep rep = defining_rep(L);
  Mat me = rep.matrix_of(e);
  int N = rep.n;
  Mat commutator(static_cast<size_t>(N) * N, static_cast<size_t>(N) * N);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      // image of E_ab under X -> [me, X]
      for (int i = 0; i < N; ++i) {
        if (me(i, a) != 0) commutator(static_cast<size_t>(i) * N + b, static_cast<size_t>(a) * N + b) += me(i, a);
        if (me(b, i) != 0) commutator(static_cast<size_t>(a) * N + i, static_cast<size_t>(a) * N + b) -= me(b, i);
      }
    }
  // dual partition of (3,1,1) is (3,1,1): 9+1+1 = 11; 25 - 11 = 14
  CHECK(rank(commutator) == 14);
}

TEST_CASE("jacobson-morozov") {
  auto a1 = alg("A1");
  Element e = a1->root_vector(IVec{1});
  Sl2Triple t = jacobson_morozov(a1, e);
  CHECK(t.h.c == a1->cartan_element(0).c);
  CHECK(t.f.c == a1->root_vector(IVec{-1}).c);

  auto a2 = alg("A2");
  Sl2Triple tp = jacobson_morozov(a2, orbit_element(a2, OrbitSpec::principal()));
  CHECK(kernel_basis(a2->ad_matrix(tp.h)).size() == 2);

  auto g2 = alg("G2");
  Sl2Triple ts = jacobson_morozov(g2, orbit_element(g2, OrbitSpec::highest_short_root()));
  CHECK((g2->bracket(ts.h, ts.e) - ts.e * Rat(2)).is_zero());
  CHECK((g2->bracket(ts.e, ts.f) - ts.h).is_zero());

  CHECK_THROWS_AS(jacobson_morozov(a1, a1->zero()), std::invalid_argument);
  CHECK_THROWS_AS(jacobson_morozov(a1, a1->cartan_element(0)), std::invalid_argument);
}

TEST_CASE("centralizers") {
  auto g2 = alg("G2");
  CHECK(centralizer(g2, g2->zero()).size() == 14);
  CHECK(centralizer(g2, orbit_element(g2, OrbitSpec::highest_short_root())).size() == 6);
}

TEST_CASE("gradings") {
  auto a1 = alg("A1");
  Grading g = h_grading(a1, a1->cartan_element(0));
  CHECK(g.dim_at(2) == 1);
  CHECK(g.dim_at(0) == 1);
  CHECK(g.dim_at(-2) == 1);
  CHECK(g.total() == 3);

  // defining module of sl3 under the principal triple: one line each in
  // degrees 2, 0, -2
  auto a2 = alg("A2");
  Sl2Triple t = jacobson_morozov(a2, orbit_element(a2, OrbitSpec::principal()));
  ModuleFactory f(a2);
  auto def = f.realize({1, 0});
  Grading gm = h_grading(*def, t.h);
  CHECK(gm.dim_at(2) == 1);
  CHECK(gm.dim_at(0) == 1);
  CHECK(gm.dim_at(-2) == 1);

  // non-semisimple input: eigenvalues cannot fill the space
  CHECK_THROWS_AS(h_grading(a1, a1->root_vector(IVec{1})), std::invalid_argument);
}

TEST_CASE("bracket respects the grading") {
  auto g2 = alg("G2");
  Sl2Triple t = jacobson_morozov(g2, orbit_element(g2, OrbitSpec::by_dimension(10)));
  Grading g = h_grading(g2, t.h);
  Mat adh = g2->ad_matrix(t.h);
  for (const auto& [ka, basa] : g.eigenspaces)
    for (const auto& [kb, basb] : g.eigenspaces) {
      Element x = g2->element(basa[0]);
      Element y = g2->element(basb[0]);
      Element br = g2->bracket(x, y);
      if (br.is_zero()) continue;
      std::vector<Rat> shifted = adh.apply(br.c);
      for (int i = 0; i < g2->dim(); ++i) CHECK(shifted[i] == Rat(ka + kb) * br.c[i]);
    }
}

TEST_CASE("triple structure properties") {
  // orbit dimension is even; summand count equals the centralizer dimension
  for (const std::string name : {"A2", "B2", "G2"}) {
    CAPTURE(name);
    auto L = alg(name);
    auto rs = L->root_system();
    for (const OrbitSpec& spec :
         {OrbitSpec::highest_long_root(), OrbitSpec::highest_short_root(), OrbitSpec::principal()}) {
      Element e = orbit_element(L, spec);
      int d = orbit_dim(L, e);
      CHECK(d % 2 == 0);
      Sl2Triple t = jacobson_morozov(L, e);
      Grading g = h_grading(L, t.h);
      size_t cent = centralizer(L, e).size();
      // centralizer counts the irreducible summands under the triple, one
      // highest weight line in degree 0 or 1 each; it dominates ker ad(h)
      CHECK(static_cast<int>(cent) == g.dim_at(0) + g.dim_at(1));
      CHECK(cent >= kernel_basis(L->ad_matrix(t.h)).size());
    }
  }
}
