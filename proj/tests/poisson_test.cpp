#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbitsym/nilpotent_orbits.hpp"
#include "orbitsym/poisson.hpp"

using namespace orbitsym;

namespace {
LieAlgebraPtr alg(const std::string& name) {
  return chevalley_basis(RootSystem::build(SimpleType::parse(name)));
}

Polynomial random_poly(std::mt19937& rng, int nvars, int max_deg) {
  std::uniform_int_distribution<int> var(0, nvars - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> deg(0, max_deg);
  Polynomial f(nvars);
  for (int t = 0; t < 3; ++t) {
    Polynomial mono = Polynomial::constant(nvars, coeff(rng));
    int d = deg(rng);
    for (int k = 0; k < d; ++k) mono = mono * Polynomial::variable(nvars, var(rng));
    f = f + mono;
  }
  return f;
}
}  // namespace

TEST_CASE("linear functions close to the algebra") {
  auto L = alg("A2");
  PoissonAlgebra pa = PoissonAlgebra::lie_poisson(L);
  for (int i = 0; i < L->dim(); ++i)
    for (int j = 0; j < L->dim(); ++j) {
      Polynomial b = pa.bracket(Polynomial::variable(L->dim(), i), Polynomial::variable(L->dim(), j));
      Polynomial want(L->dim());
      for (const auto& [k, c] : L->table().at(i, j))
        want = want + Polynomial::variable(L->dim(), k) * Rat(c);
      CHECK(b == want);
    }
}

TEST_CASE("constants are central and the degree rule holds on instances") {
  auto L = alg("A1");
  PoissonAlgebra pa = PoissonAlgebra::lie_poisson(L);
  Polynomial f = Polynomial::variable(3, 0) * Polynomial::variable(3, 1);  // grade 4
  Polynomial g = Polynomial::variable(3, 2);                               // grade 2
  CHECK(pa.bracket(f, Polynomial::constant(3, 7)).is_zero());
  Polynomial br = pa.bracket(f, g);
  REQUIRE(!br.is_zero());
  CHECK(br.homogeneous_grade(pa.grades()) == 4);  // 4 + 2 - 2
}

TEST_CASE("jacobi and leibniz for the lie-poisson bracket") {
  auto L = alg("B2");
  PoissonAlgebra pa = PoissonAlgebra::lie_poisson(L);
  std::mt19937 rng(7);
  for (int t = 0; t < 8; ++t) {
    Polynomial f = random_poly(rng, L->dim(), 3);
    Polynomial g = random_poly(rng, L->dim(), 3);
    Polynomial h = random_poly(rng, L->dim(), 2);
    Polynomial jac = pa.bracket(f, pa.bracket(g, h)) + pa.bracket(g, pa.bracket(h, f)) +
                     pa.bracket(h, pa.bracket(f, g));
    CHECK(jac.is_zero());
    Polynomial leib = pa.bracket(f, g * h) - pa.bracket(f, g) * h - g * pa.bracket(f, h);
    CHECK(leib.is_zero());
    Polynomial anti = pa.bracket(f, g) + pa.bracket(g, f);
    CHECK(anti.is_zero());
  }
}

TEST_CASE("grading check reports zero violations") {
  CHECK(grading_check(alg("A1"), 50).pass());
  CHECK(grading_check(alg("G2"), 50).pass());
}

TEST_CASE("symplectic model") {
  for (int n : {1, 2, 3}) {
    CAPTURE(n);
    SymplecticModel model = sp_min_cover_model(n);
    CHECK(model.sp->dim() == n * (2 * n + 1));
    CHECK(heisenberg_check(model));
    CHECK(moment_rank_one(model));
    // equivariance: the moment quadratics act on linear functions by sp
    // matrices that close to the right algebra (transport verified), and
    // coordinate brackets reproduce beta
    Mat a = moment_linear_action(model, 0);
    CHECK(!(a.is_zero()));
  }
}

TEST_CASE("degenerate form fails the heisenberg check") {
  Mat beta(4, 4);
  beta(0, 2) = 1;
  beta(2, 0) = -1;  // rank 2, degenerate
  SymplecticModel m = synthetic_model(beta);
  CHECK_FALSE(heisenberg_check(m));
}

TEST_CASE("semidirect sums and coadjoint transitivity") {
  auto sl2 = alg("A1");
  ModuleFactory f2(sl2);
  SemidirectSum s2 = semidirect_sum(sl2, f2.realize({1}));

  // lambda = 0 gives equality for any mu
  std::vector<Rat> mu{Rat(1), Rat(2), rat(1, 3)};
  auto res = coadjoint_transitivity(s2, mu, {Rat(0), Rat(0)});
  CHECK(res.equal);

  // mu = 0, lambda != 0: strictly larger orbit
  auto res2 = coadjoint_transitivity(s2, {Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(0)});
  CHECK_FALSE(res2.equal);
  CHECK(res2.dim_r_orbit <= res2.dim_s_orbit);

  CHECK(transitivity_trials(s2, 100).pass());

  auto sl3 = alg("A2");
  ModuleFactory f3(sl3);
  CHECK(transitivity_trials(semidirect_sum(sl3, f3.realize({1, 0})), 100).pass());

  auto sp4 = alg("C2");
  ModuleFactory f4(sp4);
  CHECK(transitivity_trials(semidirect_sum(sp4, f4.realize({1, 0})), 100).pass());
}

TEST_CASE("modules with invariants are rejected") {
  auto sl2 = alg("A1");
  ModuleFactory f(sl2);
  CHECK_THROWS_AS(semidirect_sum(sl2, f.realize({0})), std::invalid_argument);
}
