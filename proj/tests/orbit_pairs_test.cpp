#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "orbitsym/orbit_pairs.hpp"

using namespace orbitsym;

namespace {
LieAlgebraPtr alg(const std::string& name) {
  return chevalley_basis(RootSystem::build(SimpleType::parse(name)));
}

using WeightList = std::vector<std::pair<Weight, long>>;

WeightList sorted(WeightList v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("catalog dimension identities") {
  for (const auto& rec : catalog()) {
    CAPTURE(rec.label);
    auto gs = RootSystem::build(rec.g);
    auto gps = RootSystem::build(rec.g_prime);
    long total = gs->rank() + static_cast<long>(gs->num_roots());
    for (const auto& [w, m] : rec.v_modules) total += m * weyl_dim(gs, w);
    CHECK(total == gps->rank() + static_cast<long>(gps->num_roots()));
  }
}

TEST_CASE("eigenspace multiplicities at degree two") {
  auto g2 = alg("G2");
  ModuleFactory f(g2);
  auto seven = f.realize({1, 0});

  OrbitContext short_ctx = make_orbit_context(g2, OrbitSpec::highest_short_root());
  CHECK(eigenspace_multiplicity(short_ctx, *seven, 2) == 1);

  OrbitContext ten_ctx = make_orbit_context(g2, OrbitSpec::by_dimension(10));
  CHECK(eigenspace_multiplicity(ten_ctx, *seven, 2) == 2);

  CHECK(eigenspace_multiplicity(short_ctx, *f.realize({0, 0}), 2) == 0);
}

TEST_CASE("eigenspace totals and duality") {
  auto g2 = alg("G2");
  ModuleFactory f(g2);
  auto seven = f.realize({1, 0});
  OrbitContext ctx = make_orbit_context(g2, OrbitSpec::highest_short_root());

  // sum over all degrees equals the dimension of the invariants of the dual
  Mat stacked(ctx.cent.size() * 7, 7);
  for (size_t m = 0; m < ctx.cent.size(); ++m) {
    Mat a = seven->action_of(ctx.cent[m]).transpose() * Rat(-1);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) stacked(m * 7 + i, j) = a(i, j);
  }
  int invariants = static_cast<int>(kernel_basis(stacked).size());
  int total = 0;
  for (int k = -12; k <= 12; ++k) total += eigenspace_multiplicity(ctx, *seven, k);
  CHECK(total == invariants);

  // the realization is self-dual, so multiplicities do not depend on
  // which of the two isomorphic realizations is used
  auto dual = dual_module(seven);
  for (int k : {-2, -1, 0, 1, 2})
    CHECK(eigenspace_multiplicity(ctx, *seven, k) == eigenspace_multiplicity(ctx, *dual, k));

  // swapping e with f flips the grading: invariants of the opposite
  // centralizer at -k match those of the original at k
  OrbitContext opp;
  opp.L = ctx.L;
  opp.e = ctx.triple.f;
  opp.triple = Sl2Triple{ctx.triple.h * Rat(-1), ctx.triple.f, ctx.triple.e};
  opp.cent = centralizer(ctx.L, ctx.triple.f);
  for (int k : {-2, -1, 0, 1, 2})
    CHECK(eigenspace_multiplicity(ctx, *seven, k) == eigenspace_multiplicity(opp, *seven, k));
}

TEST_CASE("degree-2 scan for the principal orbit of sl3") {
  auto a2 = alg("A2");
  ModuleFactory f(a2);
  OrbitContext ctx = make_orbit_context(a2, OrbitSpec::principal());
  auto scan = graded_multiplicities(f, ctx, kDefaultScanBound, 2);
  CHECK(sorted(scan) == WeightList{{{0, 1}, 1}, {{1, 0}, 1}});

  // degree 1 is empty here
  CHECK(graded_multiplicities(f, ctx, kDefaultScanBound, 1).empty());
}

TEST_CASE("degree-1 generators appear only for the minimal symplectic orbit") {
  auto c2 = alg("C2");
  ModuleFactory f(c2);
  OrbitContext minimal = make_orbit_context(c2, OrbitSpec::highest_long_root());
  auto r2 = graded_multiplicities(f, minimal, kDefaultScanBound, 2);
  CHECK(r2.empty());  // nothing beyond the adjoint
  auto r1 = graded_multiplicities(f, minimal, kDefaultScanBound, 1);
  CHECK(sorted(r1) == WeightList{{{1, 0}, 1}});

  auto g2 = alg("G2");
  ModuleFactory fg(g2);
  OrbitContext short_ctx = make_orbit_context(g2, OrbitSpec::highest_short_root());
  CHECK(graded_multiplicities(fg, short_ctx, kDefaultScanBound, 1).empty());
}

TEST_CASE("scan output is independent of the candidate order") {
  auto a2 = alg("A2");
  ModuleFactory f(a2);
  OrbitContext ctx = make_orbit_context(a2, OrbitSpec::principal());
  auto forward = graded_multiplicities(f, ctx, 30, 2);
  // recompute per candidate in reverse and compare as sets
  WeightList reversed;
  std::vector<Weight> cands;
  for (const auto& [w, m] : forward) cands.push_back(w);
  for (auto it = cands.rbegin(); it != cands.rend(); ++it)
    reversed.emplace_back(*it, eigenspace_multiplicity(ctx, *f.realize(*it), 2));
  CHECK(sorted(reversed) == sorted(forward));
}

TEST_CASE("verify row 1") {
  Report r = verify_pair(catalog_record(1));
  CAPTURE(r.to_text());
  CHECK(r.pass());
}

TEST_CASE("verify row 3 at n=2") {
  Report r = verify_pair(catalog_record(3, 2));
  CAPTURE(r.to_text());
  CHECK(r.pass());
}

TEST_CASE("verify row 5") {
  Report r = verify_pair(catalog_record(5));
  CAPTURE(r.to_text());
  CHECK(r.pass());
}

TEST_CASE("normality obstruction") {
  auto g2 = alg("G2");
  ModuleFactory f(g2);
  OrbitContext ctx = make_orbit_context(g2, OrbitSpec::highest_short_root());
  auto obstruction = normality_obstruction(f, ctx);
  CHECK(sorted(obstruction) == WeightList{{{1, 0}, 1}});  // closure not normal

  auto a1 = alg("A1");
  ModuleFactory fa(a1);
  OrbitContext ctx1 = make_orbit_context(a1, OrbitSpec::highest_long_root());
  CHECK(normality_obstruction(fa, ctx1).empty());  // inconclusive

  auto b3 = alg("B3");
  ModuleFactory fb(b3);
  OrbitContext ctx3 = make_orbit_context(b3, OrbitSpec::highest_long_root());
  CHECK(normality_obstruction(fb, ctx3).empty());
}

TEST_CASE("rank rule over the catalog") {
  Report r = rank_rule_check(catalog());
  CAPTURE(r.to_text());
  CHECK(r.pass());
  CHECK(r.checks.size() == 12);
}

TEST_CASE("degenerate single-member chain passes") {
  ChainSpec solo;
  solo.label = "chain-degenerate";
  solo.members = {{SimpleType{'A', 1}, OrbitSpec::highest_long_root()}};
  Report r = verify_chain(solo);
  CAPTURE(r.to_text());
  CHECK(r.pass());
}

TEST_CASE("chain of G2 inside so(7) inside so(8)") {
  Report r = verify_chain(chain_catalog()[1]);
  CAPTURE(r.to_text());
  CHECK(r.pass());
}
