#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "orbitsym/chevalley.hpp"

using namespace orbitsym;

namespace {

LieAlgebraPtr alg(const std::string& name) {
  return chevalley_basis(RootSystem::build(SimpleType::parse(name)));
}

void check_jacobi_exhaustive(const LieAlgebraPtr& L) {
  int d = L->dim();
  for (int i = 0; i < d; ++i) {
    Element bi = L->basis_element(i);
    for (int j = i + 1; j < d; ++j) {
      Element bj = L->basis_element(j);
      Element bij = L->bracket(bi, bj);
      for (int k = j + 1; k < d; ++k) {
        Element bk = L->basis_element(k);
        Element s = L->bracket(bi, L->bracket(bj, bk)) + L->bracket(bj, L->bracket(bk, bi)) +
                    L->bracket(bk, bij);
        if (!s.is_zero()) {
          CAPTURE(i);
          CAPTURE(j);
          CAPTURE(k);
          REQUIRE(s.is_zero());
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("sl2 relations") {
  auto L = alg("A1");
  CHECK(L->dim() == 3);
  Element e = L->root_vector(IVec{1});
  Element f = L->root_vector(IVec{-1});
  Element h = L->cartan_element(0);
  CHECK(L->bracket(e, f).c == h.c);
  CHECK(L->bracket(h, e).c == (e * Rat(2)).c);
  CHECK(L->bracket(h, f).c == (f * Rat(-2)).c);
  CHECK(L->bracket(e, e).is_zero());
}

TEST_CASE("dimensions") {
  CHECK(alg("G2")->dim() == 14);
  CHECK(alg("F4")->dim() == 52);
  CHECK(alg("E6")->dim() == 78);
  CHECK(alg("B3")->dim() == 21);
}

TEST_CASE("jacobi identity on all basis triples") {
  for (const std::string name : {"A2", "B2", "C3", "G2"}) {
    CAPTURE(name);
    check_jacobi_exhaustive(alg(name));
  }
}

TEST_CASE("structure constants have the root-string magnitude") {
  for (const std::string name : {"G2", "F4", "B3"}) {
    CAPTURE(name);
    auto L = alg(name);
    auto rs = L->root_system();
    for (const auto& a : rs->roots())
      for (const auto& b : rs->roots()) {
        IVec sum(a.size());
        for (size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
        if (!rs->is_root(sum)) continue;
        // p = length of the a-string below b
        int p = 0;
        IVec cur = b;
        while (true) {
          for (size_t i = 0; i < cur.size(); ++i) cur[i] -= a[i];
          if (!rs->is_root(cur)) break;
          ++p;
        }
        CHECK(std::abs(L->structure_n(a, b)) == p + 1);
        CHECK(L->structure_n(a, b) == -L->structure_n(b, a));
      }
  }
}

TEST_CASE("cartan brackets and coroots") {
  auto L = alg("G2");
  CHECK(L->bracket(L->cartan_element(0), L->cartan_element(1)).is_zero());
  auto rs = L->root_system();
  IVec theta = rs->highest_root();
  IVec neg(theta.size());
  for (size_t i = 0; i < theta.size(); ++i) neg[i] = -theta[i];
  Element h = L->bracket(L->root_vector(theta), L->root_vector(neg));
  IVec u = rs->coroot(theta);
  for (int i = 0; i < rs->rank(); ++i) CHECK(h.c[i] == Rat(u[i]));
  for (int i = rs->rank(); i < L->dim(); ++i) CHECK(h.c[i] == 0);
}

TEST_CASE("ad of a root vector is nilpotent") {
  auto L = alg("C3");
  auto rs = L->root_system();
  for (size_t k = 0; k < rs->num_roots(); k += 5) {
    Mat m = L->ad_matrix(L->root_vector(rs->roots()[k]));
    Mat p = m;
    for (int i = 0; i < 8; ++i) p = p * m;
    CHECK(p.is_zero());
  }
}

TEST_CASE("killing form") {
  CHECK(alg("G2")->killing_nondegenerate());
  CHECK(alg("F4")->killing_nondegenerate());
  auto L = alg("A2");
  CHECK(killing_nondegenerate(L->table()));
  CHECK_FALSE(killing_nondegenerate(direct_sum_with_abelian(L->table(), 1)));
}

TEST_CASE("killing form is ad-invariant on samples") {
  auto L = alg("B3");
  Mat kappa = L->table().killing_matrix();
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_element = [&]() {
    std::vector<Rat> c(L->dim());
    for (auto& x : c) x = coeff(rng);
    return L->element(std::move(c));
  };
  auto pair = [&](const Element& a, const Element& b) {
    Rat v = 0;
    for (int i = 0; i < L->dim(); ++i)
      for (int j = 0; j < L->dim(); ++j)
        if (a.c[i] != 0 && b.c[j] != 0) v += a.c[i] * b.c[j] * kappa(i, j);
    return v;
  };
  for (int trial = 0; trial < 10; ++trial) {
    Element x = random_element(), y = random_element(), z = random_element();
    CHECK(pair(L->bracket(x, y), z) + pair(y, L->bracket(x, z)) == 0);
  }
}

TEST_CASE("structure constant cache round trip is bit exact") {
  auto L = alg("G2");
  std::ostringstream first;
  L->save_cache(first);
  std::istringstream in(first.str());
  auto L2 = LieAlgebra::load_cache(L->root_system(), in);
  REQUIRE(L2->dim() == L->dim());
  for (int i = 0; i < L->dim(); ++i)
    for (int j = 0; j < L->dim(); ++j) CHECK(L->table().at(i, j) == L2->table().at(i, j));
  std::ostringstream second;
  L2->save_cache(second);
  CHECK(first.str() == second.str());

  auto B3 = RootSystem::build(SimpleType{'B', 3});
  std::istringstream wrong(first.str());
  CHECK_THROWS_AS(LieAlgebra::load_cache(B3, wrong), std::invalid_argument);
}

TEST_CASE("defining representations verify against the structure table") {
  for (const std::string name : {"A2", "A3", "B2", "B3", "C2", "C3", "D3", "D4", "B4"}) {
    CAPTURE(name);
    auto L = alg(name);
    DefiningRep rep = defining_rep(L);
    CHECK(rep.action.size() == static_cast<size_t>(L->dim()));
    // traceless in the defining representation
    for (const auto& m : rep.action) {
      Rat tr = 0;
      for (size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
      CHECK(tr == 0);
    }
  }
  CHECK_THROWS_AS(defining_rep(alg("G2")), std::invalid_argument);
}

TEST_CASE("jordan types") {
  auto L = alg("A2");
  DefiningRep rep = defining_rep(L);
  // principal nilpotent: sum of the simple root vectors has one Jordan block
  Element e = L->root_vector(IVec{1, 0}) + L->root_vector(IVec{0, 1});
  CHECK(jordan_type(rep.matrix_of(e)) == std::vector<int>{3});
  Element single = L->root_vector(IVec{1, 0});
  CHECK(jordan_type(rep.matrix_of(single)) == std::vector<int>{2, 1});
  CHECK(jordan_type(rep.matrix_of(L->zero())) == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(jordan_type(rep.matrix_of(L->cartan_element(0))), std::invalid_argument);
}
