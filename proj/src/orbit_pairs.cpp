#include "orbitsym/orbit_pairs.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace orbitsym {

namespace {

std::vector<int> iota_swap(int n, int a, int b) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::swap(p[a], p[b]);
  return p;
}

WeightRestriction b4_in_f4() {
  auto f4 = RootSystem::build(SimpleType{'F', 4});
  Subsystem d4 = long_root_subsystem(f4);
  std::vector<IVec> gens = d4.simple_roots;
  gens.push_back(IVec{0, 0, 0, 1});
  Subsystem b4 = closed_subsystem(f4, gens);
  if (b4.sub->type() != SimpleType{'B', 4}) throw std::logic_error("expected B4 inside F4");
  return restriction_of(b4);
}

std::vector<int> jordan_short_root(const SimpleType& t) {
  // Jordan type of a short-root vector in the defining representation.
  std::vector<int> p;
  if (t.family == 'B') {
    p = {3};
    p.insert(p.end(), static_cast<size_t>(2 * t.rank - 2), 1);
  } else if (t.family == 'C') {
    p = {2, 2};
    p.insert(p.end(), static_cast<size_t>(2 * t.rank - 4), 1);
  }
  return p;
}

std::optional<std::vector<int>> orbit_partition(const SimpleType& t, const OrbitSpec& spec) {
  switch (spec.kind) {
    case OrbitSpec::Kind::JordanType:
      return spec.partition;
    case OrbitSpec::Kind::HighestShortRoot: {
      auto p = jordan_short_root(t);
      if (!p.empty()) return p;
      return std::nullopt;
    }
    case OrbitSpec::Kind::HighestLongRoot: {
      // minimal orbits of the classical families
      switch (t.family) {
        case 'A': {
          std::vector<int> p{2};
          p.insert(p.end(), static_cast<size_t>(t.rank - 1), 1);
          return p;
        }
        case 'B':
        case 'D': {
          int n = t.family == 'B' ? 2 * t.rank + 1 : 2 * t.rank;
          std::vector<int> p{2, 2};
          p.insert(p.end(), static_cast<size_t>(n - 4), 1);
          return p;
        }
        case 'C': {
          std::vector<int> p{2};
          p.insert(p.end(), static_cast<size_t>(2 * t.rank - 2), 1);
          return p;
        }
        default:
          return std::nullopt;
      }
    }
    case OrbitSpec::Kind::Principal:
      if (t.family == 'A') return std::vector<int>{t.rank + 1};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace

PairRecord catalog_record(int row, int n) {
  PairRecord r;
  r.row = row;
  auto set_label = [&](bool family) {
    r.label = "row-" + std::to_string(row) + (family ? "(n=" + std::to_string(n) + ")" : "");
  };
  switch (row) {
    case 1: {
      set_label(false);
      r.g = SimpleType{'G', 2};
      r.g_prime = SimpleType{'B', 3};
      r.cover = {OrbitSpec::highest_short_root(), 1};
      r.v_modules = {{{1, 0}, 1}};
      r.embedding = restriction_of(fold_so7_to_g2());
      break;
    }
    case 2: {
      if (n < 2) throw std::invalid_argument("row 2 needs n >= 2");
      set_label(true);
      r.g = SimpleType{'B', n};
      r.g_prime = SimpleType{'D', n + 1};
      r.cover = {OrbitSpec::highest_short_root(), 2};
      Weight v(n, 0);
      v[0] = 1;
      r.v_modules = {{v, 1}};
      r.embedding = restriction_of(fold(RootSystem::build(r.g_prime), iota_swap(n + 1, n - 1, n)));
      break;
    }
    case 3: {
      if (n < 2) throw std::invalid_argument("row 3 needs n >= 2");
      set_label(true);
      r.g = SimpleType{'C', n};
      r.g_prime = SimpleType{'A', 2 * n - 1};
      r.cover = {OrbitSpec::highest_short_root(), 2};
      Weight v(n, 0);
      v[1] = 1;
      r.v_modules = {{v, 1}};
      std::vector<int> flip(2 * n - 1);
      for (int i = 0; i < 2 * n - 1; ++i) flip[i] = 2 * n - 2 - i;
      r.embedding = restriction_of(fold(RootSystem::build(r.g_prime), flip));
      break;
    }
    case 4: {
      set_label(false);
      r.g = SimpleType{'F', 4};
      r.g_prime = SimpleType{'E', 6};
      r.cover = {OrbitSpec::highest_short_root(), 2};
      r.v_modules = {{{0, 0, 0, 1}, 1}};
      r.embedding = restriction_of(fold(RootSystem::build(r.g_prime), {5, 1, 4, 3, 2, 0}));
      break;
    }
    case 5: {
      set_label(false);
      r.g = SimpleType{'A', 2};
      r.g_prime = SimpleType{'G', 2};
      r.cover = {OrbitSpec::principal(), 3};
      r.v_modules = {{{1, 0}, 1}, {{0, 1}, 1}};
      r.embedding = restriction_of(long_root_subsystem(RootSystem::build(r.g_prime)));
      break;
    }
    case 6: {
      if (n < 3) throw std::invalid_argument("row 6 needs n >= 3");
      set_label(true);
      r.g = SimpleType{'D', n};
      r.g_prime = SimpleType{'B', n};
      std::vector<int> part{3};
      part.insert(part.end(), static_cast<size_t>(2 * n - 3), 1);
      r.cover = {OrbitSpec::jordan(part), 2};
      Weight v(n, 0);
      v[0] = 1;
      r.v_modules = {{v, 1}};
      r.embedding = restriction_of(long_root_subsystem(RootSystem::build(r.g_prime)));
      // labeling of the embedded copy may attach the defining module to a
      // different end node; take the image of the ambient vector weight
      Weight amb(n, 0);
      amb[0] = 1;
      r.v_modules_branch = {{r.embedding.apply(amb), 1}};
      break;
    }
    case 7: {
      set_label(false);
      r.g = SimpleType{'B', 4};
      r.g_prime = SimpleType{'F', 4};
      r.cover = {OrbitSpec::jordan({2, 2, 2, 2, 1}), 2};
      r.v_modules = {{{0, 0, 0, 1}, 1}};
      r.embedding = b4_in_f4();
      break;
    }
    case 8: {
      set_label(false);
      r.g = SimpleType{'D', 4};
      r.g_prime = SimpleType{'F', 4};
      r.cover = {OrbitSpec::jordan({3, 2, 2, 1}), 4};
      r.v_modules = {{{1, 0, 0, 0}, 1}, {{0, 0, 1, 0}, 1}, {{0, 0, 0, 1}, 1}};
      r.embedding = restriction_of(long_root_subsystem(RootSystem::build(r.g_prime)));
      break;
    }
    case 9: {
      set_label(false);
      r.g = SimpleType{'G', 2};
      r.g_prime = SimpleType{'D', 4};
      r.cover = {OrbitSpec::by_dimension(10), 6};
      r.v_modules = {{{1, 0}, 2}};
      r.embedding = restriction_of(fold(RootSystem::build(r.g_prime), {2, 1, 3, 0}));
      break;
    }
    default:
      throw std::invalid_argument("catalog rows are 1..9");
  }
  if (r.v_modules_branch.empty()) r.v_modules_branch = r.v_modules;
  return r;
}

std::vector<PairRecord> catalog() {
  std::vector<PairRecord> out;
  out.push_back(catalog_record(1));
  out.push_back(catalog_record(2, 2));
  out.push_back(catalog_record(2, 3));
  out.push_back(catalog_record(3, 2));
  out.push_back(catalog_record(3, 3));
  out.push_back(catalog_record(4));
  out.push_back(catalog_record(5));
  out.push_back(catalog_record(6, 3));
  out.push_back(catalog_record(6, 4));
  out.push_back(catalog_record(7));
  out.push_back(catalog_record(8));
  out.push_back(catalog_record(9));
  return out;
}

OrbitContext make_orbit_context(const LieAlgebraPtr& L, const OrbitSpec& spec) {
  OrbitContext ctx;
  ctx.L = L;
  ctx.e = orbit_element(L, spec);
  ctx.triple = jacobson_morozov(L, ctx.e);
  ctx.cent = centralizer(L, ctx.e);
  return ctx;
}

int eigenspace_multiplicity(const OrbitContext& ctx, const ModuleRep& V, int k) {
  if (V.algebra != ctx.L) throw std::invalid_argument("eigenspace: module over a different algebra");
  int d = V.dim;
  // dual action a*(x) = -action(x)^T; eigenspace of h at k first
  Mat hdual = V.action_of(ctx.triple.h).transpose() * Rat(-1);
  for (int i = 0; i < d; ++i) hdual(i, i) -= k;
  auto eig = kernel_basis(hdual);
  if (eig.empty()) return 0;
  Mat basis(d, eig.size());
  for (size_t c = 0; c < eig.size(); ++c)
    for (int i = 0; i < d; ++i) basis(i, c) = eig[c][i];
  // stack the centralizer actions restricted to the eigenspace
  Mat stacked(ctx.cent.size() * static_cast<size_t>(d), eig.size());
  for (size_t m = 0; m < ctx.cent.size(); ++m) {
    Mat a = V.action_of(ctx.cent[m]).transpose() * Rat(-1);
    Mat ab = a * basis;
    for (int i = 0; i < d; ++i)
      for (size_t c = 0; c < eig.size(); ++c) stacked(m * d + i, c) = ab(i, c);
  }
  return static_cast<int>(kernel_basis(stacked).size());
}

namespace {

std::vector<Weight> dominant_weights_up_to(const RootSystemPtr& rs, long bound) {
  std::vector<Weight> out;
  Weight w(rs->rank(), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == rs->rank()) {
      if (ivec_sum(w) > 0 && weyl_dim(rs, w) <= bound) out.push_back(w);
      return;
    }
    for (w[i] = 0;; ++w[i]) {
      if (weyl_dim(rs, w) > bound) break;
      rec(i + 1);
    }
    w[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    long da = weyl_dim(rs, a), db = weyl_dim(rs, b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

}  // namespace

std::vector<std::pair<Weight, long>> graded_multiplicities(ModuleFactory& factory,
                                                           const OrbitContext& ctx,
                                                           long scan_bound, int k) {
  auto rs = ctx.L->root_system();
  Weight adjoint_hw = rs->weight_of_root(rs->highest_root());
  std::vector<std::pair<Weight, long>> out;
  for (const Weight& w : dominant_weights_up_to(rs, scan_bound)) {
    if (w == adjoint_hw) continue;
    ModuleRepPtr rep = factory.realize(w);
    int mult = eigenspace_multiplicity(ctx, *rep, k);
    if (mult > 0) out.emplace_back(w, mult);
  }
  return out;
}

nlohmann::json weight_list_json(const std::vector<std::pair<Weight, long>>& v) {
  auto sorted = v;
  std::sort(sorted.begin(), sorted.end());
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [w, m] : sorted) out.push_back({{"weight", w}, {"mult", m}});
  return out;
}

Report verify_pair(const PairRecord& rec, long scan_bound) {
  Report r;
  r.title = rec.label;

  LieAlgebraPtr Lg, Lgp;
  try {
    Lg = chevalley_basis_cached(RootSystem::build(rec.g));
    Lgp = chevalley_basis_cached(RootSystem::build(rec.g_prime));
  } catch (const std::exception& ex) {
    r.add_error("construction", ex.what());
    return r;
  }

  // (a) dimension identity
  try {
    long total = Lg->dim();
    for (const auto& [w, m] : rec.v_modules) total += m * weyl_dim(Lg->root_system(), w);
    r.add("dimension-identity: dim g' = dim g + dim V", Lgp->dim(), total);
  } catch (const std::exception& ex) {
    r.add_error("dimension-identity", ex.what());
  }

  // (b) adjoint branching
  try {
    auto parts = peel_decompose(
        branch_character(adjoint_character(Lgp->root_system()), rec.embedding));
    std::vector<std::pair<Weight, long>> expected = rec.v_modules_branch;
    auto tgt = rec.embedding.target;
    expected.emplace_back(tgt->weight_of_root(tgt->highest_root()), 1);
    r.add("branching: ad g' = ad g + V", weight_list_json(expected), weight_list_json(parts));
  } catch (const std::exception& ex) {
    r.add_error("branching", ex.what());
  }

  // (c) orbit dimensions through two oracles
  try {
    Element e = orbit_element(Lg, rec.cover.orbit);
    int dim_g_orbit = orbit_dim(Lg, e);
    Element etheta = orbit_element(Lgp, OrbitSpec::highest_long_root());
    r.add("orbit-dimension: g orbit = minimal orbit of g'", orbit_dim(Lgp, etheta), dim_g_orbit);
    if (auto part = orbit_partition(rec.g, rec.cover.orbit))
      r.add("orbit-dimension: partition formula (g)", dim_g_orbit,
            partition_orbit_dim(rec.g, *part));
    if (auto part = orbit_partition(rec.g_prime, OrbitSpec::highest_long_root()))
      r.add("orbit-dimension: partition formula (g')", orbit_dim(Lgp, etheta),
            partition_orbit_dim(rec.g_prime, *part));
  } catch (const std::exception& ex) {
    r.add_error("orbit-dimension", ex.what());
  }

  // (d) the degree-2 scan reproduces the module column
  try {
    ModuleFactory factory(Lg);
    OrbitContext ctx = make_orbit_context(Lg, rec.cover.orbit);
    auto scan = graded_multiplicities(factory, ctx, scan_bound, 2);
    r.add("degree-2 multiplicities reproduce V", weight_list_json(rec.v_modules),
          weight_list_json(scan));
  } catch (const std::exception& ex) {
    r.add_error("degree-2-scan", ex.what());
  }

  // (e) semisimplicity witness for g'
  try {
    r.add("killing form of g' nondegenerate", true, Lgp->killing_nondegenerate());
  } catch (const std::exception& ex) {
    r.add_error("killing-form", ex.what());
  }
  return r;
}

std::vector<ChainSpec> chain_catalog() {
  std::vector<ChainSpec> out;
  {
    ChainSpec a;
    a.label = "chain-so8-so9-f4";
    a.members = {{SimpleType{'D', 4}, OrbitSpec::jordan({3, 2, 2, 1})},
                 {SimpleType{'B', 4}, OrbitSpec::jordan({2, 2, 2, 2, 1})},
                 {SimpleType{'F', 4}, OrbitSpec::highest_long_root()}};
    auto b4 = RootSystem::build(SimpleType{'B', 4});
    auto d4_in_b4 = restriction_of(long_root_subsystem(b4));
    Weight amb(4, 0);
    amb[0] = 1;
    a.embeddings = {d4_in_b4, b4_in_f4()};
    a.step_modules = {{{d4_in_b4.apply(amb), 1}}, {{Weight{0, 0, 0, 1}, 1}}};
    a.bottom_row = 8;
    out.push_back(std::move(a));
  }
  {
    ChainSpec b;
    b.label = "chain-g2-so7-so8";
    b.members = {{SimpleType{'G', 2}, OrbitSpec::by_dimension(10)},
                 {SimpleType{'B', 3}, OrbitSpec::jordan({3, 1, 1, 1, 1})},
                 {SimpleType{'D', 4}, OrbitSpec::highest_long_root()}};
    auto d4 = RootSystem::build(SimpleType{'D', 4});
    b.embeddings = {restriction_of(fold_so7_to_g2()), restriction_of(fold(d4, {0, 1, 3, 2}))};
    b.step_modules = {{{Weight{1, 0}, 1}}, {{Weight{1, 0, 0}, 1}}};
    b.bottom_row = 9;
    out.push_back(std::move(b));
  }
  return out;
}

Report verify_chain(const ChainSpec& chain, long scan_bound) {
  Report r;
  r.title = chain.label;
  if (chain.members.empty()) {
    r.add_error("chain", "no members");
    return r;
  }
  if (chain.embeddings.size() + 1 != chain.members.size() ||
      chain.step_modules.size() != chain.embeddings.size()) {
    r.add_error("chain", "member/embedding shape mismatch");
    return r;
  }

  std::vector<LieAlgebraPtr> algebras;
  std::vector<int> dims;
  try {
    for (const auto& m : chain.members)
      algebras.push_back(chevalley_basis_cached(RootSystem::build(m.type)));
    for (size_t i = 0; i < chain.members.size(); ++i)
      dims.push_back(orbit_dim(algebras[i], orbit_element(algebras[i], chain.members[i].orbit)));
    r.add("orbit dimension constant along the chain",
          nlohmann::json(std::vector<int>(chain.members.size(), dims[0])), nlohmann::json(dims));
  } catch (const std::exception& ex) {
    r.add_error("chain-orbits", ex.what());
    return r;
  }

  for (size_t s = 0; s < chain.embeddings.size(); ++s) {
    std::string step = chain.members[s].type.str() + "<" + chain.members[s + 1].type.str();
    try {
      const auto& emb = chain.embeddings[s];
      long total = algebras[s]->dim();
      for (const auto& [w, m] : chain.step_modules[s])
        total += m * weyl_dim(emb.target, w);
      r.add("dimension-identity " + step, algebras[s + 1]->dim(), total);

      auto parts = peel_decompose(branch_character(adjoint_character(emb.source), emb));
      auto expected = chain.step_modules[s];
      expected.emplace_back(emb.target->weight_of_root(emb.target->highest_root()), 1);
      r.add("branching " + step, weight_list_json(expected), weight_list_json(parts));
    } catch (const std::exception& ex) {
      r.add_error("step " + step, ex.what());
    }
  }

  if (chain.bottom_row > 0) {
    try {
      PairRecord bottom = catalog_record(chain.bottom_row);
      ModuleFactory factory(algebras[0]);
      OrbitContext ctx = make_orbit_context(algebras[0], chain.members[0].orbit);
      auto scan = graded_multiplicities(factory, ctx, scan_bound, 2);
      r.add("bottom scan reproduces the top symmetry algebra modules",
            weight_list_json(bottom.v_modules), weight_list_json(scan));
      long total = algebras[0]->dim();
      for (const auto& [w, m] : scan) total += m * weyl_dim(algebras[0]->root_system(), w);
      r.add("bottom scan dimensions rebuild the top algebra", algebras.back()->dim(), total);
    } catch (const std::exception& ex) {
      r.add_error("bottom-scan", ex.what());
    }
  }
  return r;
}

std::vector<std::pair<Weight, long>> normality_obstruction(ModuleFactory& factory,
                                                           const OrbitContext& ctx,
                                                           long scan_bound) {
  return graded_multiplicities(factory, ctx, scan_bound, 2);
}

Report rank_rule_check(const std::vector<PairRecord>& records) {
  Report r;
  r.title = "rank-rule";
  for (const auto& rec : records) {
    if (rec.cover.cover_degree == 1) {
      r.add(rec.label + ": trivial cover forces rank growth", true,
            rec.g_prime.rank > rec.g.rank);
    } else if (rec.g.rank == rec.g_prime.rank) {
      r.add(rec.label + ": equal ranks come with a nontrivial cover", true,
            rec.cover.cover_degree > 1);
    } else {
      r.add(rec.label + ": rank comparison recorded", true, rec.g_prime.rank >= rec.g.rank);
    }
  }
  return r;
}

}  // namespace orbitsym
