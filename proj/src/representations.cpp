#include "orbitsym/representations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "orbitsym/transport.hpp"

namespace orbitsym {

long Character::total() const {
  long t = 0;
  for (const auto& [w, m] : mults) t += m;
  return t;
}

long Character::mult(const Weight& w) const {
  auto it = mults.find(w);
  return it == mults.end() ? 0 : it->second;
}

void Character::add(const Weight& w, long m) {
  if (m == 0) return;
  long& slot = mults[w];
  slot += m;
  if (slot == 0) mults.erase(w);
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [w, m] : o.mults) add(w, m);
  return *this;
}

Character& Character::subtract(const Character& o, long times) {
  for (const auto& [w, m] : o.mults) add(w, -m * times);
  return *this;
}

bool Character::operator==(const Character& o) const { return mults == o.mults; }

long weyl_dim(const RootSystemPtr& rs, const Weight& hw) {
  if (static_cast<int>(hw.size()) != rs->rank()) throw std::invalid_argument("weyl_dim: rank mismatch");
  if (!rs->dominant(hw)) throw std::invalid_argument("weyl_dim: weight is not dominant");
  Int num = 1, den = 1;
  for (size_t k = 0; k < rs->num_positive(); ++k) {
    IVec u = rs->coroot(rs->roots()[k]);
    long a = 0, b = 0;
    for (int i = 0; i < rs->rank(); ++i) {
      a += static_cast<long>(u[i]) * (hw[i] + 1);
      b += u[i];
    }
    num *= a;
    den *= b;
  }
  Int q = num / den;
  if (q * den != num) throw std::logic_error("weyl_dim: non-integral result");
  if (!q.fits_slong_p()) throw std::invalid_argument("weyl_dim: dimension overflow");
  return q.get_si();
}

Character adjoint_character(const RootSystemPtr& rs) {
  Character c{rs, {}};
  for (const auto& r : rs->roots()) c.add(rs->weight_of_root(r), 1);
  c.add(IVec(rs->rank(), 0), rs->rank());
  return c;
}

Character freudenthal_character(const RootSystemPtr& rs, const Weight& hw) {
  if (!rs->dominant(hw)) throw std::invalid_argument("freudenthal: weight is not dominant");
  int r = rs->rank();

  // All weights lie in the box hw - sum c_i alpha_i with 0 <= c <= b, where
  // b gives the lowest weight w0(hw).
  IVec lowdom = rs->dominantize([&] {
    IVec neg(hw.size());
    for (size_t i = 0; i < hw.size(); ++i) neg[i] = -hw[i];
    return neg;
  }());
  IVec span(hw.size());
  for (size_t i = 0; i < hw.size(); ++i) span[i] = hw[i] + lowdom[i];
  std::vector<Rat> braw = rs->weight_to_root_coords(span);
  IVec b(r);
  size_t box = 1;
  for (int i = 0; i < r; ++i) {
    b[i] = static_cast<int>(to_long(braw[i]));
    if (b[i] < 0) throw std::logic_error("freudenthal: negative box bound");
    box *= static_cast<size_t>(b[i]) + 1;
    if (box > 3000000) throw std::invalid_argument("freudenthal: weight too large");
  }

  // Enumerate the box; remember dominant candidates sorted by depth.
  struct Cand {
    IVec c;
    Weight mu;
  };
  std::vector<Cand> points;
  points.reserve(box);
  IVec c(r, 0);
  while (true) {
    Weight mu = hw;
    for (int i = 0; i < r; ++i)
      if (c[i] != 0)
        for (int k = 0; k < r; ++k) mu[k] -= c[i] * rs->cartan(k, i);
    points.push_back({c, mu});
    int i = 0;
    while (i < r && c[i] == b[i]) c[i++] = 0;
    if (i == r) break;
    ++c[i];
  }
  std::vector<const Cand*> dom;
  for (const auto& p : points)
    if (rs->dominant(p.mu)) dom.push_back(&p);
  std::sort(dom.begin(), dom.end(), [](const Cand* x, const Cand* y) {
    int hx = ivec_sum(x->c), hy = ivec_sum(y->c);
    if (hx != hy) return hx < hy;
    return x->c < y->c;
  });

  std::unordered_map<Weight, long, IVecHash> mult;
  auto lookup = [&](const Weight& w) {
    auto it = mult.find(rs->dominantize(w));
    return it == mult.end() ? 0L : it->second;
  };

  for (const Cand* cd : dom) {
    if (ivec_sum(cd->c) == 0) {
      mult[cd->mu] = 1;
      continue;
    }
    long long num = 0;
    for (size_t k = 0; k < rs->num_positive(); ++k) {
      const IVec& a = rs->roots()[k];
      int da = rs->length2(a) / 2;
      long base = rs->pairing(cd->mu, a) * da;  // (mu, alpha)
      IVec cc = cd->c;
      IVec wa = rs->weight_of_root(a);
      for (int step = 1;; ++step) {
        bool inside = true;
        for (int i = 0; i < r; ++i) {
          cc[i] -= a[i];
          if (cc[i] < 0) inside = false;
        }
        if (!inside) break;
        Weight nu = cd->mu;  // mu + step*alpha
        for (int i = 0; i < r; ++i) nu[i] += step * wa[i];
        long m = lookup(nu);
        if (m != 0) num += static_cast<long long>(m) * (base + 2LL * step * da);
      }
    }
    long long den = 0;
    for (int i = 0; i < r; ++i)
      den += static_cast<long long>(cd->c[i]) * (hw[i] + cd->mu[i] + 2) * rs->d(i);
    if (den <= 0) throw std::logic_error("freudenthal: nonpositive denominator");
    if ((2 * num) % den != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
    long m = static_cast<long>(2 * num / den);
    if (m > 0) mult[cd->mu] = m;
  }

  Character out{rs, {}};
  for (const auto& p : points) {
    long m = lookup(p.mu);
    if (m > 0) out.add(p.mu, m);
  }
  long expect = weyl_dim(rs, hw);
  if (out.total() != expect) throw std::logic_error("freudenthal: total mismatch");
  return out;
}

Character tensor_character(const Character& a, const Character& b) {
  Character out{a.rs, {}};
  for (const auto& [wa, ma] : a.mults)
    for (const auto& [wb, mb] : b.mults) {
      Weight w = wa;
      for (size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
      out.add(w, ma * mb);
    }
  return out;
}

std::vector<std::pair<Weight, long>> peel_decompose(const Character& c) {
  const auto& rs = c.rs;
  Character residue = c;
  std::map<Weight, Character> char_cache;
  std::vector<std::pair<Weight, long>> out;
  while (!residue.mults.empty()) {
    // maximal dominant weight by height, ties broken lexicographically
    const Weight* best = nullptr;
    Rat best_h;
    for (const auto& [w, m] : residue.mults) {
      if (!rs->dominant(w)) continue;
      std::vector<Rat> rc = rs->weight_to_root_coords(w);
      Rat h = 0;
      for (const auto& x : rc) h += x;
      if (!best || h > best_h || (h == best_h && w > *best)) {
        best = &w;
        best_h = h;
      }
    }
    if (!best) throw std::invalid_argument("peel: residue has no dominant weight");
    Weight hw = *best;
    long m = residue.mult(hw);
    if (m < 0) throw std::invalid_argument("peel: negative multiplicity, not a character");
    auto it = char_cache.find(hw);
    if (it == char_cache.end()) it = char_cache.emplace(hw, freudenthal_character(rs, hw)).first;
    residue.subtract(it->second, m);
    out.emplace_back(hw, m);
  }
  for (const auto& [w, m] : residue.mults)
    if (m != 0) throw std::invalid_argument("peel: nonzero residue");
  return out;
}

Character branch_character(const Character& src, const WeightRestriction& r) {
  Character out{r.target, {}};
  for (const auto& [w, m] : src.mults) out.add(r.apply(w), m);
  return out;
}

// ---------------------------------------------------------------------------
// Module realizations

Mat ModuleRep::action_of(const Element& x) const {
  Mat m(dim, dim);
  for (size_t i = 0; i < x.c.size(); ++i)
    if (x.c[i] != 0) m = m + action[i] * x.c[i];
  return m;
}

Character character_of(const ModuleRep& m) {
  Character c{m.algebra->root_system(), {}};
  for (const auto& w : m.weights) c.add(w, 1);
  return c;
}

ModuleRepPtr dual_module(const ModuleRepPtr& m) {
  auto out = std::make_shared<ModuleRep>();
  out->algebra = m->algebra;
  out->dim = m->dim;
  out->action.reserve(m->action.size());
  for (const auto& a : m->action) out->action.push_back(a.transpose() * Rat(-1));
  out->weights.reserve(m->weights.size());
  for (const auto& w : m->weights) {
    Weight neg(w.size());
    for (size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
    out->weights.push_back(neg);
  }
  out->highest = m->algebra->root_system()->dominantize([&] {
    Weight neg(m->highest.size());
    for (size_t i = 0; i < m->highest.size(); ++i) neg[i] = -m->highest[i];
    return neg;
  }());
  return out;
}

ModuleRepPtr adjoint_rep(const LieAlgebraPtr& L) {
  auto rs = L->root_system();
  auto out = std::make_shared<ModuleRep>();
  out->algebra = L;
  out->dim = L->dim();
  for (int i = 0; i < L->dim(); ++i) out->action.push_back(L->table().ad(L->basis_element(i).c));
  for (int i = 0; i < rs->rank(); ++i) out->weights.push_back(Weight(rs->rank(), 0));
  for (const auto& r : rs->roots()) out->weights.push_back(rs->weight_of_root(r));
  out->highest = rs->weight_of_root(rs->highest_root());
  return out;
}

namespace {

// Weights of module basis vectors, read off the diagonal Cartan actions.
std::vector<Weight> weights_from_cartan(const LieAlgebraPtr& L, const std::vector<Mat>& action,
                                        size_t dim) {
  int r = L->root_system()->rank();
  std::vector<Weight> w(dim, Weight(r, 0));
  for (int i = 0; i < r; ++i) {
    const Mat& h = action[static_cast<size_t>(i)];
    for (size_t k = 0; k < dim; ++k) {
      for (size_t l = 0; l < dim; ++l)
        if (l != k && h(l, k) != 0) throw std::logic_error("cartan action is not diagonal");
      w[k][i] = static_cast<int>(to_long(h(k, k)));
    }
  }
  return w;
}

Weight top_weight(const RootSystemPtr& rs, const std::vector<Weight>& weights) {
  const Weight* best = nullptr;
  Rat best_h;
  for (const auto& w : weights) {
    std::vector<Rat> rc = rs->weight_to_root_coords(w);
    Rat h = 0;
    for (const auto& x : rc) h += x;
    if (!best || h > best_h) {
      best = &w;
      best_h = h;
    }
  }
  if (!best || !rs->dominant(*best)) throw std::logic_error("module has no dominant top weight");
  return *best;
}

Mat mat_comm(const Mat& a, const Mat& b) { return a * b - b * a; }

}  // namespace

ModuleRepPtr defining_module(const LieAlgebraPtr& L) {
  DefiningRep rep = defining_rep(L);
  auto out = std::make_shared<ModuleRep>();
  out->algebra = L;
  out->dim = rep.n;
  out->action = std::move(rep.action);
  out->weights = weights_from_cartan(L, out->action, static_cast<size_t>(out->dim));
  out->highest = top_weight(L->root_system(), out->weights);
  return out;
}

namespace {

Mat creation_op(int n, int j) {
  int d = 1 << n;
  Mat m(d, d);
  for (int s = 0; s < d; ++s) {
    if ((s >> j) & 1) continue;
    int sign = __builtin_popcount(static_cast<unsigned>(s) & ((1u << j) - 1)) % 2 == 0 ? 1 : -1;
    m(s | (1 << j), s) = sign;
  }
  return m;
}

Mat annihilation_op(int n, int j) {
  int d = 1 << n;
  Mat m(d, d);
  for (int s = 0; s < d; ++s) {
    if (!((s >> j) & 1)) continue;
    int sign = __builtin_popcount(static_cast<unsigned>(s) & ((1u << j) - 1)) % 2 == 0 ? 1 : -1;
    m(s & ~(1 << j), s) = sign;
  }
  return m;
}

std::vector<Mat> spin_action(const LieAlgebraPtr& L) {
  auto rs = L->root_system();
  const SimpleType& t = rs->type();
  int n = t.rank;
  std::vector<Mat> e, f;
  for (int i = 0; i + 1 < n; ++i) {
    e.push_back(creation_op(n, i) * annihilation_op(n, i + 1));
    f.push_back(creation_op(n, i + 1) * annihilation_op(n, i));
  }
  if (t.family == 'B') {
    e.push_back(creation_op(n, n - 1));
    f.push_back(annihilation_op(n, n - 1));
  } else if (t.family == 'D') {
    e.push_back(creation_op(n, n - 2) * creation_op(n, n - 1));
    f.push_back(annihilation_op(n, n - 1) * annihilation_op(n, n - 2));
  } else {
    throw std::invalid_argument("spin construction: types B and D only");
  }
  return transport_chevalley_basis(
      L, e, f, Mat(1 << n, 1 << n), mat_comm, [](const Mat& m) { return m.is_zero(); },
      /*full_check=*/true);
}

}  // namespace

ModuleRepPtr spin_module(const LieAlgebraPtr& L) {
  if (L->root_system()->type().family != 'B')
    throw std::invalid_argument("spin_module: type B only (use half_spin_modules for D)");
  auto out = std::make_shared<ModuleRep>();
  out->algebra = L;
  out->dim = 1 << L->root_system()->rank();
  out->action = spin_action(L);
  out->weights = weights_from_cartan(L, out->action, static_cast<size_t>(out->dim));
  out->highest = top_weight(L->root_system(), out->weights);
  return out;
}

std::pair<ModuleRepPtr, ModuleRepPtr> half_spin_modules(const LieAlgebraPtr& L) {
  if (L->root_system()->type().family != 'D')
    throw std::invalid_argument("half_spin_modules: type D only");
  int n = L->root_system()->rank();
  std::vector<Mat> full = spin_action(L);
  std::pair<ModuleRepPtr, ModuleRepPtr> out;
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<int> keep;
    for (int s = 0; s < (1 << n); ++s)
      if (__builtin_popcount(static_cast<unsigned>(s)) % 2 == parity) keep.push_back(s);
    auto half = std::make_shared<ModuleRep>();
    half->algebra = L;
    half->dim = static_cast<int>(keep.size());
    for (const auto& m : full) {
      Mat sub(keep.size(), keep.size());
      for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b) sub(a, b) = m(keep[a], keep[b]);
      half->action.push_back(std::move(sub));
    }
    half->weights = weights_from_cartan(L, half->action, keep.size());
    half->highest = top_weight(L->root_system(), half->weights);
    (parity == n % 2 ? out.first : out.second) = half;
  }
  return out;
}

// ---------------------------------------------------------------------------
// The 26-dimensional F4 module from the E6 diagram involution

ModuleRepPtr f4_26_module(const LieAlgebraPtr& f4) {
  if (!(f4->root_system()->is_simple() && f4->root_system()->type() == SimpleType{'F', 4}))
    throw std::invalid_argument("f4_26_module: F4 input required");
  auto e6rs = RootSystem::build(SimpleType{'E', 6});
  auto e6 = chevalley_basis_cached(e6rs);
  std::vector<int> sigma{5, 1, 4, 3, 2, 0};
  FoldingMap fm = fold(e6rs, sigma);
  if (fm.target->type() != SimpleType{'F', 4}) throw std::logic_error("unexpected folded type");

  auto br = [&](const Element& a, const Element& b) { return e6->bracket(a, b); };
  auto zero = e6->zero();
  auto is_zero = [](const Element& x) { return x.is_zero(); };

  // Involution: images of all basis elements under the generator permutation.
  std::vector<Element> eg, fg;
  for (int i = 0; i < 6; ++i) {
    IVec simple(6, 0), neg(6, 0);
    simple[sigma[i]] = 1;
    neg[sigma[i]] = -1;
    eg.push_back(e6->root_vector(simple));
    fg.push_back(e6->root_vector(neg));
  }
  std::vector<Element> invol =
      transport_chevalley_basis(e6, eg, fg, zero, br, is_zero, /*full_check=*/false);

  // F4 copy inside E6: orbit sums of the simple generators, in the fold's
  // node order.
  std::vector<Element> f4e, f4f;
  for (int a = 0; a < 4; ++a) {
    Element ea = zero, fa = zero;
    for (int i = 0; i < 6; ++i) {
      if (fm.restriction(a, i) == 0) continue;
      IVec simple(6, 0), neg(6, 0);
      simple[i] = 1;
      neg[i] = -1;
      ea = ea + e6->root_vector(simple);
      fa = fa + e6->root_vector(neg);
    }
    f4e.push_back(ea);
    f4f.push_back(fa);
  }
  std::vector<Element> f4_in_e6 =
      transport_chevalley_basis(f4, f4e, f4f, zero, br, is_zero, /*full_check=*/true);

  // Explicit basis of the (-1)-eigenspace of the involution. Root vectors
  // map to single signed root vectors; Cartan elements permute.
  struct EigVec {
    std::vector<Rat> v;
    int lead;  // coordinate with coefficient 1, unique to this vector
    Weight w;  // F4 weight
  };
  std::vector<EigVec> basis;
  int dim6 = e6->dim();
  WeightRestriction wr = restriction_of(fm);
  std::vector<bool> done(dim6, false);
  for (int k = 0; k < dim6; ++k) {
    if (done[k]) continue;
    done[k] = true;
    const auto& img = invol[k].c;
    int pos = -1;
    for (int l = 0; l < dim6; ++l)
      if (img[l] != 0) {
        if (pos >= 0) throw std::logic_error("involution image not monomial");
        pos = l;
      }
    Rat s = img[pos];
    if (s != 1 && s != -1) throw std::logic_error("involution image not signed basis vector");
    Weight w = k < 6 ? Weight(4, 0) : wr.apply(e6rs->weight_of_root(e6rs->roots()[k - 6]));
    if (pos == k) {
      if (s == -1) basis.push_back({e6->basis_element(k).c, k, w});
      continue;
    }
    done[pos] = true;
    std::vector<Rat> v(dim6);
    v[k] = 1;
    v[pos] = -s;
    basis.push_back({std::move(v), k, w});
  }
  if (basis.size() != 26) throw std::logic_error("eigenspace dimension is not 26");

  auto out = std::make_shared<ModuleRep>();
  out->algebra = f4;
  out->dim = 26;
  for (const auto& b : basis) out->weights.push_back(b.w);
  out->highest = Weight{0, 0, 0, 1};
  for (int x = 0; x < f4->dim(); ++x) {
    Mat m(26, 26);
    for (size_t j = 0; j < basis.size(); ++j) {
      std::vector<Rat> u = e6->table().bracket(f4_in_e6[static_cast<size_t>(x)].c, basis[j].v);
      // coordinates read off the lead positions, then verified
      std::vector<Rat> coords(26);
      for (size_t t = 0; t < basis.size(); ++t) coords[t] = u[basis[t].lead];
      std::vector<Rat> recon(dim6);
      for (size_t t = 0; t < basis.size(); ++t)
        if (coords[t] != 0)
          for (int l = 0; l < dim6; ++l) recon[l] += coords[t] * basis[t].v[l];
      if (recon != u) throw std::logic_error("bracket leaves the eigenspace");
      for (size_t t = 0; t < basis.size(); ++t) m(t, j) = coords[t];
    }
    out->action.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Highest-weight extraction from tensor hosts

namespace {

struct TensorHost {
  std::vector<ModuleRepPtr> factors;
  std::vector<size_t> strides;
  size_t dim = 1;

  explicit TensorHost(std::vector<ModuleRepPtr> fs) : factors(std::move(fs)) {
    strides.assign(factors.size(), 1);
    for (size_t i = factors.size(); i-- > 0;) {
      strides[i] = dim;
      dim *= static_cast<size_t>(factors[i]->dim);
    }
  }

  Weight weight_of(size_t idx, int rank) const {
    Weight w(rank, 0);
    for (size_t f = 0; f < factors.size(); ++f) {
      size_t digit = (idx / strides[f]) % static_cast<size_t>(factors[f]->dim);
      for (int i = 0; i < rank; ++i) w[i] += factors[f]->weights[digit][i];
    }
    return w;
  }

  std::vector<Rat> apply(int basis, const std::vector<Rat>& v) const {
    std::vector<Rat> out(dim);
    for (size_t t = 0; t < dim; ++t) {
      if (v[t] == 0) continue;
      for (size_t f = 0; f < factors.size(); ++f) {
        const Mat& a = factors[f]->action[static_cast<size_t>(basis)];
        size_t digit = (t / strides[f]) % static_cast<size_t>(factors[f]->dim);
        for (size_t i = 0; i < static_cast<size_t>(factors[f]->dim); ++i) {
          if (a(i, digit) == 0) continue;
          size_t target = t + i * strides[f] - digit * strides[f];
          out[target] += a(i, digit) * v[t];
        }
      }
    }
    return out;
  }
};

// Joint kernel of the raising operators inside the hw weight space, closed
// under the lowering operators. Returns null when no highest weight vector
// of the requested weight exists in the host.
ModuleRepPtr extract_highest_weight_module(const LieAlgebraPtr& L, const TensorHost& host,
                                           const Weight& hw, const Character& expected) {
  auto rs = L->root_system();
  int r = rs->rank();

  std::unordered_map<Weight, std::vector<size_t>, IVecHash> groups;
  for (size_t t = 0; t < host.dim; ++t) groups[host.weight_of(t, r)].push_back(t);
  auto grp = groups.find(hw);
  if (grp == groups.end()) return nullptr;
  const std::vector<size_t>& W = grp->second;

  std::vector<int> simple_e(r), simple_f(r);
  for (int i = 0; i < r; ++i) {
    IVec s(r, 0), ns(r, 0);
    s[i] = 1;
    ns[i] = -1;
    simple_e[i] = r + rs->root_index(s);
    simple_f[i] = r + rs->root_index(ns);
  }

  // rows: images under each raising operator, restricted to the target space
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < r; ++i) {
    IVec s(r, 0);
    s[i] = 1;
    Weight up = hw;
    IVec wa = rs->weight_of_root(s);
    for (int k = 0; k < r; ++k) up[k] += wa[k];
    auto upgrp = groups.find(up);
    if (upgrp == groups.end()) continue;
    std::unordered_map<size_t, size_t> pos;
    for (size_t k = 0; k < upgrp->second.size(); ++k) pos[upgrp->second[k]] = k;
    std::vector<std::vector<Rat>> block(upgrp->second.size(), std::vector<Rat>(W.size()));
    for (size_t col = 0; col < W.size(); ++col) {
      std::vector<Rat> unit(host.dim);
      unit[W[col]] = 1;
      std::vector<Rat> img = host.apply(simple_e[i], unit);
      for (size_t t = 0; t < host.dim; ++t)
        if (img[t] != 0) block[pos.at(t)][col] = img[t];
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }
  Mat m(rows.size(), W.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < W.size(); ++j) m(i, j) = rows[i][j];
  auto kern = kernel_basis(m);
  if (kern.empty()) return nullptr;

  std::vector<Rat> v0(host.dim);
  for (size_t j = 0; j < W.size(); ++j) v0[W[j]] = kern[0][j];

  // Lowering closure, tracked per weight for independence tests.
  struct WeightSlot {
    std::vector<size_t> idx;  // host coordinates carrying this weight
    SpanBuilder span{0};
    std::vector<size_t> members;  // module basis positions
  };
  std::unordered_map<Weight, WeightSlot, IVecHash> slots;
  std::vector<std::vector<Rat>> basis;
  std::vector<Weight> weights;
  long bound = expected.total();

  auto restrict_to = [&](const std::vector<Rat>& v, const std::vector<size_t>& idx) {
    std::vector<Rat> out(idx.size());
    for (size_t k = 0; k < idx.size(); ++k) out[k] = v[idx[k]];
    return out;
  };
  auto try_add = [&](std::vector<Rat> v, const Weight& w) {
    auto git = groups.find(w);
    if (git == groups.end()) return false;
    auto [it, fresh] = slots.try_emplace(w);
    if (fresh) {
      it->second.idx = git->second;
      it->second.span = SpanBuilder(git->second.size());
    }
    std::vector<Rat> res = restrict_to(v, it->second.idx);
    if (!it->second.span.add(res)) return false;
    it->second.members.push_back(basis.size());
    basis.push_back(std::move(v));
    weights.push_back(w);
    return true;
  };

  try_add(std::move(v0), hw);
  for (size_t head = 0; head < basis.size(); ++head) {
    if (static_cast<long>(basis.size()) > bound)
      throw std::logic_error("extraction exceeded the expected dimension");
    for (int i = 0; i < r; ++i) {
      std::vector<Rat> img = host.apply(simple_f[i], basis[head]);
      bool zero = true;
      for (const auto& x : img)
        if (x != 0) {
          zero = false;
          break;
        }
      if (zero) continue;
      Weight w = weights[head];
      IVec s(r, 0);
      s[i] = 1;
      IVec wa = rs->weight_of_root(s);
      for (int k = 0; k < r; ++k) w[k] -= wa[k];
      try_add(std::move(img), w);
    }
  }

  if (static_cast<long>(basis.size()) != expected.total())
    throw std::logic_error("extracted module has wrong dimension");
  {
    Character got{rs, {}};
    for (const auto& w : weights) got.add(w, 1);
    if (!(got == expected)) throw std::logic_error("extracted module has wrong character");
  }

  // Action matrices: apply each algebra basis element and solve inside the
  // target weight space.
  auto out = std::make_shared<ModuleRep>();
  out->algebra = L;
  out->dim = static_cast<int>(basis.size());
  out->highest = hw;
  out->weights = weights;
  std::unordered_map<Weight, Mat, IVecHash> slot_mat;
  for (auto& [w, slot] : slots) {
    Mat sm(slot.idx.size(), slot.members.size());
    for (size_t c = 0; c < slot.members.size(); ++c) {
      std::vector<Rat> res = restrict_to(basis[slot.members[c]], slot.idx);
      for (size_t k = 0; k < slot.idx.size(); ++k) sm(k, c) = res[k];
    }
    slot_mat.emplace(w, std::move(sm));
  }
  for (int b = 0; b < L->dim(); ++b) {
    Weight wb(r, 0);
    if (b >= r) wb = rs->weight_of_root(rs->roots()[static_cast<size_t>(b - r)]);
    Mat m2(out->dim, out->dim);
    for (size_t j = 0; j < basis.size(); ++j) {
      std::vector<Rat> img = host.apply(b, basis[j]);
      Weight w = weights[j];
      for (int k = 0; k < r; ++k) w[k] += wb[k];
      auto sit = slots.find(w);
      if (sit == slots.end()) {
        for (const auto& x : img)
          if (x != 0) throw std::logic_error("action leaves the extracted module");
        continue;
      }
      std::vector<Rat> rhs = restrict_to(img, sit->second.idx);
      auto sol = solve(slot_mat.at(w), rhs);
      if (!sol) throw std::logic_error("action leaves the extracted module");
      for (size_t t = 0; t < sit->second.members.size(); ++t)
        m2(sit->second.members[t], j) = (*sol)[t];
    }
    out->action.push_back(std::move(m2));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ModuleFactory

ModuleFactory::ModuleFactory(LieAlgebraPtr L, long dim_bound) : L_(std::move(L)), bound_(dim_bound) {
  auto rs = L_->root_system();
  if (!rs->is_simple()) throw std::invalid_argument("ModuleFactory: simple algebras only");
  seeds_.push_back(adjoint_rep(L_));
  char fam = rs->type().family;
  if (fam == 'A' || fam == 'B' || fam == 'C' || fam == 'D') seeds_.push_back(defining_module(L_));
  if (fam == 'B') seeds_.push_back(spin_module(L_));
  if (fam == 'D') {
    auto [sp, sm] = half_spin_modules(L_);
    seeds_.push_back(sp);
    seeds_.push_back(sm);
  }
  if (rs->type() == SimpleType{'F', 4}) seeds_.push_back(f4_26_module(L_));
  for (const auto& s : seeds_) {
    if (!(character_of(*s) == character(s->highest)))
      throw std::logic_error("seed module fails its character check");
    cache_[s->highest] = s;
  }
}

const Character& ModuleFactory::character(const Weight& hw) {
  auto it = chars_.find(hw);
  if (it == chars_.end())
    it = chars_.emplace(hw, freudenthal_character(L_->root_system(), hw)).first;
  return it->second;
}

std::vector<ModuleRepPtr> ModuleFactory::available_sorted() const {
  std::vector<ModuleRepPtr> v;
  for (const auto& [w, m] : cache_) v.push_back(m);
  std::sort(v.begin(), v.end(), [](const ModuleRepPtr& a, const ModuleRepPtr& b) {
    if (a->dim != b->dim) return a->dim < b->dim;
    return a->highest < b->highest;
  });
  return v;
}

ModuleRepPtr ModuleFactory::realize(const Weight& hw) {
  auto rs = L_->root_system();
  if (static_cast<int>(hw.size()) != rs->rank())
    throw std::invalid_argument("realize: rank mismatch");
  if (!rs->dominant(hw)) throw std::invalid_argument("realize: weight is not dominant");
  auto it = cache_.find(hw);
  if (it != cache_.end()) return it->second;

  if (ivec_sum(hw) == 0) {
    auto triv = std::make_shared<ModuleRep>();
    triv->algebra = L_;
    triv->dim = 1;
    triv->highest = hw;
    triv->action.assign(static_cast<size_t>(L_->dim()), Mat(1, 1));
    triv->weights.push_back(hw);
    cache_[hw] = triv;
    return triv;
  }

  long d = weyl_dim(rs, hw);
  if (d > bound_)
    throw std::invalid_argument("realize: dimension " + std::to_string(d) +
                                " exceeds the configured bound");
  const Character& expected = character(hw);

  // Candidate hosts: multisets of up to three available modules, smallest
  // total dimension first.
  std::vector<ModuleRepPtr> avail = available_sorted();
  struct Cand {
    long dim;
    std::vector<size_t> idx;
  };
  std::vector<Cand> cands;
  size_t na = avail.size();
  for (size_t i = 0; i < na; ++i) {
    long d1 = avail[i]->dim;
    if (d1 <= bound_) cands.push_back({d1, {i}});
    for (size_t j = i; j < na; ++j) {
      long d2 = d1 * avail[j]->dim;
      if (d2 > bound_) continue;
      cands.push_back({d2, {i, j}});
      for (size_t k = j; k < na; ++k) {
        long d3 = d2 * avail[k]->dim;
        if (d3 <= bound_) cands.push_back({d3, {i, j, k}});
      }
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.idx < b.idx;
  });

  for (const auto& c : cands) {
    if (c.dim < d) continue;
    // hw must be reachable: sum of factor highest weights minus hw must be a
    // nonnegative integer combination of simple roots
    Weight sum(rs->rank(), 0);
    for (size_t f : c.idx)
      for (int i = 0; i < rs->rank(); ++i) sum[i] += avail[f]->highest[i];
    for (int i = 0; i < rs->rank(); ++i) sum[i] -= hw[i];
    std::vector<Rat> rc = rs->weight_to_root_coords(sum);
    bool ok = true;
    for (const auto& x : rc)
      if (!is_integer(x) || x < 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<ModuleRepPtr> factors;
    for (size_t f : c.idx) factors.push_back(avail[f]);
    ModuleRepPtr rep = extract_highest_weight_module(L_, TensorHost(std::move(factors)), hw, expected);
    if (rep) {
      cache_[hw] = rep;
      return rep;
    }
  }
  throw std::invalid_argument("realize: no admissible host found for the requested weight");
}

}  // namespace orbitsym
