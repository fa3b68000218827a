#include "orbitsym/poisson.hpp"

#include <random>
#include <stdexcept>

#include "orbitsym/transport.hpp"

namespace orbitsym {

Polynomial Polynomial::variable(int nvars, int i) {
  Polynomial p(nvars);
  Mono m(nvars, 0);
  m[i] = 1;
  p.terms_[m] = 1;
  return p;
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_[Mono(nvars, 0)] = c;
  return p;
}

void Polynomial::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable mismatch");
  Polynomial r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Mono m = ma;
      for (int i = 0; i < nvars_; ++i) m[i] += mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, cc] : terms_) r.terms_[m] = cc * c;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const { return terms_ == o.terms_; }

Polynomial Polynomial::derivative(int i) const {
  Polynomial r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Mono d = m;
    d[i] -= 1;
    r.add_term(d, c * m[i]);
  }
  return r;
}

Rat Polynomial::coefficient(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

long Polynomial::grade_of(const Mono& m, const std::vector<int>& weights) {
  long g = 0;
  for (size_t i = 0; i < m.size(); ++i) g += static_cast<long>(m[i]) * weights[i];
  return g;
}

std::optional<long> Polynomial::homogeneous_grade(const std::vector<int>& weights) const {
  std::optional<long> g;
  for (const auto& [m, c] : terms_) {
    long mg = grade_of(m, weights);
    if (!g)
      g = mg;
    else if (*g != mg)
      return std::nullopt;
  }
  return g ? g : std::optional<long>(0);
}

PoissonAlgebra PoissonAlgebra::lie_poisson(const LieAlgebraPtr& L) {
  PoissonAlgebra p;
  p.nvars_ = L->dim();
  p.grades_.assign(p.nvars_, 2);
  for (int i = 0; i < p.nvars_; ++i)
    for (int j = i + 1; j < p.nvars_; ++j) {
      Polynomial b(p.nvars_);
      for (const auto& [k, c] : L->table().at(i, j)) b = b + Polynomial::variable(p.nvars_, k) * Rat(c);
      if (!b.is_zero()) p.pair_brackets_.emplace(std::make_pair(i, j), std::move(b));
    }
  return p;
}

PoissonAlgebra PoissonAlgebra::symplectic(const Mat& beta) {
  if (beta.rows() != beta.cols()) throw std::invalid_argument("symplectic: square matrix required");
  size_t m = beta.rows();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      if (beta(i, j) != -beta(j, i)) throw std::invalid_argument("symplectic: form not alternating");
  PoissonAlgebra p;
  p.nvars_ = static_cast<int>(m);
  p.grades_.assign(p.nvars_, 1);
  for (int i = 0; i < p.nvars_; ++i)
    for (int j = i + 1; j < p.nvars_; ++j)
      if (beta(i, j) != 0)
        p.pair_brackets_.emplace(std::make_pair(i, j), Polynomial::constant(p.nvars_, beta(i, j)));
  return p;
}

Polynomial PoissonAlgebra::bracket(const Polynomial& f, const Polynomial& g) const {
  if (f.nvars() != nvars_ || g.nvars() != nvars_)
    throw std::invalid_argument("bracket: coordinate mismatch");
  Polynomial out(nvars_);
  for (const auto& [ij, p] : pair_brackets_) {
    auto [i, j] = ij;
    Polynomial dif = f.derivative(i), djf = f.derivative(j);
    Polynomial dig = g.derivative(i), djg = g.derivative(j);
    out = out + p * (dif * djg - djf * dig);
  }
  return out;
}

Report grading_check(const LieAlgebraPtr& L, int samples, unsigned seed) {
  PoissonAlgebra pa = PoissonAlgebra::lie_poisson(L);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> var(0, pa.nvars() - 1);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> deg(1, 4);  // polynomial degree; grade = 2*degree

  auto random_homogeneous = [&](int degree) {
    Polynomial f(pa.nvars());
    for (int t = 0; t < 3; ++t) {
      Polynomial mono = Polynomial::constant(pa.nvars(), coeff(rng));
      for (int d = 0; d < degree; ++d) mono = mono * Polynomial::variable(pa.nvars(), var(rng));
      f = f + mono;
    }
    return f;
  };

  int violations = 0;
  for (int s = 0; s < samples; ++s) {
    int ka = deg(rng), kb = deg(rng);
    Polynomial f = random_homogeneous(ka), g = random_homogeneous(kb);
    Polynomial br = pa.bracket(f, g);
    auto grade = br.homogeneous_grade(pa.grades());
    if (br.is_zero()) continue;
    if (!grade || *grade != 2L * ka + 2L * kb - 2) ++violations;
  }
  Report r;
  r.title = "poisson-grading(" +
            (L->root_system()->is_simple() ? L->root_system()->type().str() : std::string("product")) +
            ")";
  r.add("degree-rule-violations-in-" + std::to_string(samples) + "-samples", 0, violations);
  return r;
}

SymplecticModel sp_min_cover_model(int n) {
  if (n < 1) throw std::invalid_argument("sp_min_cover_model: n >= 1");
  int m = 2 * n;
  Mat beta(m, m);
  for (int i = 0; i < n; ++i) {
    beta(i, n + i) = 1;
    beta(n + i, i) = -1;
  }
  SymplecticModel model;
  model.n = n;
  model.beta = beta;
  model.algebra = PoissonAlgebra::symplectic(beta);
  model.sp = chevalley_basis(
      RootSystem::build(n == 1 ? SimpleType{'A', 1} : SimpleType{'C', n}));

  auto z = [&](int i) { return Polynomial::variable(m, i); };
  std::vector<Polynomial> e, f;
  for (int i = 0; i + 1 < n; ++i) {
    e.push_back(z(i) * z(n + i + 1) * Rat(-1));
    f.push_back(z(i + 1) * z(n + i) * Rat(-1));
  }
  e.push_back(z(n - 1) * z(n - 1) * rat(1, 2));
  f.push_back(z(2 * n - 1) * z(2 * n - 1) * rat(-1, 2));

  auto br = [&](const Polynomial& a, const Polynomial& b) { return model.algebra.bracket(a, b); };
  model.moment = transport_chevalley_basis(
      model.sp, e, f, Polynomial(m), br, [](const Polynomial& p) { return p.is_zero(); },
      /*full_check=*/true);
  return model;
}

SymplecticModel synthetic_model(const Mat& beta) {
  SymplecticModel model;
  model.n = static_cast<int>(beta.rows()) / 2;
  model.beta = beta;
  model.algebra = PoissonAlgebra::symplectic(beta);
  return model;
}

bool heisenberg_check(const SymplecticModel& model) {
  size_t m = model.beta.rows();
  // brackets of coordinates are the constants beta_ij (two-step nilpotent)
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      Polynomial b = model.algebra.bracket(Polynomial::variable(static_cast<int>(m), static_cast<int>(i)),
                                           Polynomial::variable(static_cast<int>(m), static_cast<int>(j)));
      if (!(b == Polynomial::constant(static_cast<int>(m), model.beta(i, j)))) return false;
    }
  // center reduces to the constants exactly when the form is nondegenerate
  return rank(model.beta) == m;
}

Mat moment_linear_action(const SymplecticModel& model, int basis_index) {
  int m = 2 * model.n;
  Mat a(m, m);
  const Polynomial& q = model.moment.at(static_cast<size_t>(basis_index));
  for (int col = 0; col < m; ++col) {
    Polynomial img = model.algebra.bracket(q, Polynomial::variable(m, col));
    for (const auto& [mono, c] : img.terms()) {
      int var = -1;
      int total = 0;
      for (int i = 0; i < m; ++i) {
        total += mono[i];
        if (mono[i] == 1) var = i;
      }
      if (total != 1) throw std::logic_error("moment action is not linear on coordinates");
      a(var, col) = c;
    }
  }
  return a;
}

bool moment_rank_one(const SymplecticModel& model) {
  int d = model.sp->dim();
  int m = 2 * model.n;
  std::vector<Mat> act;
  for (int i = 0; i < d; ++i) {
    Mat a = moment_linear_action(model, i);
    // the action must preserve the form
    if (!(a.transpose() * model.beta + model.beta * a).is_zero())
      throw std::logic_error("moment action does not preserve the form");
    act.push_back(std::move(a));
  }
  Mat gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      Mat p = act[i] * act[j];
      Rat tr = 0;
      for (int k = 0; k < m; ++k) tr += p(k, k);
      gram(i, j) = tr;
      gram(j, i) = tr;
    }
  Mat ginv = inverse(gram);

  // Y_{ab} = sum_{I,J} q_I (G^{-1})_{IJ} (A_J)_{ab}, a matrix of quadratics
  std::vector<std::vector<Polynomial>> y(m, std::vector<Polynomial>(m, Polynomial(m)));
  for (int i = 0; i < d; ++i) {
    Polynomial qi = model.moment[static_cast<size_t>(i)];
    for (int j = 0; j < d; ++j) {
      if (ginv(i, j) == 0) continue;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if (act[j](a, b) != 0) y[a][b] = y[a][b] + qi * (ginv(i, j) * act[j](a, b));
    }
  }
  bool nonzero = false;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (!y[a][b].is_zero()) nonzero = true;
  if (!nonzero) return false;
  for (int a = 0; a < m; ++a)
    for (int c = a + 1; c < m; ++c)
      for (int b = 0; b < m; ++b)
        for (int e = b + 1; e < m; ++e)
          if (!(y[a][b] * y[c][e] - y[a][e] * y[c][b]).is_zero()) return false;
  return true;
}

SemidirectSum semidirect_sum(const LieAlgebraPtr& r, const ModuleRepPtr& u) {
  if (u->algebra != r) throw std::invalid_argument("semidirect_sum: module over a different algebra");
  int dr = r->dim(), du = u->dim;
  // u^r = 0: no invariant vectors
  Mat stacked(static_cast<size_t>(dr) * du, du);
  for (int i = 0; i < dr; ++i)
    for (int a = 0; a < du; ++a)
      for (int b = 0; b < du; ++b) stacked(static_cast<size_t>(i) * du + a, b) = u->action[i](a, b);
  if (!kernel_basis(stacked).empty())
    throw std::invalid_argument("semidirect_sum: the module has invariant vectors");

  StructureTable t(dr + du);
  for (int i = 0; i < dr; ++i)
    for (int j = i + 1; j < dr; ++j) t.set(i, j, r->table().at(i, j));
  for (int i = 0; i < dr; ++i)
    for (int a = 0; a < du; ++a) {
      std::vector<std::pair<int, long>> terms;
      for (int b = 0; b < du; ++b) {
        const Rat& c = u->action[i](b, a);
        if (c != 0) terms.emplace_back(dr + b, to_long(c));
      }
      if (!terms.empty()) t.set(i, dr + a, std::move(terms));
    }
  return SemidirectSum{r, u, std::move(t)};
}

TransitivityResult coadjoint_transitivity(const SemidirectSum& s, const std::vector<Rat>& mu,
                                          const std::vector<Rat>& lambda) {
  int dr = s.r->dim(), du = s.u->dim, d = dr + du;
  if (static_cast<int>(mu.size()) != dr || static_cast<int>(lambda.size()) != du)
    throw std::invalid_argument("coadjoint_transitivity: functional size mismatch");
  std::vector<Rat> gamma(mu);
  gamma.insert(gamma.end(), lambda.begin(), lambda.end());

  Mat k(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [l, c] : s.table.at(i, j)) k(i, j) += gamma[static_cast<size_t>(l)] * c;
  TransitivityResult out;
  out.dim_s_orbit = static_cast<int>(rank(k));
  Mat kr(dr, d);
  for (int i = 0; i < dr; ++i)
    for (int j = 0; j < d; ++j) kr(i, j) = k(i, j);
  out.dim_r_orbit = static_cast<int>(rank(kr));
  out.equal = out.dim_s_orbit == out.dim_r_orbit;
  return out;
}

Report transitivity_trials(const SemidirectSum& s, int trials, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  auto random_vec = [&](int d) {
    std::vector<Rat> v(d);
    for (auto& x : v) x = rat(num(rng), den(rng));
    return v;
  };

  Report r;
  r.title = "coadjoint-transitivity(" + s.r->root_system()->type().str() + "+" +
            std::to_string(s.u->dim) + ")";
  int bad_zero = 0, bad_nonzero = 0, monotone_bad = 0;
  for (int t = 0; t < trials; ++t) {
    // lambda = 0 branch: equality must hold
    auto mu = random_vec(s.r->dim());
    TransitivityResult a = coadjoint_transitivity(s, mu, std::vector<Rat>(s.u->dim));
    if (!a.equal) ++bad_zero;
    if (a.dim_r_orbit > a.dim_s_orbit) ++monotone_bad;
    // lambda != 0 branch: equality must fail
    std::vector<Rat> lambda = random_vec(s.u->dim);
    bool all_zero = true;
    for (const auto& x : lambda)
      if (x != 0) all_zero = false;
    if (all_zero) lambda[0] = 1;
    TransitivityResult b = coadjoint_transitivity(s, random_vec(s.r->dim()), lambda);
    if (b.equal) ++bad_nonzero;
    if (b.dim_r_orbit > b.dim_s_orbit) ++monotone_bad;
  }
  r.add("equality-failures-at-lambda-zero", 0, bad_zero);
  r.add("equality-holds-at-lambda-nonzero", 0, bad_nonzero);
  r.add("subalgebra-orbit-dimension-exceeds-total", 0, monotone_bad);
  return r;
}

}  // namespace orbitsym
