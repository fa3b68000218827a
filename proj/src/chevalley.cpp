#include "orbitsym/chevalley.hpp"
#include "orbitsym/transport.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace orbitsym {

void StructureTable::set(int i, int j, std::vector<std::pair<int, long>> terms) {
  std::sort(terms.begin(), terms.end());
  entries_[static_cast<size_t>(i) * dim_ + j] = terms;
  for (auto& [k, c] : terms) c = -c;
  entries_[static_cast<size_t>(j) * dim_ + i] = std::move(terms);
}

std::vector<Rat> StructureTable::bracket(const std::vector<Rat>& x,
                                         const std::vector<Rat>& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("bracket: dimension mismatch");
  std::vector<Rat> out(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const auto& terms = at(i, j);
      if (terms.empty()) continue;
      Rat f = x[i] * y[j];
      for (const auto& [k, c] : terms) out[k] += f * c;
    }
  }
  return out;
}

Mat StructureTable::ad(const std::vector<Rat>& x) const {
  Mat m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i) {
      if (x[i] == 0) continue;
      for (const auto& [k, c] : at(i, j)) m(k, j) += x[i] * c;
    }
  return m;
}

Mat StructureTable::killing_matrix() const {
  // kappa(i,j) = sum_k coefficient of k in [b_i, [b_j, b_k]]
  Mat kappa(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      long v = 0;
      for (int k = 0; k < dim_; ++k)
        for (const auto& [l, c1] : at(j, k))
          for (const auto& [k2, c2] : at(i, l))
            if (k2 == k) v += c1 * c2;
      kappa(i, j) = v;
      kappa(j, i) = v;
    }
  return kappa;
}

size_t StructureTable::nonzero_pairs() const {
  size_t n = 0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (!at(i, j).empty()) ++n;
  return n;
}

StructureTable direct_sum_with_abelian(const StructureTable& t, int k) {
  StructureTable out(t.dim() + k);
  for (int i = 0; i < t.dim(); ++i)
    for (int j = i + 1; j < t.dim(); ++j) out.set(i, j, t.at(i, j));
  return out;
}

bool killing_nondegenerate(const StructureTable& t) {
  return rank(t.killing_matrix()) == static_cast<size_t>(t.dim());
}

bool Element::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

Element Element::operator*(const Rat& s) const {
  Element r = *this;
  for (auto& x : r.c) x *= s;
  return r;
}

namespace {

// N_{alpha,beta} for all ordered root pairs with alpha+beta a root.
// Signs: extraspecial pairs get +(p+1) over the (height, lex) positive-root
// order; everything else follows from the standard three- and four-root
// identities for Chevalley constants together with N_{-a,-b} = -N_{a,b}.
class NTable {
 public:
  explicit NTable(const RootSystem& rs) : rs_(rs), npos_(rs.num_positive()) {
    const auto& roots = rs.roots();
    for (size_t g = 0; g < npos_; ++g) {
      const IVec& gamma = roots[g];
      std::vector<std::pair<size_t, size_t>> pairs;  // (a,b), a < b, sum gamma
      for (size_t a = 0; a < npos_; ++a) {
        const IVec& ra = roots[a];
        IVec rb(gamma.size());
        for (size_t i = 0; i < rb.size(); ++i) rb[i] = gamma[i] - ra[i];
        int bi = rs.root_index(rb);
        if (bi < 0 || static_cast<size_t>(bi) >= npos_) continue;
        size_t b = static_cast<size_t>(bi);
        if (a < b) pairs.emplace_back(a, b);
      }
      if (pairs.empty()) continue;
      // pairs come out sorted by a; the first is the extraspecial one
      auto [a1, b1] = pairs[0];
      set(a1, b1, p_value(a1, b1) + 1);
      for (size_t t = 1; t < pairs.size(); ++t) {
        auto [a, b] = pairs[t];
        Rat acc = 0;
        IVec delta(gamma.size()), eta(gamma.size());
        for (size_t i = 0; i < delta.size(); ++i) {
          delta[i] = gamma[i] - roots[a][i] - roots[a1][i];
          eta[i] = roots[a][i] - roots[a1][i];
        }
        if (rs.is_root(delta)) {
          size_t d = static_cast<size_t>(rs.root_index(delta));
          acc += rat(rs.length2(delta) * get(a, d) * get(a1, d),
                     static_cast<long>(rs.length2(roots[b1])) * rs.length2(roots[b]));
        }
        if (rs.is_root(eta)) {
          size_t e = static_cast<size_t>(rs.root_index(eta));
          acc -= rat(rs.length2(eta) * get(a1, e) * get(b, e),
                     static_cast<long>(rs.length2(roots[a])) * rs.length2(roots[b1]));
        }
        acc *= rat(rs.length2(gamma), get(a1, b1));
        if (!is_integer(acc)) throw std::logic_error("non-integral structure constant");
        long n = to_long(acc);
        if (std::abs(n) != p_value(a, b) + 1)
          throw std::logic_error("structure constant magnitude violates the root string");
        set(a, b, n);
      }
    }
  }

  // Total lookup over arbitrary root indices (positives first, then their
  // negatives at index npos+k). Zero when the sum is not a root.
  long n_value(size_t i, size_t j) const {
    const auto& roots = rs_.roots();
    IVec sum(roots[i].size());
    for (size_t t = 0; t < sum.size(); ++t) sum[t] = roots[i][t] + roots[j][t];
    if (!rs_.is_root(sum)) return 0;
    bool ineg = i >= npos_, jneg = j >= npos_;
    if (!ineg && !jneg) return get(i, j);
    if (ineg && jneg) return -get(i - npos_, j - npos_);
    if (ineg) return -mixed(j, i - npos_);  // N_{-A,b} = -N_{b,-A}
    return mixed(i, j - npos_);
  }

 private:
  // N for a positive and the negative of a positive: N_{a, -B}.
  long mixed(size_t a, size_t B) const {
    const auto& roots = rs_.roots();
    IVec g(roots[a].size());
    for (size_t t = 0; t < g.size(); ++t) g[t] = roots[a][t] - roots[B][t];
    int gi = rs_.root_index(g);
    if (gi < 0) return 0;
    if (static_cast<size_t>(gi) < npos_) {
      // a - B = g > 0: N_{a,-B} = -(g,g)/(a,a) N_{B,g}
      Rat v(-static_cast<long>(rs_.length2(g)) * get(B, static_cast<size_t>(gi)),
            rs_.length2(roots[a]));
      return to_long(v);
    }
    size_t h = static_cast<size_t>(gi) - npos_;  // B - a = h > 0
    Rat v(-static_cast<long>(rs_.length2(roots[h])) * get(a, h), rs_.length2(roots[B]));
    return to_long(v);
  }

  long get(size_t a, size_t b) const {
    auto it = n_.find(key(a, b));
    if (it == n_.end()) throw std::logic_error("N-table lookup before computation");
    return it->second;
  }
  void set(size_t a, size_t b, long v) {
    n_[key(a, b)] = v;
    n_[key(b, a)] = -v;
  }
  size_t key(size_t a, size_t b) const { return a * npos_ + b; }

  int p_value(size_t a, size_t b) const {
    // largest p with beta - p alpha a root
    const auto& roots = rs_.roots();
    IVec cur = roots[b];
    int p = 0;
    while (true) {
      for (size_t t = 0; t < cur.size(); ++t) cur[t] -= roots[a][t];
      if (!rs_.is_root(cur)) break;
      ++p;
    }
    return p;
  }

  const RootSystem& rs_;
  size_t npos_;
  std::map<size_t, long> n_;
};

}  // namespace

LieAlgebraPtr LieAlgebra::assemble(const RootSystemPtr& rs, StructureTable table) {
  auto L = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  L->rs_ = rs;
  L->table_ = std::move(table);
  int r = rs->rank();
  for (int i = 0; i < r; ++i) L->labels_.push_back("h" + std::to_string(i + 1));
  for (const auto& root : rs->roots()) {
    std::string s = "e[";
    for (size_t i = 0; i < root.size(); ++i) s += (i ? "," : "") + std::to_string(root[i]);
    L->labels_.push_back(s + "]");
  }
  return L;
}

LieAlgebraPtr LieAlgebra::build(const RootSystemPtr& rs) {
  int r = rs->rank();
  int nroots = static_cast<int>(rs->num_roots());
  int npos = nroots / 2;
  int dim = r + nroots;
  NTable nt(*rs);
  StructureTable t(dim);

  auto neg_index = [&](int ri) { return ri < npos ? ri + npos : ri - npos; };

  // [h_i, e_beta] = <beta, alpha_i^vee> e_beta
  for (int ri = 0; ri < nroots; ++ri) {
    IVec w = rs->weight_of_root(rs->roots()[ri]);
    for (int i = 0; i < r; ++i)
      if (w[i] != 0) t.set(i, r + ri, {{r + ri, w[i]}});
  }
  // [e_alpha, e_beta]
  for (int a = 0; a < nroots; ++a)
    for (int b = a + 1; b < nroots; ++b) {
      if (b == neg_index(a)) {
        // [e_beta, e_-beta] = h_{beta^vee}
        IVec u = rs->coroot(rs->roots()[a]);
        std::vector<std::pair<int, long>> terms;
        for (int i = 0; i < r; ++i)
          if (u[i] != 0) terms.emplace_back(i, u[i]);
        t.set(r + a, r + b, std::move(terms));
        continue;
      }
      long n = nt.n_value(a, b);
      if (n == 0) continue;
      IVec sum(rs->rank());
      for (int i = 0; i < r; ++i) sum[i] = rs->roots()[a][i] + rs->roots()[b][i];
      t.set(r + a, r + b, {{r + rs->root_index(sum), n}});
    }
  return assemble(rs, std::move(t));
}

LieAlgebraPtr chevalley_basis(const RootSystemPtr& rs) { return LieAlgebra::build(rs); }

LieAlgebraPtr chevalley_basis_cached(const RootSystemPtr& rs) {
  const char* dir = std::getenv("ORBITSYM_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return chevalley_basis(rs);
  std::string name;
  for (const auto& c : rs->components()) name += (name.empty() ? "" : "x") + c.str();
  std::string path = std::string(dir) + "/" + name + ".sc";
  {
    std::ifstream in(path);
    if (in) {
      try {
        return LieAlgebra::load_cache(rs, in);
      } catch (const std::exception&) {
        // stale or foreign file: rebuild below
      }
    }
  }
  LieAlgebraPtr L = chevalley_basis(rs);
  std::ofstream out(path);
  if (out) L->save_cache(out);
  return L;
}

Element LieAlgebra::zero() const {
  return Element{shared_from_this(), std::vector<Rat>(dim())};
}

Element LieAlgebra::basis_element(int i) const {
  Element e = zero();
  e.c[i] = 1;
  return e;
}

Element LieAlgebra::cartan_element(int i) const { return basis_element(i); }

Element LieAlgebra::root_vector(const IVec& root_coords) const {
  int ri = rs_->root_index(root_coords);
  if (ri < 0) throw std::invalid_argument("root_vector: not a root");
  return basis_element(rank() + ri);
}

Element LieAlgebra::element(std::vector<Rat> coeffs) const {
  if (static_cast<int>(coeffs.size()) != dim())
    throw std::invalid_argument("element: dimension mismatch");
  return Element{shared_from_this(), std::move(coeffs)};
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  if (x.parent.get() != this || y.parent.get() != this)
    throw std::invalid_argument("bracket: elements of a different algebra");
  return Element{shared_from_this(), table_.bracket(x.c, y.c)};
}

Mat LieAlgebra::ad_matrix(const Element& x) const { return table_.ad(x.c); }

bool LieAlgebra::killing_nondegenerate() const { return orbitsym::killing_nondegenerate(table_); }

long LieAlgebra::structure_n(const IVec& alpha, const IVec& beta) const {
  int a = rs_->root_index(alpha), b = rs_->root_index(beta);
  if (a < 0 || b < 0) throw std::invalid_argument("structure_n: not roots");
  IVec sum(alpha.size());
  for (size_t i = 0; i < sum.size(); ++i) sum[i] = alpha[i] + beta[i];
  int s = rs_->root_index(sum);
  if (s < 0) return 0;
  for (const auto& [k, c] : table_.at(rank() + a, rank() + b))
    if (k == rank() + s) return c;
  return 0;
}

void LieAlgebra::save_cache(std::ostream& os) const {
  os << "# orbitsym structure constants v1\n";
  os << "type";
  for (const auto& c : rs_->components()) os << " " << c.str();
  os << "\ndim " << dim() << "\n";
  std::ostringstream body;
  size_t count = 0;
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      for (const auto& [k, c] : table_.at(i, j)) {
        body << i << " " << j << " " << k << " " << c << "\n";
        ++count;
      }
  os << "entries " << count << "\n" << body.str();
}

LieAlgebraPtr LieAlgebra::load_cache(const RootSystemPtr& rs, std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "# orbitsym structure constants v1")
    throw std::invalid_argument("cache: bad header");
  std::string word;
  is >> word;
  if (word != "type") throw std::invalid_argument("cache: missing type");
  for (const auto& c : rs->components()) {
    is >> word;
    if (word != c.str()) throw std::invalid_argument("cache: type mismatch");
  }
  int dim = 0;
  is >> word >> dim;
  if (word != "dim" || dim != rs->rank() + static_cast<int>(rs->num_roots()))
    throw std::invalid_argument("cache: dimension mismatch");
  size_t entries = 0;
  is >> word >> entries;
  if (word != "entries") throw std::invalid_argument("cache: missing entries");

  std::map<std::pair<int, int>, std::vector<std::pair<int, long>>> acc;
  for (size_t n = 0; n < entries; ++n) {
    int i, j, k;
    long c;
    if (!(is >> i >> j >> k >> c)) throw std::invalid_argument("cache: truncated");
    acc[{i, j}].emplace_back(k, c);
  }
  StructureTable t(dim);
  for (auto& [ij, terms] : acc) t.set(ij.first, ij.second, std::move(terms));
  return assemble(rs, std::move(t));
}

// ---------------------------------------------------------------------------
// Defining representations of the classical families

namespace {

Mat unit(int n, int i, int j) {
  Mat m(n, n);
  m(i, j) = 1;
  return m;
}

Mat comm(const Mat& a, const Mat& b) { return a * b - b * a; }

struct Generators {
  int n = 0;
  std::vector<Mat> e, f;
  Mat form;
};

Generators classical_generators(const SimpleType& t) {
  Generators g;
  int r = t.rank;
  switch (t.family) {
    case 'A': {
      g.n = r + 1;
      for (int i = 0; i < r; ++i) {
        g.e.push_back(unit(g.n, i, i + 1));
        g.f.push_back(unit(g.n, i + 1, i));
      }
      break;
    }
    case 'B': {
      g.n = 2 * r + 1;
      int N = g.n;
      for (int i = 0; i + 1 < r; ++i) {
        g.e.push_back(unit(N, i, i + 1) - unit(N, N - 2 - i, N - 1 - i));
        g.f.push_back(unit(N, i + 1, i) - unit(N, N - 1 - i, N - 2 - i));
      }
      g.e.push_back(unit(N, r - 1, r) - unit(N, r, r + 1));
      g.f.push_back((unit(N, r, r - 1) - unit(N, r + 1, r)) * Rat(2));
      g.form = Mat(N, N);
      for (int i = 0; i < N; ++i) g.form(i, N - 1 - i) = 1;
      break;
    }
    case 'C': {
      g.n = 2 * r;
      int N = g.n;
      for (int i = 0; i + 1 < r; ++i) {
        g.e.push_back(unit(N, i, i + 1) - unit(N, N - 2 - i, N - 1 - i));
        g.f.push_back(unit(N, i + 1, i) - unit(N, N - 1 - i, N - 2 - i));
      }
      g.e.push_back(unit(N, r - 1, r));
      g.f.push_back(unit(N, r, r - 1));
      g.form = Mat(N, N);
      for (int i = 0; i < r; ++i) {
        g.form(i, N - 1 - i) = 1;
        g.form(N - 1 - i, i) = -1;
      }
      break;
    }
    case 'D': {
      g.n = 2 * r;
      int N = g.n;
      for (int i = 0; i + 1 < r; ++i) {
        g.e.push_back(unit(N, i, i + 1) - unit(N, N - 2 - i, N - 1 - i));
        g.f.push_back(unit(N, i + 1, i) - unit(N, N - 1 - i, N - 2 - i));
      }
      g.e.push_back(unit(N, r - 2, r) - unit(N, r - 1, r + 1));
      g.f.push_back(unit(N, r, r - 2) - unit(N, r + 1, r - 1));
      g.form = Mat(N, N);
      for (int i = 0; i < N; ++i) g.form(i, N - 1 - i) = 1;
      break;
    }
    default:
      throw std::invalid_argument("defining_rep: classical types only");
  }
  return g;
}

}  // namespace

DefiningRep defining_rep(const LieAlgebraPtr& L) {
  const auto& rs = L->root_system();
  if (!rs->is_simple()) throw std::invalid_argument("defining_rep: simple types only");
  Generators g = classical_generators(rs->type());

  DefiningRep rep;
  rep.algebra = L;
  rep.n = g.n;
  rep.form = g.form;
  rep.action = transport_chevalley_basis(
      L, g.e, g.f, Mat(g.n, g.n), comm, [](const Mat& m) { return m.is_zero(); },
      /*full_check=*/true);

  // Membership in the form-preserving algebra.
  if (rep.form.rows() > 0)
    for (const auto& m : rep.action)
      if (!(m.transpose() * rep.form + rep.form * m).is_zero())
        throw std::logic_error("defining_rep: matrix does not preserve the form");
  return rep;
}

Mat DefiningRep::matrix_of(const Element& x) const {
  Mat m(n, n);
  for (size_t i = 0; i < x.c.size(); ++i)
    if (x.c[i] != 0) m = m + action[i] * x.c[i];
  return m;
}

std::vector<int> jordan_type(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("jordan_type: not square");
  size_t n = m.rows();
  std::vector<size_t> ranks{n};  // rank of m^0
  Mat p = m;
  while (true) {
    size_t r = rank(p);
    ranks.push_back(r);
    if (r == 0) break;
    if (ranks.size() > n + 1) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    p = p * m;
  }
  // number of blocks of size >= k is rank(m^{k-1}) - rank(m^k)
  std::vector<int> type;
  for (size_t k = 1; k < ranks.size(); ++k) {
    size_t ge_k = ranks[k - 1] - ranks[k];
    while (type.size() < ge_k) type.push_back(0);
    for (size_t b = 0; b < ge_k; ++b) type[b]++;
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

}  // namespace orbitsym
