#include "orbitsym/nilpotent_orbits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orbitsym {

OrbitSpec OrbitSpec::root_vector(IVec r) {
  OrbitSpec s;
  s.kind = Kind::RootVector;
  s.root = std::move(r);
  return s;
}
OrbitSpec OrbitSpec::highest_short_root() {
  OrbitSpec s;
  s.kind = Kind::HighestShortRoot;
  return s;
}
OrbitSpec OrbitSpec::highest_long_root() {
  OrbitSpec s;
  s.kind = Kind::HighestLongRoot;
  return s;
}
OrbitSpec OrbitSpec::jordan(std::vector<int> partition) {
  OrbitSpec s;
  s.kind = Kind::JordanType;
  s.partition = std::move(partition);
  std::sort(s.partition.rbegin(), s.partition.rend());
  return s;
}
OrbitSpec OrbitSpec::principal() { return OrbitSpec{}; }
OrbitSpec OrbitSpec::by_dimension(int d) {
  OrbitSpec s;
  s.kind = Kind::ByDimension;
  s.dim = d;
  return s;
}

std::string OrbitSpec::label() const {
  switch (kind) {
    case Kind::RootVector: {
      std::string s = "root-vector[";
      for (size_t i = 0; i < root.size(); ++i) s += (i ? "," : "") + std::to_string(root[i]);
      return s + "]";
    }
    case Kind::HighestShortRoot: return "short-root-vector";
    case Kind::HighestLongRoot: return "minimal";
    case Kind::JordanType: {
      std::string s = "jordan(";
      for (size_t i = 0; i < partition.size(); ++i)
        s += (i ? "," : "") + std::to_string(partition[i]);
      return s + ")";
    }
    case Kind::Principal: return "principal";
    case Kind::ByDimension: return "dimension-" + std::to_string(dim);
  }
  return "?";
}

namespace {

// Subsets of positive root vectors by support size, lexicographic within a
// size; accept decides. Returns the accepted index subset or empty.
template <typename Accept>
std::vector<int> search_root_sums(size_t npos, int max_support, Accept accept) {
  for (int k = 1; k <= max_support; ++k) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (accept(idx)) return idx;
      int i = k - 1;
      while (i >= 0 && idx[i] == static_cast<int>(npos) - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {};
}

Element sum_of_root_vectors(const LieAlgebraPtr& L, const std::vector<int>& idx) {
  Element e = L->zero();
  for (int i : idx) e.c[L->rank() + i] = 1;
  return e;
}

}  // namespace

Element orbit_element(const LieAlgebraPtr& L, const OrbitSpec& spec) {
  auto rs = L->root_system();
  switch (spec.kind) {
    case OrbitSpec::Kind::RootVector:
      return L->root_vector(spec.root);
    case OrbitSpec::Kind::HighestShortRoot:
      return L->root_vector(rs->highest_roots().second);
    case OrbitSpec::Kind::HighestLongRoot:
      return L->root_vector(rs->highest_roots().first);
    case OrbitSpec::Kind::Principal: {
      Element e = L->zero();
      for (int i = 0; i < rs->rank(); ++i) {
        IVec simple(rs->rank(), 0);
        simple[i] = 1;
        e.c[L->rank() + rs->root_index(simple)] = 1;
      }
      return e;
    }
    case OrbitSpec::Kind::JordanType: {
      validate_partition(rs->type(), spec.partition);
      DefiningRep rep = defining_rep(L);
      size_t npos = rs->num_positive();
      std::vector<Mat> pos_mats;
      for (size_t k = 0; k < npos; ++k) pos_mats.push_back(rep.action[L->rank() + k]);
      auto idx = search_root_sums(npos, rs->rank() + 2, [&](const std::vector<int>& sel) {
        Mat m(rep.n, rep.n);
        for (int i : sel) m = m + pos_mats[i];
        return jordan_type(m) == spec.partition;
      });
      if (idx.empty())
        throw std::invalid_argument("orbit_element: no representative found for " + spec.label());
      return sum_of_root_vectors(L, idx);
    }
    case OrbitSpec::Kind::ByDimension: {
      auto idx = search_root_sums(rs->num_positive(), rs->rank() + 2, [&](const std::vector<int>& sel) {
        return orbit_dim(L, sum_of_root_vectors(L, sel)) == spec.dim;
      });
      if (idx.empty())
        throw std::invalid_argument("orbit_element: no representative found at dimension " +
                                    std::to_string(spec.dim));
      return sum_of_root_vectors(L, idx);
    }
  }
  throw std::logic_error("orbit_element: unknown kind");
}

int orbit_dim(const LieAlgebraPtr& L, const Element& e) {
  return static_cast<int>(rank(L->ad_matrix(e)));
}

void validate_partition(const SimpleType& t, const std::vector<int>& partition) {
  int total = 0;
  std::map<int, int> mult;
  for (int p : partition) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    total += p;
    mult[p]++;
  }
  int need = 0;
  switch (t.family) {
    case 'A': need = t.rank + 1; break;
    case 'B': need = 2 * t.rank + 1; break;
    case 'C': need = 2 * t.rank; break;
    case 'D': need = 2 * t.rank; break;
    default: throw std::invalid_argument("jordan types exist for classical types only");
  }
  if (total != need)
    throw std::invalid_argument("partition sums to " + std::to_string(total) + ", expected " +
                                std::to_string(need));
  if (t.family == 'B' || t.family == 'D') {
    for (const auto& [p, m] : mult)
      if (p % 2 == 0 && m % 2 != 0)
        throw std::invalid_argument("orthogonal parity: even parts need even multiplicity");
  }
  if (t.family == 'C') {
    for (const auto& [p, m] : mult)
      if (p % 2 == 1 && m % 2 != 0)
        throw std::invalid_argument("symplectic parity: odd parts need even multiplicity");
  }
}

int partition_orbit_dim(const SimpleType& t, const std::vector<int>& partition) {
  validate_partition(t, partition);
  // dual partition
  int top = partition.empty() ? 0 : partition[0];
  std::vector<int> dual(top, 0);
  for (int p : partition)
    for (int k = 0; k < p; ++k) dual[k]++;
  long sumsq = 0;
  for (int d : dual) sumsq += static_cast<long>(d) * d;
  long odd = 0;
  for (int p : partition)
    if (p % 2 == 1) ++odd;

  long n = 0, dim_g = 0, zent = 0;
  switch (t.family) {
    case 'A':
      n = t.rank + 1;
      return static_cast<int>(n * n - sumsq);
    case 'B':
    case 'D':
      n = t.family == 'B' ? 2 * t.rank + 1 : 2 * t.rank;
      dim_g = n * (n - 1) / 2;
      zent = (sumsq - odd) / 2;
      return static_cast<int>(dim_g - zent);
    case 'C':
      n = 2 * t.rank;
      dim_g = static_cast<long>(t.rank) * (n + 1);
      zent = (sumsq + odd) / 2;
      return static_cast<int>(dim_g - zent);
    default:
      throw std::invalid_argument("partition_orbit_dim: classical types only");
  }
}

Sl2Triple jacobson_morozov(const LieAlgebraPtr& L, const Element& e) {
  if (e.is_zero()) throw std::invalid_argument("jacobson_morozov: zero element");
  Mat ade = L->ad_matrix(e);
  {
    Mat p = ade;
    for (int k = 1; k < L->dim() && !p.is_zero(); ++k) p = p * ade;
    if (!p.is_zero()) throw std::invalid_argument("jacobson_morozov: element is not nilpotent");
  }
  // h = [e,z] with [h,e] = 2e, i.e. (ad e)^2 z = -2e.
  std::vector<Rat> rhs(e.c);
  for (auto& x : rhs) x *= -2;
  auto z = solve(ade * ade, rhs);
  if (!z) throw std::logic_error("jacobson_morozov: neutral element solve failed");
  Element h = L->element(ade.apply(*z));

  // f from [e,f] = h, [h,f] = -2f.
  Mat adh = L->ad_matrix(h);
  int d = L->dim();
  Mat sys(2 * d, d);
  std::vector<Rat> b(2 * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      sys(i, j) = ade(i, j);
      sys(d + i, j) = adh(i, j);
    }
    sys(d + i, i) += 2;
    b[i] = h.c[i];
  }
  auto f = solve(sys, b);
  if (!f) throw std::logic_error("jacobson_morozov: no completing lowering element");
  Sl2Triple t{h, e, L->element(*f)};

  if (!(L->bracket(t.h, t.e) - t.e * Rat(2)).is_zero() ||
      !(L->bracket(t.h, t.f) + t.f * Rat(2)).is_zero() ||
      !(L->bracket(t.e, t.f) - t.h).is_zero())
    throw std::logic_error("jacobson_morozov: triple relations violated");
  return t;
}

std::vector<Element> centralizer(const LieAlgebraPtr& L, const Element& e) {
  std::vector<Element> out;
  for (auto& v : kernel_basis(L->ad_matrix(e))) out.push_back(L->element(std::move(v)));
  return out;
}

int Grading::dim_at(int k) const {
  auto it = eigenspaces.find(k);
  return it == eigenspaces.end() ? 0 : static_cast<int>(it->second.size());
}

long Grading::total() const {
  long t = 0;
  for (const auto& [k, basis] : eigenspaces) t += static_cast<long>(basis.size());
  return t;
}

namespace {

Grading grade_by_matrix(const Mat& m) {
  size_t d = m.rows();
  // Gershgorin-style bound: eigenvalues are bounded by the largest absolute
  // row sum; exact integers only.
  Rat bound = 0;
  for (size_t i = 0; i < d; ++i) {
    Rat row = 0;
    for (size_t j = 0; j < d; ++j) row += abs(m(i, j));
    if (row > bound) bound = row;
  }
  long limit = mpz_get_si(Int(bound.get_num() / bound.get_den() + 1).get_mpz_t());

  Grading g;
  long found = 0;
  for (long step = 0; step <= 2 * limit && found < static_cast<long>(d); ++step) {
    long k = (step % 2 == 0) ? step / 2 : -(step / 2 + 1);
    Mat shifted = m;
    for (size_t i = 0; i < d; ++i) shifted(i, i) -= Rat(k);
    auto kern = kernel_basis(shifted);
    if (kern.empty()) continue;
    found += static_cast<long>(kern.size());
    g.eigenspaces[static_cast<int>(k)] = std::move(kern);
  }
  if (found != static_cast<long>(d))
    throw std::invalid_argument("h_grading: eigenvalues are not all integral");
  return g;
}

}  // namespace

Grading h_grading(const LieAlgebraPtr& L, const Element& h) { return grade_by_matrix(L->ad_matrix(h)); }

Grading h_grading(const ModuleRep& m, const Element& h) { return grade_by_matrix(m.action_of(h)); }

}  // namespace orbitsym
