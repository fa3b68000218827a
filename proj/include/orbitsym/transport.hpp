#ifndef ORBITSYM_TRANSPORT_HPP
#define ORBITSYM_TRANSPORT_HPP

#include <stdexcept>
#include <vector>

#include "orbitsym/chevalley.hpp"

namespace orbitsym {

/// Carries the Chevalley basis of L into any concrete Lie algebra (matrices,
/// polynomials under Poisson bracket, elements of a bigger algebra) from
/// images of the simple generator pairs (e_i, f_i). Non-simple root vectors
/// are generated by the same extraspecial recursion that defines the abstract
/// constants, so the result is the image of the basis under the unique
/// homomorphism extending the generators. Every pairwise bracket is checked
/// against the structure table when full_check is set (always checked on
/// generator pairings), which pins the isomorphism.
///
/// T needs operator+, operator-, operator*(Rat) and a zero value; br(a, b)
/// computes the bracket and is_zero tests for zero.
template <typename T, typename BracketFn, typename IsZeroFn>
std::vector<T> transport_chevalley_basis(const LieAlgebraPtr& L, const std::vector<T>& e_gens,
                                         const std::vector<T>& f_gens, const T& zero, BracketFn br,
                                         IsZeroFn is_zero, bool full_check) {
  const auto& rs = L->root_system();
  int r = rs->rank();
  int npos = static_cast<int>(rs->num_positive());
  if (static_cast<int>(e_gens.size()) != r || static_cast<int>(f_gens.size()) != r)
    throw std::invalid_argument("transport: generator count mismatch");

  std::vector<T> out(static_cast<size_t>(L->dim()), zero);
  for (int i = 0; i < r; ++i) {
    IVec simple(r, 0), neg(r, 0);
    simple[i] = 1;
    neg[i] = -1;
    out[static_cast<size_t>(r + rs->root_index(simple))] = e_gens[i];
    out[static_cast<size_t>(r + rs->root_index(neg))] = f_gens[i];
    out[static_cast<size_t>(i)] = br(e_gens[i], f_gens[i]);
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      IVec simple(r, 0);
      simple[j] = 1;
      const T& ej = out[static_cast<size_t>(r + rs->root_index(simple))];
      if (!is_zero(br(out[static_cast<size_t>(i)], ej) - ej * Rat(rs->cartan(i, j))))
        throw std::logic_error("transport: generator pairing mismatch");
    }

  for (int ri = 0; ri < npos; ++ri) {
    const IVec& gamma = rs->roots()[static_cast<size_t>(ri)];
    if (ivec_sum(gamma) < 2) continue;
    for (int a = 0; a < npos; ++a) {
      IVec rb(gamma.size());
      for (size_t k = 0; k < rb.size(); ++k) rb[k] = gamma[k] - rs->roots()[static_cast<size_t>(a)][k];
      int bi = rs->root_index(rb);
      if (bi < 0 || bi >= npos) continue;
      long n = L->structure_n(rs->roots()[static_cast<size_t>(a)], rb);
      out[static_cast<size_t>(r + ri)] =
          br(out[static_cast<size_t>(r + a)], out[static_cast<size_t>(r + bi)]) * rat(1, n);
      IVec na(gamma.size()), nb(gamma.size()), ng(gamma.size());
      for (size_t k = 0; k < gamma.size(); ++k) {
        na[k] = -rs->roots()[static_cast<size_t>(a)][k];
        nb[k] = -rb[k];
        ng[k] = -gamma[k];
      }
      long nn = L->structure_n(na, nb);
      out[static_cast<size_t>(r + rs->root_index(ng))] =
          br(out[static_cast<size_t>(r + rs->root_index(na))],
             out[static_cast<size_t>(r + rs->root_index(nb))]) *
          rat(1, nn);
      break;
    }
  }

  if (full_check) {
    for (int i = 0; i < L->dim(); ++i)
      for (int j = i + 1; j < L->dim(); ++j) {
        T want = zero;
        for (const auto& [k, c] : L->table().at(i, j))
          want = want + out[static_cast<size_t>(k)] * Rat(c);
        if (!is_zero(br(out[static_cast<size_t>(i)], out[static_cast<size_t>(j)]) - want))
          throw std::logic_error("transport: bracket mismatch against structure table");
      }
  }
  return out;
}

}  // namespace orbitsym

#endif
