#ifndef ORBITSYM_CHEVALLEY_HPP
#define ORBITSYM_CHEVALLEY_HPP

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "orbitsym/linalg.hpp"
#include "orbitsym/root_system.hpp"

namespace orbitsym {

/// Sparse table of structure constants c^k_{ij} over an ordered basis.
/// Constants are integers for every algebra produced here.
class StructureTable {
 public:
  StructureTable() : dim_(0) {}
  explicit StructureTable(int dim) : dim_(dim), entries_(static_cast<size_t>(dim) * dim) {}

  int dim() const { return dim_; }

  void set(int i, int j, std::vector<std::pair<int, long>> terms);
  const std::vector<std::pair<int, long>>& at(int i, int j) const {
    return entries_[static_cast<size_t>(i) * dim_ + j];
  }

  std::vector<Rat> bracket(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
  Mat ad(const std::vector<Rat>& x) const;
  Mat killing_matrix() const;
  size_t nonzero_pairs() const;  // ordered pairs i<j with a nonzero bracket

 private:
  int dim_;
  std::vector<std::vector<std::pair<int, long>>> entries_;
};

/// Direct sum with a k-dimensional abelian algebra (zero brackets on the new
/// coordinates); used to exercise degenerate Killing forms.
StructureTable direct_sum_with_abelian(const StructureTable& t, int k);

bool killing_nondegenerate(const StructureTable& t);

class LieAlgebra;
using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Element of a LieAlgebra: rational coefficients over the Chevalley basis.
struct Element {
  LieAlgebraPtr parent;
  std::vector<Rat> c;

  bool is_zero() const;
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Rat& s) const;
};

/// Chevalley basis of the semisimple algebra attached to a root system:
/// basis h_1..h_rank (simple coroots) followed by e_beta in root order.
/// All structure constants are integers; N_{alpha,beta} = +-(p+1) with signs
/// fixed by the extraspecial-pair normalization over the (height, lex) root
/// order, so tables are reproducible across runs.
class LieAlgebra : public std::enable_shared_from_this<LieAlgebra> {
 public:
  static LieAlgebraPtr build(const RootSystemPtr& rs);

  const RootSystemPtr& root_system() const { return rs_; }
  int dim() const { return table_.dim(); }
  int rank() const { return rs_->rank(); }
  const StructureTable& table() const { return table_; }

  int basis_index_of_root(int root_index) const { return rs_->rank() + root_index; }
  const std::string& basis_label(int i) const { return labels_[i]; }

  Element zero() const;
  Element basis_element(int i) const;
  Element cartan_element(int i) const;              // h_i
  Element root_vector(const IVec& root_coords) const;  // e_beta
  Element element(std::vector<Rat> coeffs) const;

  Element bracket(const Element& x, const Element& y) const;
  Mat ad_matrix(const Element& x) const;
  bool killing_nondegenerate() const;

  /// Structure constant N_{alpha,beta} with [e_a,e_b] = N e_{a+b}; zero when
  /// the sum is not a root.
  long structure_n(const IVec& alpha, const IVec& beta) const;

  void save_cache(std::ostream& os) const;
  /// Reads a table written by save_cache; throws when the header does not
  /// match this root system. Bit-exact round trip (integers only).
  static LieAlgebraPtr load_cache(const RootSystemPtr& rs, std::istream& is);

 private:
  LieAlgebra() = default;
  static LieAlgebraPtr assemble(const RootSystemPtr& rs, StructureTable table);
  RootSystemPtr rs_;
  StructureTable table_;
  std::vector<std::string> labels_;
};

LieAlgebraPtr chevalley_basis(const RootSystemPtr& rs);

/// chevalley_basis with an optional structure-constant cache: when the
/// environment variable ORBITSYM_CACHE_DIR names a directory, tables are
/// loaded from "<type>.sc" files there and written back after a build.
/// Unreadable cache entries fall back to a fresh build.
LieAlgebraPtr chevalley_basis_cached(const RootSystemPtr& rs);

/// Defining matrix realization of a classical simple algebra in the split
/// convention (forms anti-diagonal). Matrices are indexed by the Chevalley
/// basis; construction verifies that all pairwise brackets reproduce the
/// abstract structure table, which pins the isomorphism.
struct DefiningRep {
  LieAlgebraPtr algebra;
  int n = 0;                // matrix size
  std::vector<Mat> action;  // one matrix per basis element
  Mat form;                 // preserved bilinear form; empty for type A

  Mat matrix_of(const Element& x) const;
};

DefiningRep defining_rep(const LieAlgebraPtr& L);

/// Jordan block sizes of a nilpotent matrix, largest first.
std::vector<int> jordan_type(const Mat& m);

}  // namespace orbitsym

#endif
