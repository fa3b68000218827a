#ifndef ORBITSYM_ROOT_SYSTEM_HPP
#define ORBITSYM_ROOT_SYSTEM_HPP

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orbitsym/linalg.hpp"
#include "orbitsym/rational.hpp"

namespace orbitsym {

/// Label of one simple factor: family A..G plus rank.
struct SimpleType {
  char family = 'A';
  int rank = 1;

  void validate() const;
  std::string str() const;  // "G2", "B3", ...
  /// Classical alias such as "so(7)", "sp(4)", "sl(3)"; exceptional types
  /// print as their letter name.
  std::string algebra_label() const;

  /// Accepts "B3" style names and the aliases so(n) (n >= 5), sp(2n), sl(n).
  static SimpleType parse(const std::string& s);

  bool operator==(const SimpleType& o) const { return family == o.family && rank == o.rank; }
  bool operator!=(const SimpleType& o) const { return !(*this == o); }
};

size_t expected_root_count(const SimpleType& t);

/// Root system of a semisimple type (usually simple; products arise from
/// closed subsystems). Roots are stored as integer coordinate vectors in
/// the simple-root basis; Euclidean data is derived from the Cartan matrix
/// and the per-node values d(i) = (alpha_i, alpha_i)/2, normalized so that
/// short roots have squared length 2.
///
/// Root order: positive roots first, sorted by (height, lex); the negative
/// of roots()[k] sits at roots()[num_positive()+k]. Immutable after build.
class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(const SimpleType& t);
  static std::shared_ptr<const RootSystem> build(const std::vector<SimpleType>& comps);

  const std::vector<SimpleType>& components() const { return components_; }
  bool is_simple() const { return components_.size() == 1; }
  const SimpleType& type() const;
  int rank() const { return rank_; }
  size_t num_roots() const { return roots_.size(); }
  size_t num_positive() const { return roots_.size() / 2; }
  const std::vector<IVec>& roots() const { return roots_; }

  int root_index(const IVec& coords) const;  // -1 when not a root
  bool is_root(const IVec& coords) const { return root_index(coords) >= 0; }

  int cartan(int i, int j) const { return cartan_[i][j]; }  // <alpha_j, alpha_i^vee>
  const std::vector<IVec>& cartan_matrix() const { return cartan_; }
  const Mat& cartan_inverse() const { return cartan_inv_; }
  int d(int i) const { return d_[i]; }

  int height(const IVec& root_coords) const { return ivec_sum(root_coords); }
  int length2(const IVec& root_coords) const;
  int max_length2() const { return max_len2_; }
  int min_length2() const { return min_len2_; }
  bool doubly_laced() const { return max_len2_ != min_len2_; }

  /// Fundamental-weight coordinates of a root: m = C * c.
  IVec weight_of_root(const IVec& root_coords) const;
  /// Coordinates of beta^vee over the simple coroots (always integral).
  IVec coroot(const IVec& root_coords) const;
  /// <weight, beta^vee> for a weight in fundamental coordinates.
  int pairing(const IVec& weight, const IVec& root_coords) const;
  /// Invariant bilinear form on weights (fundamental coordinates).
  Rat inner(const IVec& wa, const IVec& wb) const;
  /// Root coordinates of a weight (rational in general).
  std::vector<Rat> weight_to_root_coords(const IVec& weight) const;

  IVec reflect_root(const IVec& root_coords, int i) const;
  IVec reflect_weight(const IVec& weight, int i) const;
  bool dominant(const IVec& weight) const;
  IVec dominantize(IVec weight) const;

  /// (highest long root, highest short root); they coincide when one length.
  std::pair<IVec, IVec> highest_roots() const;
  IVec highest_root() const { return highest_roots().first; }

 private:
  RootSystem() = default;
  std::vector<SimpleType> components_;
  int rank_ = 0;
  std::vector<IVec> cartan_;
  std::vector<int> d_;
  std::vector<IVec> roots_;
  std::unordered_map<IVec, int, IVecHash> index_;
  Mat cartan_inv_;
  int max_len2_ = 2, min_len2_ = 2;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// A symmetric, addition-closed subset of an ambient root system together
/// with its simple basis and a freestanding system of the detected type.
/// simple_roots are ordered to match the standard node numbering of `sub`.
/// Rank-3 simply-laced components are reported as D3 when the ambient
/// system is doubly laced, as A3 otherwise.
struct Subsystem {
  RootSystemPtr ambient;
  std::vector<IVec> roots;         // ambient root coordinates
  std::vector<IVec> simple_roots;  // ambient root coordinates
  RootSystemPtr sub;
  bool proper = true;
};

Subsystem long_root_subsystem(const RootSystemPtr& rs);
Subsystem closed_subsystem(const RootSystemPtr& rs, const std::vector<IVec>& generators);

/// Diagram folding data. `restriction` maps source fundamental-weight
/// coordinates to target ones by summing over automorphism orbits; rows
/// follow the standard numbering of the folded type.
struct FoldingMap {
  RootSystemPtr source;
  RootSystemPtr target;
  std::vector<int> automorphism;  // permutation of source simple nodes, 0-based
  Mat restriction;                // target.rank x source.rank, integral
};

/// Folds a simply-laced system along a diagram automorphism whose orbits
/// consist of pairwise orthogonal nodes (covers A_{2n-1}->C_n, D_{n+1}->B_n,
/// E6->F4, D4->G2).
FoldingMap fold(const RootSystemPtr& source, const std::vector<int>& automorphism);

/// The so(7) -> G2 restriction obtained by composing the two standard
/// foldings of so(8); not itself a diagram folding of B3.
FoldingMap fold_so7_to_g2();

/// Weight-restriction view shared by foldings and subsystem inclusions;
/// maps weights of the source (larger) system to the target system.
struct WeightRestriction {
  RootSystemPtr source;
  RootSystemPtr target;
  Mat restriction;

  IVec apply(const IVec& weight) const;
};

WeightRestriction restriction_of(const FoldingMap& f);
WeightRestriction restriction_of(const Subsystem& s);

}  // namespace orbitsym

#endif
