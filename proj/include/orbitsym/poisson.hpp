#ifndef ORBITSYM_POISSON_HPP
#define ORBITSYM_POISSON_HPP

#include <map>
#include <optional>
#include <vector>

#include "orbitsym/chevalley.hpp"
#include "orbitsym/report.hpp"
#include "orbitsym/representations.hpp"

namespace orbitsym {

/// Sparse polynomial with exact rational coefficients; monomials are dense
/// exponent vectors over a fixed variable count.
class Polynomial {
 public:
  using Mono = IVec;

  Polynomial() = default;
  explicit Polynomial(int nvars) : nvars_(nvars) {}
  static Polynomial variable(int nvars, int i);
  static Polynomial constant(int nvars, const Rat& c);

  int nvars() const { return nvars_; }
  const std::map<Mono, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Mono& m, const Rat& c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& c) const;
  bool operator==(const Polynomial& o) const;

  Polynomial derivative(int i) const;
  Rat coefficient(const Mono& m) const;

  /// Grade of a monomial under per-variable weights.
  static long grade_of(const Mono& m, const std::vector<int>& weights);
  /// The common grade of all terms, or nullopt when inhomogeneous
  /// (zero polynomials report grade 0).
  std::optional<long> homogeneous_grade(const std::vector<int>& weights) const;

 private:
  int nvars_ = 0;
  std::map<Mono, Rat> terms_;
};

/// Coordinates with grade weights and an antisymmetric coordinate bracket,
/// extended to polynomials by the Leibniz rule.
class PoissonAlgebra {
 public:
  /// Linear functions on the dual of L: {x_i, x_j} = sum c^k_{ij} x_k,
  /// every coordinate of grade 2.
  static PoissonAlgebra lie_poisson(const LieAlgebraPtr& L);
  /// Constant brackets {z_i, z_j} = beta_ij, every coordinate of grade 1.
  static PoissonAlgebra symplectic(const Mat& beta);

  int nvars() const { return nvars_; }
  const std::vector<int>& grades() const { return grades_; }
  Polynomial bracket(const Polynomial& f, const Polynomial& g) const;

 private:
  int nvars_ = 0;
  std::vector<int> grades_;
  std::map<std::pair<int, int>, Polynomial> pair_brackets_;  // i < j
};

/// Randomized exact check of the degree rule [R(k), R(l)] in R(k+l-2):
/// homogeneous pairs up to grade 8, fixed seed for reproducibility.
Report grading_check(const LieAlgebraPtr& L, int samples, unsigned seed = 20240611);

/// The flat model: coordinates z_1..z_2n of grade 1, bracket given by the
/// standard block symplectic form, and the quadratics realizing sp(2n).
struct SymplecticModel {
  int n = 0;
  Mat beta;
  PoissonAlgebra algebra;
  LieAlgebraPtr sp;                // C_n (A1 when n = 1); null for synthetic models
  std::vector<Polynomial> moment;  // per Chevalley basis element of sp
};

SymplecticModel sp_min_cover_model(int n);
/// Model with an arbitrary alternating coordinate bracket and no moment
/// quadratics; exercises degenerate cases.
SymplecticModel synthetic_model(const Mat& beta);

/// Linear part plus constants is a Heisenberg algebra: coordinate brackets
/// are the constants of a nondegenerate alternating form, so the center is
/// exactly the constants.
bool heisenberg_check(const SymplecticModel& model);

/// Matrix of {moment[basis], -} acting on the span of the coordinates.
Mat moment_linear_action(const SymplecticModel& model, int basis_index);

/// Moment image as a matrix of quadratics via the trace-form pairing; the
/// image of any point is rank one, checked symbolically (all 2x2 minors
/// vanish identically).
bool moment_rank_one(const SymplecticModel& model);

/// s = r + u with u an abelian ideal and no r-invariant vectors in u.
struct SemidirectSum {
  LieAlgebraPtr r;
  ModuleRepPtr u;
  StructureTable table;  // basis: r basis then u basis
};

SemidirectSum semidirect_sum(const LieAlgebraPtr& r, const ModuleRepPtr& u);

struct TransitivityResult {
  int dim_s_orbit = 0;
  int dim_r_orbit = 0;
  bool equal = false;
};

/// Coadjoint orbit dimensions at gamma = mu + lambda through the ranks of
/// the pairing gamma([.,.]); equality detects when the subalgebra orbit
/// fills the whole orbit.
TransitivityResult coadjoint_transitivity(const SemidirectSum& s, const std::vector<Rat>& mu,
                                          const std::vector<Rat>& lambda);

/// Randomized rational trials: equality must hold exactly when lambda = 0.
Report transitivity_trials(const SemidirectSum& s, int trials, unsigned seed = 20240611);

}  // namespace orbitsym

#endif
