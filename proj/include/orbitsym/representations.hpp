#ifndef ORBITSYM_REPRESENTATIONS_HPP
#define ORBITSYM_REPRESENTATIONS_HPP

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "orbitsym/chevalley.hpp"
#include "orbitsym/root_system.hpp"

namespace orbitsym {

/// Weights live in fundamental coordinates throughout.
using Weight = IVec;

/// Formal character: weight -> multiplicity. Weyl-invariant for genuine
/// module characters.
struct Character {
  RootSystemPtr rs;
  std::unordered_map<Weight, long, IVecHash> mults;

  long total() const;
  long mult(const Weight& w) const;
  void add(const Weight& w, long m);
  Character& operator+=(const Character& o);
  Character& subtract(const Character& o, long times);  // may go negative
  bool operator==(const Character& o) const;
};

/// Weyl dimension formula; exact, throws on non-dominant input.
long weyl_dim(const RootSystemPtr& rs, const Weight& hw);

/// Multiplicities by the Freudenthal recursion; total equals weyl_dim.
Character freudenthal_character(const RootSystemPtr& rs, const Weight& hw);

/// Roots with multiplicity one plus the zero weight with multiplicity rank.
Character adjoint_character(const RootSystemPtr& rs);

Character tensor_character(const Character& a, const Character& b);

/// Greedy peeling by the maximal dominant weight; reconstructs the input
/// exactly or throws when the residue goes negative.
std::vector<std::pair<Weight, long>> peel_decompose(const Character& c);

/// Weight-multiset image under a restriction map (folding or subsystem).
Character branch_character(const Character& src, const WeightRestriction& r);

/// Explicit module: one rational matrix per basis element of the algebra,
/// with a weight attached to every module basis vector.
struct ModuleRep {
  LieAlgebraPtr algebra;
  int dim = 0;
  Weight highest;
  std::vector<Mat> action;      // indexed like the Chevalley basis
  std::vector<Weight> weights;  // per module basis vector

  Mat action_of(const Element& x) const;
};

using ModuleRepPtr = std::shared_ptr<const ModuleRep>;

Character character_of(const ModuleRep& m);

/// Dual module: negative transposed actions, negated weights.
ModuleRepPtr dual_module(const ModuleRepPtr& m);

/// Builds and caches irreducible realizations over one algebra.
///
/// Hosts are tensor products (up to three factors within the dimension
/// bound) of available modules: the adjoint, the defining and spin modules
/// for classical types, a 26-dimensional seed for F4 obtained from the
/// diagram involution of E6, and anything realized earlier. A highest
/// weight vector of the target weight is cut out as the joint kernel of the
/// raising operators and closed under the lowering operators; the character
/// of the result is checked against the Freudenthal multiplicities.
class ModuleFactory {
 public:
  explicit ModuleFactory(LieAlgebraPtr L, long dim_bound = 3000);

  const LieAlgebraPtr& algebra() const { return L_; }
  long dim_bound() const { return bound_; }

  ModuleRepPtr realize(const Weight& hw);
  const Character& character(const Weight& hw);

 private:
  std::vector<ModuleRepPtr> available_sorted() const;

  LieAlgebraPtr L_;
  long bound_;
  std::vector<ModuleRepPtr> seeds_;
  std::map<Weight, ModuleRepPtr> cache_;
  std::map<Weight, Character> chars_;
};

/// Adjoint realization (ad matrices with root weights).
ModuleRepPtr adjoint_rep(const LieAlgebraPtr& L);

/// Defining realization wrapped as a module (classical types).
ModuleRepPtr defining_module(const LieAlgebraPtr& L);

/// Spin modules over the exterior algebra of a maximal isotropic subspace:
/// the 2^n-dimensional spin module for B_n, the two half-spin modules for
/// D_n. Generator images are fermionic creation/annihilation products.
ModuleRepPtr spin_module(const LieAlgebraPtr& L);                 // B_n
std::pair<ModuleRepPtr, ModuleRepPtr> half_spin_modules(const LieAlgebraPtr& L);  // D_n

/// The 26-dimensional F4 module realized as the (-1)-eigenspace of the
/// order-2 diagram involution acting on the E6 adjoint; the +1 eigenspace
/// is the F4 copy and acts by restriction of ad.
ModuleRepPtr f4_26_module(const LieAlgebraPtr& f4);

}  // namespace orbitsym

#endif
