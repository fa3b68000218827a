#ifndef ORBITSYM_NILPOTENT_ORBITS_HPP
#define ORBITSYM_NILPOTENT_ORBITS_HPP

#include <map>
#include <string>
#include <vector>

#include "orbitsym/chevalley.hpp"
#include "orbitsym/representations.hpp"

namespace orbitsym {

/// Names a nilpotent orbit: a root vector, a classical Jordan type, the
/// principal orbit, or a search by orbit dimension.
struct OrbitSpec {
  enum class Kind { RootVector, HighestShortRoot, HighestLongRoot, JordanType, Principal, ByDimension };
  Kind kind = Kind::Principal;
  IVec root;                   // RootVector
  std::vector<int> partition;  // JordanType, weakly decreasing
  int dim = 0;                 // ByDimension

  static OrbitSpec root_vector(IVec r);
  static OrbitSpec highest_short_root();
  static OrbitSpec highest_long_root();  // the minimal nontrivial orbit
  static OrbitSpec jordan(std::vector<int> partition);
  static OrbitSpec principal();
  static OrbitSpec by_dimension(int d);

  std::string label() const;
};

struct Sl2Triple {
  Element h, e, f;
};

/// Representative of the named orbit as a Chevalley-basis element.
/// Jordan types and dimension searches enumerate 0/1 sums of positive root
/// vectors by support size, then lexicographically; the first match wins,
/// so representatives are deterministic.
Element orbit_element(const LieAlgebraPtr& L, const OrbitSpec& spec);

/// rank of ad(e): the orbit dimension.
int orbit_dim(const LieAlgebraPtr& L, const Element& e);

void validate_partition(const SimpleType& t, const std::vector<int>& partition);

/// Orbit dimension from the dual-partition centralizer formulas for the
/// classical families; the independent oracle against rank of ad.
int partition_orbit_dim(const SimpleType& t, const std::vector<int>& partition);

/// Completes a nonzero nilpotent to a standard sl2 triple: h is found in
/// the image of ad(e) by one exact solve, then f by another; free variables
/// of the reduced systems are set to zero, so the output is canonical.
Sl2Triple jacobson_morozov(const LieAlgebraPtr& L, const Element& e);

std::vector<Element> centralizer(const LieAlgebraPtr& L, const Element& e);

/// Integer eigenspace decomposition under a semisimple element.
struct Grading {
  std::map<int, std::vector<std::vector<Rat>>> eigenspaces;

  int dim_at(int k) const;
  long total() const;
};

Grading h_grading(const LieAlgebraPtr& L, const Element& h);
Grading h_grading(const ModuleRep& m, const Element& h);

}  // namespace orbitsym

#endif
