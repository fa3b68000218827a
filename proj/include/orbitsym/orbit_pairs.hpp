#ifndef ORBITSYM_ORBIT_PAIRS_HPP
#define ORBITSYM_ORBIT_PAIRS_HPP

#include <string>
#include <vector>

#include "orbitsym/nilpotent_orbits.hpp"
#include "orbitsym/report.hpp"
#include "orbitsym/representations.hpp"

namespace orbitsym {

/// Orbit cover: always the simply connected cover; the covering degree over
/// the orbit itself is catalog metadata, not computed.
struct CoverSpec {
  OrbitSpec orbit;
  int cover_degree = 1;
};

/// One catalog entry: the pair (g in g'), the orbit choice, the expected
/// module column, and the weight restriction realizing g inside g'.
struct PairRecord {
  int row = 0;
  std::string label;
  SimpleType g, g_prime;
  CoverSpec cover;
  /// Expected modules over g in its own labeling (dimension and eigenspace
  /// checks).
  std::vector<std::pair<Weight, long>> v_modules;
  /// The same modules in the labeling that the constructed embedding
  /// induces (branching check); usually identical to v_modules.
  std::vector<std::pair<Weight, long>> v_modules_branch;
  WeightRestriction embedding;  // g' weights -> g weights
};

/// All table rows; the two infinite families are instantiated at their two
/// smallest legal ranks (rows 2 and 3 at n = 2, 3; row 6 at n = 3, 4).
std::vector<PairRecord> catalog();
PairRecord catalog_record(int row, int n = 0);

/// Per-orbit computation shared by the eigenspace checks.
struct OrbitContext {
  LieAlgebraPtr L;
  Element e;
  Sl2Triple triple;
  std::vector<Element> cent;
};

OrbitContext make_orbit_context(const LieAlgebraPtr& L, const OrbitSpec& spec);

/// dim of the h-eigenspace at k inside the centralizer invariants of the
/// dual module: the multiplicity of V in the degree-k graded piece.
int eigenspace_multiplicity(const OrbitContext& ctx, const ModuleRep& V, int k);

/// Scans every dominant weight with weyl_dim <= scan_bound, excluding the
/// trivial and adjoint weights, and returns the ones with a nonzero
/// eigenspace multiplicity at k. k = 2 recovers the module column of the
/// table; k = 1 detects free generators of degree one.
std::vector<std::pair<Weight, long>> graded_multiplicities(ModuleFactory& factory,
                                                           const OrbitContext& ctx,
                                                           long scan_bound, int k);

inline constexpr long kDefaultScanBound = 120;

/// Checks one catalog row: dimension identity, branching of the adjoint,
/// matching orbit dimensions (with the partition formula as a second oracle
/// where applicable), the degree-2 scan, and semisimplicity of g'.
/// Failures are recorded in the report, never thrown.
Report verify_pair(const PairRecord& rec, long scan_bound = kDefaultScanBound);

struct ChainMember {
  SimpleType type;
  OrbitSpec orbit;
};

struct ChainSpec {
  std::string label;
  std::vector<ChainMember> members;                 // small to large
  std::vector<WeightRestriction> embeddings;        // per consecutive pair
  std::vector<std::vector<std::pair<Weight, long>>> step_modules;  // expected V per step
  int bottom_row = 0;  // table row whose module column the bottom scan must reproduce
};

/// The two triples sharing one orbit: so(8) in so(9) in F4 and
/// G2 in so(7) in so(8).
std::vector<ChainSpec> chain_catalog();

/// Consecutive pairs pass the dimension, branching and orbit-dimension
/// checks; orbit dimensions are constant along the chain; the degree-2 scan
/// of the bottom member reproduces the module column of its table row.
Report verify_chain(const ChainSpec& chain, long scan_bound = kDefaultScanBound);

/// Degree-2 scan minus the adjoint for the orbit itself (trivial cover).
/// Nonempty output certifies that the orbit closure is not normal; empty
/// output is inconclusive.
std::vector<std::pair<Weight, long>> normality_obstruction(ModuleFactory& factory,
                                                           const OrbitContext& ctx,
                                                           long scan_bound = kDefaultScanBound);

/// rank g' > rank g whenever the cover is trivial, and every equal-rank row
/// has a nontrivial cover.
Report rank_rule_check(const std::vector<PairRecord>& records);

nlohmann::json weight_list_json(const std::vector<std::pair<Weight, long>>& v);

}  // namespace orbitsym

#endif
