#pragma once

#include <optional>
#include <span>
#include <vector>

#include "blockset.hpp"

namespace leplab {

// A finite subalgebra of the block-set algebra, stored as its atom partition.
// Atoms are pairwise disjoint, nonempty, cover the whole ground set, and are
// kept in canonical (normal-form) order so serialization is deterministic.
class FiniteSubalgebra {
 public:
  static FiniteSubalgebra trivial(ConstUniversePtr u);
  // Validates that `atoms` is a partition of the ground set.
  static FiniteSubalgebra from_atoms(ConstUniversePtr u, std::vector<BlockSet> atoms);
  // Subalgebra generated by an arbitrary finite family, via iterated
  // refinement of {C, C^c} cells.
  static FiniteSubalgebra generate(ConstUniversePtr u, std::span<const BlockSet> family);

  const ConstUniversePtr& universe() const { return uni_; }
  const std::vector<BlockSet>& atoms() const { return atoms_; }
  std::size_t atom_count() const { return atoms_.size(); }

  // True iff c is a union of atoms.
  bool contains(const BlockSet& c) const;
  // Indices of the atoms below c, or nullopt when c is not in the subalgebra.
  std::optional<std::vector<std::size_t>> atoms_below(const BlockSet& c) const;

  bool operator==(const FiniteSubalgebra& o) const {
    return uni_ == o.uni_ && atoms_ == o.atoms_;
  }

 private:
  FiniteSubalgebra(ConstUniversePtr u, std::vector<BlockSet> atoms);

  ConstUniversePtr uni_;
  std::vector<BlockSet> atoms_;
};

// Join: coarsest common refinement (atoms = nonempty pairwise intersections).
FiniteSubalgebra join(const FiniteSubalgebra& b1, const FiniteSubalgebra& b2);
// Meet: the intersection subalgebra; its atoms are unions of connected
// components of the bipartite atom-overlap graph.
FiniteSubalgebra meet(const FiniteSubalgebra& b1, const FiniteSubalgebra& b2);

// An ideal given by finitely many generators, optionally together with all
// finite sets. Empty generators with the flag off is the degenerate ideal {0}.
struct IdealSpec {
  std::vector<BlockSet> generators;
  bool include_all_finite = true;
};

// Membership: c minus the union of generators must be finite (or empty when
// the ideal does not contain the finite sets).
bool in_ideal(const BlockSet& c, const IdealSpec& ideal);

// No member lies in the ideal and all pairwise intersections do.
bool is_antichain_mod(std::span<const BlockSet> family, const IdealSpec& ideal);

enum class SeparatorStatus { not_separator, separator, trivial_separator };

// Classifies b against an antichain modulo the ideal: a separator lies above
// or apart from every member; a trivial separator additionally agrees with
// the union of the members it absorbs.
SeparatorStatus separator_status(const BlockSet& b, std::span<const BlockSet> antichain,
                                 const IdealSpec& ideal);

struct ChainHypothesisViolation {
  std::size_t i = 0;
  std::size_t j = 0;
};

// Successive-difference normal form: given C_0..C_{n-1} such that for i < j
// either C_i ∩ C_j or C_i \ C_j is contained in the union of the C_k, k < i,
// returns D_i = C_i \ (C_0 ∪ ... ∪ C_{i-1}). The D_i generate the same
// subalgebra as the C_i; the equality is asserted. A hypothesis violation is
// reported with the witnessing index pair.
std::vector<BlockSet> cs_normal_form(ConstUniversePtr u, std::span<const BlockSet> family);

// Hypothesis check alone; nullopt when the family qualifies.
std::optional<ChainHypothesisViolation> cs_hypothesis_violation(ConstUniversePtr u,
                                                                std::span<const BlockSet> family);

}  // namespace leplab
