#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "rational.hpp"

namespace leplab {

using Cell = std::pair<std::uint32_t, std::uint32_t>;  // (row label index, column label index)

// A point diagram: two finite label sets and a set of cells projecting onto
// both. Encodes how two finite subalgebras sit inside their join: labels are
// atoms, cells are nonempty atom intersections.
class PointDiagram {
 public:
  static PointDiagram make(std::vector<std::string> f1, std::vector<std::string> f2,
                           std::vector<Cell> cells);
  // Diagram of a pair of subalgebras over one universe; labels default to
  // "a<i>" / "b<j>" in canonical atom order unless supplied.
  static PointDiagram from_subalgebras(std::shared_ptr<const FiniteSubalgebra> b1,
                                       std::shared_ptr<const FiniteSubalgebra> b2,
                                       std::vector<std::string> f1_labels = {},
                                       std::vector<std::string> f2_labels = {});

  const std::vector<std::string>& f1() const { return f1_; }
  const std::vector<std::string>& f2() const { return f2_; }
  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t label_total() const { return f1_.size() + f2_.size(); }
  bool has_cell(std::uint32_t i, std::uint32_t j) const;

  // Source subalgebras when built via from_subalgebras, else null.
  const std::shared_ptr<const FiniteSubalgebra>& source1() const { return src1_; }
  const std::shared_ptr<const FiniteSubalgebra>& source2() const { return src2_; }

 private:
  PointDiagram() = default;

  std::vector<std::string> f1_, f2_;
  std::vector<Cell> cells_;  // sorted
  std::shared_ptr<const FiniteSubalgebra> src1_, src2_;
};

// A rook component: the restriction of a diagram to one class of the
// transitive same-row-or-same-column relation, with maps back to the parent.
struct RookComponent {
  PointDiagram diagram;
  std::vector<std::uint32_t> rows;  // parent indices of the component's F1 labels
  std::vector<std::uint32_t> cols;
  std::vector<std::size_t> cell_indices;  // positions in the parent cell list
};

// Connected components of the rook relation, in canonical order (sorted by
// smallest row index). A diagram is indecomposable iff there is exactly one.
std::vector<RookComponent> rook_components(const PointDiagram& d);

// A layered certificate: labels split into layers 0..k with singleton top
// layers whose product cell is present, and every lower label adjacent to a
// strictly higher layer on the other side. Witnesses an extension-constant
// bound of k + 1/2.
struct Layering {
  int k = 0;
  std::vector<std::vector<std::uint32_t>> parts1;  // label indices per layer, 0..k
  std::vector<std::vector<std::uint32_t>> parts2;
};

// Verifies the four layer conditions. Throws on a malformed partition,
// returns false when the partition is valid but some condition fails.
bool check_layering(const PointDiagram& d, const Layering& layering);

// Smallest k admitting a valid layering, with certificate, or nullopt when no
// layering exists for any k. Complete search: a minimal layering never has a
// layer below the top that is empty on both sides, so k ≤ |F1|+|F2|−2.
std::optional<Layering> minimal_layering(const PointDiagram& d, std::size_t label_cap = 16);

// A pair of prospective marginals, aligned with the diagram's label order.
struct PairVec {
  std::vector<Rational> f1, f2;

  Rational norm_sum() const;
  bool operator==(const PairVec&) const = default;
};

// Compatibility: equal sums over the two sides of every rook component.
bool compatible_pair(const PointDiagram& d, const PairVec& v);

// A vector over the diagram's cells (a candidate common extension).
struct Extension {
  std::vector<Rational> values;  // aligned with d.cells()

  Rational norm() const;
};

// Row/column sums of an extension; equals v exactly iff g extends v.
PairVec marginals(const PointDiagram& d, const Extension& g);

// One induction step of the constructive extension: given a split of the
// label sets into peeled parts (I1, I2) and a retained subdiagram on
// (J1, J2), a choice of neighbors phi: I1 -> J2 and psi: I2 -> J1 inside X,
// and a common extension `inner` of the reduced pair on the subdiagram,
// assembles a common extension of v on the whole diagram with
// |g| <= |inner| + |f1| + |f2|.
struct SplitSpec {
  std::vector<std::uint32_t> peeled_rows;  // I1
  std::vector<std::uint32_t> peeled_cols;  // I2
  std::vector<std::uint32_t> phi;          // aligned with peeled_rows, values are column indices
  std::vector<std::uint32_t> psi;          // aligned with peeled_cols, values are row indices
};

// The reduced pair on the retained subdiagram: f1 minus the masses routed in
// through psi, f2 minus the masses routed in through phi.
PairVec reduced_pair(const PointDiagram& d, const SplitSpec& split, const PairVec& v);

Extension extend_with_split(const PointDiagram& d, const SplitSpec& split, const PairVec& v,
                            const PointDiagram& subdiagram, const Extension& inner);

// Constructive common extension along a verified layering, by induction on
// the number of layers; the result has exact marginals v and
// |g| <= (k + 1/2) (|f1| + |f2|).
Extension extend_by_layering(const PointDiagram& d, const Layering& layering, const PairVec& v);

// Subdiagram on a subset of labels (cells inside the sub-rectangle), with
// parent index maps. Throws unless the restriction projects onto both sides.
PointDiagram restrict_diagram(const PointDiagram& d, const std::vector<std::uint32_t>& rows,
                              const std::vector<std::uint32_t>& cols);

}  // namespace leplab
