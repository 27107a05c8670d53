#pragma once

#include <memory>
#include <vector>

#include "algebra.hpp"
#include "rational.hpp"

namespace leplab {

// A finitely additive rational signed measure on a finite subalgebra,
// represented by its values on the atoms (an l1 vector).
class MeasureVec {
 public:
  // Zero measure.
  explicit MeasureVec(std::shared_ptr<const FiniteSubalgebra> algebra);
  MeasureVec(std::shared_ptr<const FiniteSubalgebra> algebra, std::vector<Rational> values);

  const std::shared_ptr<const FiniteSubalgebra>& algebra() const { return alg_; }
  const std::vector<Rational>& values() const { return values_; }

  void set_atom_value(std::size_t atom_index, Rational v);

  // Total variation norm: sum of absolute atom values.
  Rational norm() const;

  // Measure of a member set of the algebra (sum over the atoms below it).
  Rational evaluate(const BlockSet& c) const;

 private:
  std::shared_ptr<const FiniteSubalgebra> alg_;
  std::vector<Rational> values_;
};

// Two measures on subalgebras of a common universe are compatible when they
// agree on the intersection subalgebra; by additivity it is enough to agree
// on its atoms.
bool compatible(const MeasureVec& m1, const MeasureVec& m2);

}  // namespace leplab
