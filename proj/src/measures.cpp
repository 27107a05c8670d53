#include "measures.hpp"

namespace leplab {

MeasureVec::MeasureVec(std::shared_ptr<const FiniteSubalgebra> algebra)
    : alg_(std::move(algebra)), values_(alg_->atom_count(), Rational(0)) {}

MeasureVec::MeasureVec(std::shared_ptr<const FiniteSubalgebra> algebra,
                       std::vector<Rational> values)
    : alg_(std::move(algebra)), values_(std::move(values)) {
  if (values_.size() != alg_->atom_count())
    fail(ErrorCode::invalid_argument, "measure value count does not match atom count");
}

void MeasureVec::set_atom_value(std::size_t atom_index, Rational v) {
  if (atom_index >= values_.size()) fail(ErrorCode::invalid_argument, "atom index out of range");
  values_[atom_index] = std::move(v);
}

Rational MeasureVec::norm() const {
  Rational total(0);
  for (const Rational& v : values_) total += abs(v);
  return total;
}

Rational MeasureVec::evaluate(const BlockSet& c) const {
  auto below = alg_->atoms_below(c);
  if (!below) fail(ErrorCode::invalid_argument, "evaluate: set is not in the algebra");
  Rational total(0);
  for (std::size_t i : *below) total += values_[i];
  return total;
}

bool compatible(const MeasureVec& m1, const MeasureVec& m2) {
  if (m1.algebra()->universe() != m2.algebra()->universe())
    fail(ErrorCode::universe_mismatch, "compatible: measures over different universes");
  FiniteSubalgebra common = meet(*m1.algebra(), *m2.algebra());
  for (const BlockSet& atom : common.atoms())
    if (m1.evaluate(atom) != m2.evaluate(atom)) return false;
  return true;
}

}  // namespace leplab
