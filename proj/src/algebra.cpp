#include "algebra.hpp"

#include <algorithm>
#include <numeric>

namespace leplab {

namespace {

void sort_canonical(std::vector<BlockSet>& atoms) {
  std::sort(atoms.begin(), atoms.end(),
            [](const BlockSet& a, const BlockSet& b) { return a.order(b) < 0; });
}

}  // namespace

FiniteSubalgebra::FiniteSubalgebra(ConstUniversePtr u, std::vector<BlockSet> atoms)
    : uni_(std::move(u)), atoms_(std::move(atoms)) {}

FiniteSubalgebra FiniteSubalgebra::trivial(ConstUniversePtr u) {
  std::vector<BlockSet> atoms{BlockSet::whole(u)};
  return FiniteSubalgebra(std::move(u), std::move(atoms));
}

FiniteSubalgebra FiniteSubalgebra::from_atoms(ConstUniversePtr u, std::vector<BlockSet> atoms) {
  if (atoms.empty()) fail(ErrorCode::invalid_argument, "a subalgebra needs at least one atom");
  BlockSet covered = BlockSet::empty(u);
  for (const BlockSet& a : atoms) {
    if (a.universe() != u) fail(ErrorCode::universe_mismatch, "atom from a different universe");
    if (a.is_empty()) fail(ErrorCode::invalid_argument, "empty atom");
    if (covered.intersects(a)) fail(ErrorCode::invalid_argument, "atoms are not disjoint");
    covered = covered.unite(a);
  }
  if (covered != BlockSet::whole(u))
    fail(ErrorCode::invalid_argument, "atoms do not cover the ground set");
  sort_canonical(atoms);
  return FiniteSubalgebra(std::move(u), std::move(atoms));
}

FiniteSubalgebra FiniteSubalgebra::generate(ConstUniversePtr u,
                                            std::span<const BlockSet> family) {
  std::vector<BlockSet> atoms{BlockSet::whole(u)};
  for (const BlockSet& c : family) {
    if (c.universe() != u)
      fail(ErrorCode::universe_mismatch, "generator from a different universe");
    std::vector<BlockSet> next;
    next.reserve(atoms.size() * 2);
    for (const BlockSet& a : atoms) {
      BlockSet in = a.intersect(c);
      BlockSet out = a.difference(c);
      if (!in.is_empty()) next.push_back(std::move(in));
      if (!out.is_empty()) next.push_back(std::move(out));
    }
    atoms = std::move(next);
  }
  sort_canonical(atoms);
  return FiniteSubalgebra(std::move(u), std::move(atoms));
}

bool FiniteSubalgebra::contains(const BlockSet& c) const {
  return atoms_below(c).has_value();
}

std::optional<std::vector<std::size_t>> FiniteSubalgebra::atoms_below(const BlockSet& c) const {
  if (c.universe() != uni_) fail(ErrorCode::universe_mismatch, "set from a different universe");
  std::vector<std::size_t> below;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    BlockSet cut = atoms_[i].intersect(c);
    if (cut.is_empty()) continue;
    if (cut != atoms_[i]) return std::nullopt;  // c splits an atom
    below.push_back(i);
  }
  return below;
}

FiniteSubalgebra join(const FiniteSubalgebra& b1, const FiniteSubalgebra& b2) {
  if (b1.universe() != b2.universe())
    fail(ErrorCode::universe_mismatch, "join over different universes");
  std::vector<BlockSet> atoms;
  for (const BlockSet& a1 : b1.atoms())
    for (const BlockSet& a2 : b2.atoms()) {
      BlockSet cut = a1.intersect(a2);
      if (!cut.is_empty()) atoms.push_back(std::move(cut));
    }
  return FiniteSubalgebra::from_atoms(b1.universe(), std::move(atoms));
}

FiniteSubalgebra meet(const FiniteSubalgebra& b1, const FiniteSubalgebra& b2) {
  if (b1.universe() != b2.universe())
    fail(ErrorCode::universe_mismatch, "meet over different universes");
  // Union-find over the atoms of both sides, merged along nonempty overlaps.
  std::size_t n1 = b1.atom_count(), n2 = b2.atom_count();
  std::vector<std::size_t> parent(n1 + n2);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j)
      if (b1.atoms()[i].intersects(b2.atoms()[j])) {
        std::size_t a = find(i), b = find(n1 + j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<BlockSet> classes;
  std::vector<long> class_of(n1 + n2, -1);
  for (std::size_t i = 0; i < n1; ++i) {
    std::size_t root = find(i);
    if (class_of[root] < 0) {
      class_of[root] = static_cast<long>(classes.size());
      classes.push_back(b1.atoms()[i]);
    } else {
      classes[class_of[root]] = classes[class_of[root]].unite(b1.atoms()[i]);
    }
  }
  return FiniteSubalgebra::from_atoms(b1.universe(), std::move(classes));
}

bool in_ideal(const BlockSet& c, const IdealSpec& ideal) {
  BlockSet residue = c;
  for (const BlockSet& g : ideal.generators) residue = residue.difference(g);
  return ideal.include_all_finite ? residue.is_finite() : residue.is_empty();
}

bool is_antichain_mod(std::span<const BlockSet> family, const IdealSpec& ideal) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (in_ideal(family[i], ideal)) return false;
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!in_ideal(family[i].intersect(family[j]), ideal)) return false;
  }
  return true;
}

SeparatorStatus separator_status(const BlockSet& b, std::span<const BlockSet> antichain,
                                 const IdealSpec& ideal) {
  if (!is_antichain_mod(antichain, ideal))
    fail(ErrorCode::invalid_argument, "separator_status: family is not an antichain mod ideal");
  BlockSet absorbed = BlockSet::empty(b.universe());
  for (const BlockSet& v : antichain) {
    bool above = in_ideal(v.difference(b), ideal);
    bool apart = in_ideal(v.intersect(b), ideal);
    if (!above && !apart) return SeparatorStatus::not_separator;
    if (!apart) absorbed = absorbed.unite(v);
  }
  return in_ideal(b.sym_difference(absorbed), ideal) ? SeparatorStatus::trivial_separator
                                                     : SeparatorStatus::separator;
}

std::optional<ChainHypothesisViolation> cs_hypothesis_violation(
    ConstUniversePtr u, std::span<const BlockSet> family) {
  std::vector<BlockSet> prefix_union;
  BlockSet acc = BlockSet::empty(u);
  for (const BlockSet& c : family) {
    prefix_union.push_back(acc);  // union of members strictly before c
    acc = acc.unite(c);
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      bool inter_ok = family[i].intersect(family[j]).subset_of(prefix_union[i]);
      bool diff_ok = family[i].difference(family[j]).subset_of(prefix_union[i]);
      if (!inter_ok && !diff_ok) return ChainHypothesisViolation{i, j};
    }
  return std::nullopt;
}

std::vector<BlockSet> cs_normal_form(ConstUniversePtr u, std::span<const BlockSet> family) {
  if (auto v = cs_hypothesis_violation(u, family))
    fail(ErrorCode::invalid_argument,
         "cs_normal_form: hypothesis fails at pair (" + std::to_string(v->i) + "," +
             std::to_string(v->j) + ")");
  std::vector<BlockSet> out;
  BlockSet acc = BlockSet::empty(u);
  for (const BlockSet& c : family) {
    out.push_back(c.difference(acc));
    acc = acc.unite(c);
  }
  if (FiniteSubalgebra::generate(u, family) != FiniteSubalgebra::generate(u, out))
    fail(ErrorCode::internal, "cs_normal_form: generated subalgebras differ");
  return out;
}

}  // namespace leplab
