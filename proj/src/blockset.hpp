#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "errors.hpp"

namespace leplab {

using BlockId = std::uint32_t;

// A named point of the ground set. Every point belongs to exactly one block;
// the pair (block, index) is the identity and never changes.
struct PointId {
  BlockId block = 0;
  std::uint32_t index = 0;
  auto operator<=>(const PointId&) const = default;
};

std::string to_string(const PointId& p);     // "b<k>:p<j>"
PointId parse_point(const std::string& s);

// The abstract ground set: finitely many infinite blocks plus a registry of
// named points, created on demand. The registry is append-only; reads may be
// concurrent, appends are serialized.
class Universe {
 public:
  static std::shared_ptr<Universe> create(std::uint32_t block_count);

  std::uint32_t block_count() const { return block_count_; }

  // Number of named points registered in block b.
  std::uint32_t named_count(BlockId b) const;

  // Registers a fresh named point in block b.
  PointId fresh_point(BlockId b);

  // Grows the registry of block b to at least `count` points (deserialization).
  void ensure_points(BlockId b, std::uint32_t count);

  // True iff p is registered.
  bool knows(const PointId& p) const;

 private:
  explicit Universe(std::uint32_t block_count);

  std::uint32_t block_count_;
  mutable std::shared_mutex mu_;
  std::vector<std::uint32_t> named_;
};

using UniversePtr = std::shared_ptr<Universe>;
using ConstUniversePtr = std::shared_ptr<const Universe>;

// A subset of the ground set in normal form: a union of whole blocks, plus
// finitely many named points outside those blocks, minus finitely many named
// points inside them. Immutable after construction; equality is structural.
class BlockSet {
 public:
  static BlockSet empty(ConstUniversePtr u);
  static BlockSet whole(ConstUniversePtr u);
  static BlockSet block(ConstUniversePtr u, BlockId b);
  static BlockSet of_blocks(ConstUniversePtr u, std::vector<BlockId> blocks);
  static BlockSet of_points(ConstUniversePtr u, std::vector<PointId> points);
  // Validating factory for deserialized data; requires exact normal form.
  static BlockSet make(ConstUniversePtr u, std::vector<BlockId> blocks,
                       std::vector<PointId> plus, std::vector<PointId> minus);

  const ConstUniversePtr& universe() const { return uni_; }
  const std::vector<BlockId>& full_blocks() const { return blocks_; }
  const std::vector<PointId>& plus() const { return plus_; }
  const std::vector<PointId>& minus() const { return minus_; }

  bool has_block(BlockId b) const;
  bool contains(const PointId& p) const;

  BlockSet unite(const BlockSet& o) const;
  BlockSet intersect(const BlockSet& o) const;
  BlockSet difference(const BlockSet& o) const;
  BlockSet sym_difference(const BlockSet& o) const;
  BlockSet complement() const;

  bool is_empty() const { return blocks_.empty() && plus_.empty(); }
  bool is_finite() const { return blocks_.empty(); }
  bool is_cofinite() const;
  bool subset_of(const BlockSet& o) const { return difference(o).is_empty(); }
  bool intersects(const BlockSet& o) const { return !intersect(o).is_empty(); }

  // The named points of a finite set (valid only when is_finite()).
  const std::vector<PointId>& finite_points() const;

  bool operator==(const BlockSet& o) const;
  bool operator!=(const BlockSet& o) const { return !(*this == o); }
  // Total order on normal forms over a shared universe; used for canonical
  // atom ordering and deterministic serialization.
  std::strong_ordering order(const BlockSet& o) const;

  // Finite model: each block contributes its named points plus `spare` fresh
  // anonymous ones (indices past the registry). Boolean operations commute
  // with instantiation at fixed spare, which is the testing oracle for them.
  std::vector<PointId> instantiate(std::uint32_t spare) const;

  std::string to_string() const;

 private:
  BlockSet(ConstUniversePtr u, std::vector<BlockId> blocks, std::vector<PointId> plus,
           std::vector<PointId> minus);

  // result of a pointwise boolean combination; op is evaluated on membership bits
  template <typename Op>
  BlockSet combine(const BlockSet& o, Op op) const;

  ConstUniversePtr uni_;
  std::vector<BlockId> blocks_;  // sorted
  std::vector<PointId> plus_;    // sorted, blocks disjoint from blocks_
  std::vector<PointId> minus_;   // sorted, blocks inside blocks_
};

void require_same_universe(const BlockSet& a, const BlockSet& b);

}  // namespace leplab
