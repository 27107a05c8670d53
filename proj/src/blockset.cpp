#include "blockset.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace leplab {

std::string to_string(const PointId& p) {
  return "b" + std::to_string(p.block) + ":p" + std::to_string(p.index);
}

PointId parse_point(const std::string& s) {
  // expected shape: b<k>:p<j>
  auto bad = [&]() -> PointId { fail(ErrorCode::parse_error, "malformed point id: '" + s + "'"); };
  if (s.size() < 4 || s[0] != 'b') return bad();
  auto colon = s.find(":p");
  if (colon == std::string::npos) return bad();
  PointId p;
  auto r1 = std::from_chars(s.data() + 1, s.data() + colon, p.block);
  auto r2 = std::from_chars(s.data() + colon + 2, s.data() + s.size(), p.index);
  if (r1.ec != std::errc() || r1.ptr != s.data() + colon || r2.ec != std::errc() ||
      r2.ptr != s.data() + s.size()) {
    return bad();
  }
  return p;
}

Universe::Universe(std::uint32_t block_count)
    : block_count_(block_count), named_(block_count, 0) {}

std::shared_ptr<Universe> Universe::create(std::uint32_t block_count) {
  if (block_count == 0) fail(ErrorCode::invalid_argument, "universe needs at least one block");
  return std::shared_ptr<Universe>(new Universe(block_count));
}

std::uint32_t Universe::named_count(BlockId b) const {
  std::shared_lock lock(mu_);
  if (b >= block_count_) fail(ErrorCode::invalid_argument, "block id out of range");
  return named_[b];
}

PointId Universe::fresh_point(BlockId b) {
  std::unique_lock lock(mu_);
  if (b >= block_count_) fail(ErrorCode::invalid_argument, "block id out of range");
  return PointId{b, named_[b]++};
}

void Universe::ensure_points(BlockId b, std::uint32_t count) {
  std::unique_lock lock(mu_);
  if (b >= block_count_) fail(ErrorCode::invalid_argument, "block id out of range");
  named_[b] = std::max(named_[b], count);
}

bool Universe::knows(const PointId& p) const {
  std::shared_lock lock(mu_);
  return p.block < block_count_ && p.index < named_[p.block];
}

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

BlockSet::BlockSet(ConstUniversePtr u, std::vector<BlockId> blocks, std::vector<PointId> plus,
                   std::vector<PointId> minus)
    : uni_(std::move(u)), blocks_(std::move(blocks)), plus_(std::move(plus)),
      minus_(std::move(minus)) {}

BlockSet BlockSet::empty(ConstUniversePtr u) { return BlockSet(std::move(u), {}, {}, {}); }

BlockSet BlockSet::whole(ConstUniversePtr u) {
  std::vector<BlockId> all(u->block_count());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  return BlockSet(std::move(u), std::move(all), {}, {});
}

BlockSet BlockSet::block(ConstUniversePtr u, BlockId b) {
  if (b >= u->block_count()) fail(ErrorCode::invalid_argument, "block id out of range");
  return BlockSet(std::move(u), {b}, {}, {});
}

BlockSet BlockSet::of_blocks(ConstUniversePtr u, std::vector<BlockId> blocks) {
  sort_unique(blocks);
  for (BlockId b : blocks)
    if (b >= u->block_count()) fail(ErrorCode::invalid_argument, "block id out of range");
  return BlockSet(std::move(u), std::move(blocks), {}, {});
}

BlockSet BlockSet::of_points(ConstUniversePtr u, std::vector<PointId> points) {
  sort_unique(points);
  for (const PointId& p : points)
    if (!u->knows(p)) fail(ErrorCode::invalid_argument, "unregistered point " + to_string(p));
  return BlockSet(std::move(u), {}, std::move(points), {});
}

BlockSet BlockSet::make(ConstUniversePtr u, std::vector<BlockId> blocks,
                        std::vector<PointId> plus, std::vector<PointId> minus) {
  sort_unique(blocks);
  sort_unique(plus);
  sort_unique(minus);
  for (BlockId b : blocks)
    if (b >= u->block_count()) fail(ErrorCode::invalid_argument, "block id out of range");
  auto in_blocks = [&](BlockId b) { return std::binary_search(blocks.begin(), blocks.end(), b); };
  for (const PointId& p : plus) {
    if (!u->knows(p)) fail(ErrorCode::invalid_argument, "unregistered point " + to_string(p));
    if (in_blocks(p.block))
      fail(ErrorCode::invalid_argument, "not normal form: plus point " + to_string(p) +
                                            " lies in a full block");
  }
  for (const PointId& p : minus) {
    if (!u->knows(p)) fail(ErrorCode::invalid_argument, "unregistered point " + to_string(p));
    if (!in_blocks(p.block))
      fail(ErrorCode::invalid_argument, "not normal form: minus point " + to_string(p) +
                                            " lies outside the full blocks");
  }
  return BlockSet(std::move(u), std::move(blocks), std::move(plus), std::move(minus));
}

bool BlockSet::has_block(BlockId b) const {
  return std::binary_search(blocks_.begin(), blocks_.end(), b);
}

bool BlockSet::contains(const PointId& p) const {
  if (has_block(p.block)) return !std::binary_search(minus_.begin(), minus_.end(), p);
  return std::binary_search(plus_.begin(), plus_.end(), p);
}

void require_same_universe(const BlockSet& a, const BlockSet& b) {
  if (a.universe() != b.universe())
    fail(ErrorCode::universe_mismatch, "operands belong to different universes");
}

template <typename Op>
BlockSet BlockSet::combine(const BlockSet& o, Op op) const {
  require_same_universe(*this, o);
  std::vector<BlockId> blocks;
  for (std::uint32_t b = 0; b < uni_->block_count(); ++b)
    if (op(has_block(b), o.has_block(b))) blocks.push_back(b);
  auto in_blocks = [&](BlockId b) { return std::binary_search(blocks.begin(), blocks.end(), b); };

  // Only points named by either operand can deviate from their block default.
  std::vector<PointId> touched;
  touched.reserve(plus_.size() + minus_.size() + o.plus_.size() + o.minus_.size());
  for (const auto* v : {&plus_, &minus_, &o.plus_, &o.minus_})
    touched.insert(touched.end(), v->begin(), v->end());
  sort_unique(touched);

  std::vector<PointId> plus, minus;
  for (const PointId& p : touched) {
    bool member = op(contains(p), o.contains(p));
    bool dflt = in_blocks(p.block);
    if (member && !dflt) plus.push_back(p);
    if (!member && dflt) minus.push_back(p);
  }
  return BlockSet(uni_, std::move(blocks), std::move(plus), std::move(minus));
}

BlockSet BlockSet::unite(const BlockSet& o) const {
  return combine(o, [](bool x, bool y) { return x || y; });
}

BlockSet BlockSet::intersect(const BlockSet& o) const {
  return combine(o, [](bool x, bool y) { return x && y; });
}

BlockSet BlockSet::difference(const BlockSet& o) const {
  return combine(o, [](bool x, bool y) { return x && !y; });
}

BlockSet BlockSet::sym_difference(const BlockSet& o) const {
  return combine(o, [](bool x, bool y) { return x != y; });
}

BlockSet BlockSet::complement() const {
  std::vector<BlockId> blocks;
  for (std::uint32_t b = 0; b < uni_->block_count(); ++b)
    if (!has_block(b)) blocks.push_back(b);
  // plus and minus swap roles: removed points reappear, added ones disappear.
  return BlockSet(uni_, std::move(blocks), minus_, plus_);
}

bool BlockSet::is_cofinite() const { return blocks_.size() == uni_->block_count(); }

const std::vector<PointId>& BlockSet::finite_points() const {
  if (!is_finite()) fail(ErrorCode::invalid_argument, "finite_points() on an infinite set");
  return plus_;
}

bool BlockSet::operator==(const BlockSet& o) const {
  return uni_ == o.uni_ && blocks_ == o.blocks_ && plus_ == o.plus_ && minus_ == o.minus_;
}

std::strong_ordering BlockSet::order(const BlockSet& o) const {
  require_same_universe(*this, o);
  if (auto c = blocks_ <=> o.blocks_; c != 0) return c;
  if (auto c = plus_ <=> o.plus_; c != 0) return c;
  return minus_ <=> o.minus_;
}

std::vector<PointId> BlockSet::instantiate(std::uint32_t spare) const {
  if (spare == 0) fail(ErrorCode::invalid_argument, "instantiate requires spare >= 1");
  std::vector<PointId> out;
  for (std::uint32_t b = 0; b < uni_->block_count(); ++b) {
    std::uint32_t named = uni_->named_count(b);
    for (std::uint32_t j = 0; j < named; ++j) {
      PointId p{b, j};
      if (contains(p)) out.push_back(p);
    }
    if (has_block(b)) {
      for (std::uint32_t t = 0; t < spare; ++t) out.push_back(PointId{b, named + t});
    }
  }
  return out;
}

std::string BlockSet::to_string() const {
  std::string s = "{blocks:[";
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    s += (i ? "," : "") + std::to_string(blocks_[i]);
  s += "],plus:[";
  for (std::size_t i = 0; i < plus_.size(); ++i)
    s += (i ? "," : "") + leplab::to_string(plus_[i]);
  s += "],minus:[";
  for (std::size_t i = 0; i < minus_.size(); ++i)
    s += (i ? "," : "") + leplab::to_string(minus_[i]);
  return s + "]}";
}

}  // namespace leplab
