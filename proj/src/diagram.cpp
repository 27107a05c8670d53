#include "diagram.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace leplab {

namespace {

bool sorted_unique(const std::vector<Cell>& cells) {
  for (std::size_t i = 1; i < cells.size(); ++i)
    if (!(cells[i - 1] < cells[i])) return false;
  return true;
}

}  // namespace

PointDiagram PointDiagram::make(std::vector<std::string> f1, std::vector<std::string> f2,
                                std::vector<Cell> cells) {
  if (f1.empty() || f2.empty())
    fail(ErrorCode::invalid_argument, "point diagram needs nonempty label sets");
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  std::vector<bool> row_hit(f1.size(), false), col_hit(f2.size(), false);
  for (const Cell& c : cells) {
    if (c.first >= f1.size() || c.second >= f2.size())
      fail(ErrorCode::invalid_argument, "cell index out of range");
    row_hit[c.first] = true;
    col_hit[c.second] = true;
  }
  if (std::find(row_hit.begin(), row_hit.end(), false) != row_hit.end() ||
      std::find(col_hit.begin(), col_hit.end(), false) != col_hit.end())
    fail(ErrorCode::invalid_argument, "projections of the cell set are not onto");
  PointDiagram d;
  d.f1_ = std::move(f1);
  d.f2_ = std::move(f2);
  d.cells_ = std::move(cells);
  return d;
}

PointDiagram PointDiagram::from_subalgebras(std::shared_ptr<const FiniteSubalgebra> b1,
                                            std::shared_ptr<const FiniteSubalgebra> b2,
                                            std::vector<std::string> f1_labels,
                                            std::vector<std::string> f2_labels) {
  if (b1->universe() != b2->universe())
    fail(ErrorCode::universe_mismatch, "diagram of subalgebras over different universes");
  if (f1_labels.empty()) {
    for (std::size_t i = 0; i < b1->atom_count(); ++i) f1_labels.push_back("a" + std::to_string(i));
  }
  if (f2_labels.empty()) {
    for (std::size_t j = 0; j < b2->atom_count(); ++j) f2_labels.push_back("b" + std::to_string(j));
  }
  if (f1_labels.size() != b1->atom_count() || f2_labels.size() != b2->atom_count())
    fail(ErrorCode::invalid_argument, "label count does not match atom count");
  std::vector<Cell> cells;
  for (std::uint32_t i = 0; i < b1->atom_count(); ++i)
    for (std::uint32_t j = 0; j < b2->atom_count(); ++j)
      if (b1->atoms()[i].intersects(b2->atoms()[j])) cells.push_back({i, j});
  PointDiagram d = make(std::move(f1_labels), std::move(f2_labels), std::move(cells));
  d.src1_ = std::move(b1);
  d.src2_ = std::move(b2);
  return d;
}

bool PointDiagram::has_cell(std::uint32_t i, std::uint32_t j) const {
  return std::binary_search(cells_.begin(), cells_.end(), Cell{i, j});
}

PointDiagram restrict_diagram(const PointDiagram& d, const std::vector<std::uint32_t>& rows,
                              const std::vector<std::uint32_t>& cols) {
  if (!std::is_sorted(rows.begin(), rows.end()) || !std::is_sorted(cols.begin(), cols.end()) ||
      std::adjacent_find(rows.begin(), rows.end()) != rows.end() ||
      std::adjacent_find(cols.begin(), cols.end()) != cols.end())
    fail(ErrorCode::invalid_argument, "restriction index lists must be sorted and unique");
  std::vector<long> row_pos(d.f1().size(), -1), col_pos(d.f2().size(), -1);
  std::vector<std::string> f1, f2;
  for (std::uint32_t r : rows) {
    if (r >= d.f1().size()) fail(ErrorCode::invalid_argument, "row index out of range");
    row_pos[r] = static_cast<long>(f1.size());
    f1.push_back(d.f1()[r]);
  }
  for (std::uint32_t c : cols) {
    if (c >= d.f2().size()) fail(ErrorCode::invalid_argument, "column index out of range");
    col_pos[c] = static_cast<long>(f2.size());
    f2.push_back(d.f2()[c]);
  }
  std::vector<Cell> cells;
  for (const Cell& c : d.cells())
    if (row_pos[c.first] >= 0 && col_pos[c.second] >= 0)
      cells.push_back({static_cast<std::uint32_t>(row_pos[c.first]),
                       static_cast<std::uint32_t>(col_pos[c.second])});
  return PointDiagram::make(std::move(f1), std::move(f2), std::move(cells));
}

std::vector<RookComponent> rook_components(const PointDiagram& d) {
  std::size_t n1 = d.f1().size(), n2 = d.f2().size();
  std::vector<std::size_t> parent(n1 + n2);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Cell& c : d.cells()) {
    std::size_t a = find(c.first), b = find(n1 + c.second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  // roots appear in increasing smallest-row order because rows come first
  std::map<std::size_t, std::size_t> root_order;
  for (std::size_t i = 0; i < n1 + n2; ++i) {
    std::size_t r = find(i);
    if (!root_order.count(r)) root_order.emplace(r, root_order.size());
  }
  std::vector<RookComponent> out(root_order.size());
  for (std::uint32_t i = 0; i < n1; ++i) out[root_order[find(i)]].rows.push_back(i);
  for (std::uint32_t j = 0; j < n2; ++j) out[root_order[find(n1 + j)]].cols.push_back(j);
  for (std::size_t ci = 0; ci < d.cells().size(); ++ci)
    out[root_order[find(d.cells()[ci].first)]].cell_indices.push_back(ci);
  for (RookComponent& comp : out) comp.diagram = restrict_diagram(d, comp.rows, comp.cols);
  return out;
}

namespace {

// Checks that parts form a partition of {0..n-1} into layering.k + 1 layers.
void require_partition(const std::vector<std::vector<std::uint32_t>>& parts, std::size_t n,
                       int k) {
  if (k < 0 || parts.size() != static_cast<std::size_t>(k) + 1)
    fail(ErrorCode::invalid_argument, "layering: wrong number of layers");
  std::vector<bool> seen(n, false);
  std::size_t total = 0;
  for (const auto& part : parts)
    for (std::uint32_t x : part) {
      if (x >= n || seen[x]) fail(ErrorCode::invalid_argument, "layering: not a partition");
      seen[x] = true;
      ++total;
    }
  if (total != n) fail(ErrorCode::invalid_argument, "layering: not a partition");
}

}  // namespace

bool check_layering(const PointDiagram& d, const Layering& layering) {
  require_partition(layering.parts1, d.f1().size(), layering.k);
  require_partition(layering.parts2, d.f2().size(), layering.k);
  int k = layering.k;
  // (a) singleton top layers
  if (layering.parts1[k].size() != 1 || layering.parts2[k].size() != 1) return false;
  // (b) top product cell present
  if (!d.has_cell(layering.parts1[k][0], layering.parts2[k][0])) return false;
  std::vector<int> layer1(d.f1().size()), layer2(d.f2().size());
  for (int i = 0; i <= k; ++i) {
    for (std::uint32_t x : layering.parts1[i]) layer1[x] = i;
    for (std::uint32_t x : layering.parts2[i]) layer2[x] = i;
  }
  // (c)/(d): each label below the top has a partner strictly higher on the
  // other side
  std::vector<bool> ok1(d.f1().size(), false), ok2(d.f2().size(), false);
  for (const Cell& c : d.cells()) {
    if (layer2[c.second] > layer1[c.first]) ok1[c.first] = true;
    if (layer1[c.first] > layer2[c.second]) ok2[c.second] = true;
  }
  for (std::size_t a = 0; a < d.f1().size(); ++a)
    if (layer1[a] < k && !ok1[a]) return false;
  for (std::size_t b = 0; b < d.f2().size(); ++b)
    if (layer2[b] < k && !ok2[b]) return false;
  return true;
}

namespace {

// State space for the minimal-layering search: pairs of label subsets,
// encoded as a 64-bit key. A state is one peel away from the states it can
// retain, namely pairs (J1, J2) where J2 meets the partner set of every row
// of S1 and J1 meets the partner set of every column of S2.
struct LayerSearch {
  const PointDiagram& d;
  std::size_t n1, n2;
  std::vector<std::uint32_t> adj_row;  // per row: bitmask of partner columns
  std::vector<std::uint32_t> adj_col;

  struct Info {
    int fail_up_to = -1;      // search failed for every budget <= this
    int success_budget = -1;  // smallest budget known to succeed
    std::uint64_t choice = 0; // retained state on the success path
  };
  std::map<std::uint64_t, Info> memo;

  explicit LayerSearch(const PointDiagram& diagram)
      : d(diagram), n1(d.f1().size()), n2(d.f2().size()), adj_row(n1, 0), adj_col(n2, 0) {
    for (const Cell& c : d.cells()) {
      adj_row[c.first] |= 1u << c.second;
      adj_col[c.second] |= 1u << c.first;
    }
  }

  static std::uint64_t key(std::uint32_t m1, std::uint32_t m2) {
    return (static_cast<std::uint64_t>(m1) << 32) | m2;
  }

  bool connected(std::uint32_t m1, std::uint32_t m2) const {
    std::uint32_t seen1 = 1u << std::countr_zero(m1), seen2 = 0;
    bool grew = true;
    while (grew) {
      grew = false;
      std::uint32_t reach2 = 0;
      for (std::uint32_t rs = seen1; rs; rs &= rs - 1)
        reach2 |= adj_row[std::countr_zero(rs)];
      reach2 &= m2;
      if (reach2 & ~seen2) { seen2 |= reach2; grew = true; }
      std::uint32_t reach1 = 0;
      for (std::uint32_t cs = seen2; cs; cs &= cs - 1)
        reach1 |= adj_col[std::countr_zero(cs)];
      reach1 &= m1;
      if (reach1 & ~seen1) { seen1 |= reach1; grew = true; }
    }
    return seen1 == m1 && seen2 == m2;
  }

  // All subsets of `pool` that meet the (restricted) partner set of every
  // member of `targets` on the other side, sorted smallest first.
  std::vector<std::uint32_t> dominating(std::uint32_t pool, std::uint32_t targets,
                                        const std::vector<std::uint32_t>& adj) const {
    std::vector<std::uint32_t> out;
    std::uint32_t sub = pool;
    while (true) {
      bool ok = sub != 0;
      for (std::uint32_t ts = targets; ok && ts; ts &= ts - 1)
        if (!(adj[std::countr_zero(ts)] & sub)) ok = false;
      if (ok) out.push_back(sub);
      if (sub == 0) break;
      sub = (sub - 1) & pool;
    }
    std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    return out;
  }

  bool search(std::uint32_t m1, std::uint32_t m2, int budget) {
    if (std::popcount(m1) == 1 && std::popcount(m2) == 1) return true;
    Info& info = memo[key(m1, m2)];
    if (info.success_budget >= 0 && info.success_budget <= budget) return true;
    if (budget <= 0 || info.fail_up_to >= budget) return false;
    if (info.fail_up_to < 0) {
      // first visit: a layered diagram is indecomposable, prune split states
      if (!connected(m1, m2)) {
        info.fail_up_to = std::numeric_limits<int>::max();
        return false;
      }
      info.fail_up_to = 0;
    }
    auto retain1 = dominating(m1, m2, adj_col);
    auto retain2 = dominating(m2, m1, adj_row);
    for (std::uint32_t j1 : retain1)
      for (std::uint32_t j2 : retain2) {
        if (j1 == m1 && j2 == m2) continue;
        if (search(j1, j2, budget - 1)) {
          Info& child = memo[key(j1, j2)];
          int child_cost =
              (std::popcount(j1) == 1 && std::popcount(j2) == 1) ? 0 : child.success_budget;
          if (info.success_budget < 0 || child_cost + 1 < info.success_budget) {
            info.success_budget = child_cost + 1;
            info.choice = key(j1, j2);
          }
          return true;
        }
      }
    info.fail_up_to = budget;
    return false;
  }
};

}  // namespace

std::optional<Layering> minimal_layering(const PointDiagram& d, std::size_t label_cap) {
  if (d.label_total() > label_cap)
    fail(ErrorCode::cap_exceeded, "minimal_layering: diagram exceeds the label cap of " +
                                      std::to_string(label_cap));
  std::size_t n1 = d.f1().size(), n2 = d.f2().size();
  LayerSearch search(d);
  std::uint32_t full1 = (n1 == 32 ? ~0u : (1u << n1) - 1), full2 = (n2 == 32 ? ~0u : (1u << n2) - 1);
  // a minimal layering has no layer below the top that is empty on both
  // sides, so k never exceeds |F1| + |F2| - 2
  int k_max = static_cast<int>(n1 + n2) - 2;
  for (int k = 0; k <= k_max; ++k) {
    if (!search.search(full1, full2, k)) continue;
    // reconstruct the peel chain
    Layering out;
    std::uint32_t m1 = full1, m2 = full2;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> chain{{m1, m2}};
    while (!(std::popcount(m1) == 1 && std::popcount(m2) == 1)) {
      std::uint64_t next = search.memo.at(LayerSearch::key(m1, m2)).choice;
      m1 = static_cast<std::uint32_t>(next >> 32);
      m2 = static_cast<std::uint32_t>(next);
      chain.push_back({m1, m2});
    }
    out.k = static_cast<int>(chain.size()) - 1;
    out.parts1.resize(out.k + 1);
    out.parts2.resize(out.k + 1);
    for (int layer = 0; layer <= out.k; ++layer) {
      std::uint32_t peeled1 =
          layer < out.k ? (chain[layer].first & ~chain[layer + 1].first) : chain[layer].first;
      std::uint32_t peeled2 =
          layer < out.k ? (chain[layer].second & ~chain[layer + 1].second) : chain[layer].second;
      for (std::uint32_t s = peeled1; s; s &= s - 1)
        out.parts1[layer].push_back(std::countr_zero(s));
      for (std::uint32_t s = peeled2; s; s &= s - 1)
        out.parts2[layer].push_back(std::countr_zero(s));
    }
    if (!check_layering(d, out))
      fail(ErrorCode::internal, "minimal_layering produced an invalid certificate");
    return out;
  }
  return std::nullopt;
}

Rational PairVec::norm_sum() const {
  Rational total(0);
  for (const Rational& x : f1) total += abs(x);
  for (const Rational& x : f2) total += abs(x);
  return total;
}

namespace {

void require_pair_shape(const PointDiagram& d, const PairVec& v) {
  if (v.f1.size() != d.f1().size() || v.f2.size() != d.f2().size())
    fail(ErrorCode::invalid_argument, "pair vector does not match the diagram's label sets");
}

}  // namespace

bool compatible_pair(const PointDiagram& d, const PairVec& v) {
  require_pair_shape(d, v);
  for (const RookComponent& comp : rook_components(d)) {
    Rational lhs(0), rhs(0);
    for (std::uint32_t r : comp.rows) lhs += v.f1[r];
    for (std::uint32_t c : comp.cols) rhs += v.f2[c];
    if (lhs != rhs) return false;
  }
  return true;
}

Rational Extension::norm() const {
  Rational total(0);
  for (const Rational& x : values) total += abs(x);
  return total;
}

PairVec marginals(const PointDiagram& d, const Extension& g) {
  if (g.values.size() != d.cells().size())
    fail(ErrorCode::invalid_argument, "extension does not match the diagram's cell list");
  PairVec out;
  out.f1.assign(d.f1().size(), Rational(0));
  out.f2.assign(d.f2().size(), Rational(0));
  for (std::size_t i = 0; i < d.cells().size(); ++i) {
    out.f1[d.cells()[i].first] += g.values[i];
    out.f2[d.cells()[i].second] += g.values[i];
  }
  return out;
}

namespace {

struct SplitIndex {
  std::vector<std::uint32_t> retained_rows, retained_cols;  // sorted ascending
  std::vector<bool> row_peeled, col_peeled;
};

SplitIndex index_split(const PointDiagram& d, const SplitSpec& split) {
  SplitIndex idx;
  idx.row_peeled.assign(d.f1().size(), false);
  idx.col_peeled.assign(d.f2().size(), false);
  if (split.phi.size() != split.peeled_rows.size() ||
      split.psi.size() != split.peeled_cols.size())
    fail(ErrorCode::invalid_argument, "split: neighbor maps must align with the peeled labels");
  for (std::uint32_t r : split.peeled_rows) {
    if (r >= d.f1().size() || idx.row_peeled[r])
      fail(ErrorCode::invalid_argument, "split: bad peeled row " + std::to_string(r));
    idx.row_peeled[r] = true;
  }
  for (std::uint32_t c : split.peeled_cols) {
    if (c >= d.f2().size() || idx.col_peeled[c])
      fail(ErrorCode::invalid_argument, "split: bad peeled column " + std::to_string(c));
    idx.col_peeled[c] = true;
  }
  for (std::uint32_t i = 0; i < d.f1().size(); ++i)
    if (!idx.row_peeled[i]) idx.retained_rows.push_back(i);
  for (std::uint32_t j = 0; j < d.f2().size(); ++j)
    if (!idx.col_peeled[j]) idx.retained_cols.push_back(j);
  if (idx.retained_rows.empty() || idx.retained_cols.empty())
    fail(ErrorCode::invalid_argument, "split: retained label sets must be nonempty");
  for (std::size_t i = 0; i < split.peeled_rows.size(); ++i) {
    std::uint32_t r = split.peeled_rows[i], c = split.phi[i];
    if (c >= d.f2().size() || idx.col_peeled[c] || !d.has_cell(r, c))
      fail(ErrorCode::invalid_argument,
           "split: phi(" + d.f1()[r] + ") must be a retained partner column");
  }
  for (std::size_t j = 0; j < split.peeled_cols.size(); ++j) {
    std::uint32_t c = split.peeled_cols[j], r = split.psi[j];
    if (r >= d.f1().size() || idx.row_peeled[r] || !d.has_cell(r, c))
      fail(ErrorCode::invalid_argument,
           "split: psi(" + d.f2()[c] + ") must be a retained partner row");
  }
  return idx;
}

}  // namespace

PairVec reduced_pair(const PointDiagram& d, const SplitSpec& split, const PairVec& v) {
  require_pair_shape(d, v);
  SplitIndex idx = index_split(d, split);
  PairVec out;
  for (std::uint32_t r : idx.retained_rows) out.f1.push_back(v.f1[r]);
  for (std::uint32_t c : idx.retained_cols) out.f2.push_back(v.f2[c]);
  std::vector<long> row_pos(d.f1().size(), -1), col_pos(d.f2().size(), -1);
  for (std::size_t i = 0; i < idx.retained_rows.size(); ++i) row_pos[idx.retained_rows[i]] = i;
  for (std::size_t j = 0; j < idx.retained_cols.size(); ++j) col_pos[idx.retained_cols[j]] = j;
  // peeled masses are routed through the chosen neighbors and subtracted
  for (std::size_t j = 0; j < split.peeled_cols.size(); ++j)
    out.f1[row_pos[split.psi[j]]] -= v.f2[split.peeled_cols[j]];
  for (std::size_t i = 0; i < split.peeled_rows.size(); ++i)
    out.f2[col_pos[split.phi[i]]] -= v.f1[split.peeled_rows[i]];
  return out;
}

Extension extend_with_split(const PointDiagram& d, const SplitSpec& split, const PairVec& v,
                            const PointDiagram& subdiagram, const Extension& inner) {
  require_pair_shape(d, v);
  SplitIndex idx = index_split(d, split);
  PointDiagram expected_sub = restrict_diagram(d, idx.retained_rows, idx.retained_cols);
  if (subdiagram.f1() != expected_sub.f1() || subdiagram.f2() != expected_sub.f2() ||
      subdiagram.cells() != expected_sub.cells())
    fail(ErrorCode::invalid_argument, "split: subdiagram is not the retained restriction");
  PairVec reduced = reduced_pair(d, split, v);
  PairVec inner_marginals = marginals(subdiagram, inner);
  if (inner_marginals.f1 != reduced.f1 || inner_marginals.f2 != reduced.f2)
    fail(ErrorCode::invalid_argument,
         "split: inner extension does not have the reduced pair as marginals");

  std::map<Cell, std::size_t> cell_pos;
  for (std::size_t i = 0; i < d.cells().size(); ++i) cell_pos.emplace(d.cells()[i], i);
  Extension g;
  g.values.assign(d.cells().size(), Rational(0));
  for (std::size_t i = 0; i < split.peeled_rows.size(); ++i)
    g.values[cell_pos.at({split.peeled_rows[i], split.phi[i]})] = v.f1[split.peeled_rows[i]];
  for (std::size_t j = 0; j < split.peeled_cols.size(); ++j)
    g.values[cell_pos.at({split.psi[j], split.peeled_cols[j]})] = v.f2[split.peeled_cols[j]];
  // retained block: copy the inner extension through the index maps
  std::size_t sub_pos = 0;
  for (const Cell& c : d.cells()) {
    if (idx.row_peeled[c.first] || idx.col_peeled[c.second]) continue;
    g.values[cell_pos.at(c)] = inner.values[sub_pos++];
  }
  return g;
}

Extension extend_by_layering(const PointDiagram& d, const Layering& layering, const PairVec& v) {
  if (!check_layering(d, layering))
    fail(ErrorCode::invalid_argument, "extend_by_layering: layering does not certify the diagram");
  if (!compatible_pair(d, v))
    fail(ErrorCode::invalid_argument, "extend_by_layering: pair is not compatible");
  if (layering.k == 0) {
    // both sides are singletons and the one cell carries the whole mass
    Extension g;
    g.values.assign(d.cells().size(), Rational(0));
    g.values[0] = v.f1[0];
    return g;
  }
  // peel layer 0, route each peeled label to its partner in the highest layer
  std::vector<int> layer1(d.f1().size()), layer2(d.f2().size());
  for (int i = 0; i <= layering.k; ++i) {
    for (std::uint32_t x : layering.parts1[i]) layer1[x] = i;
    for (std::uint32_t x : layering.parts2[i]) layer2[x] = i;
  }
  SplitSpec split;
  split.peeled_rows = layering.parts1[0];
  split.peeled_cols = layering.parts2[0];
  std::sort(split.peeled_rows.begin(), split.peeled_rows.end());
  std::sort(split.peeled_cols.begin(), split.peeled_cols.end());
  auto pick_highest = [&](std::uint32_t label, bool row) -> std::uint32_t {
    int best_layer = 0;
    std::uint32_t best = 0;
    bool found = false;
    for (const Cell& c : d.cells()) {
      if (row ? (c.first != label) : (c.second != label)) continue;
      std::uint32_t other = row ? c.second : c.first;
      int lay = row ? layer2[other] : layer1[other];
      if (lay < 1) continue;
      if (!found || lay > best_layer || (lay == best_layer && other < best)) {
        best_layer = lay;
        best = other;
        found = true;
      }
    }
    if (!found) fail(ErrorCode::internal, "layering accepted but a peeled label has no partner");
    return best;
  };
  for (std::uint32_t r : split.peeled_rows) split.phi.push_back(pick_highest(r, true));
  for (std::uint32_t c : split.peeled_cols) split.psi.push_back(pick_highest(c, false));

  SplitIndex idx = index_split(d, split);
  PointDiagram sub = restrict_diagram(d, idx.retained_rows, idx.retained_cols);
  std::vector<long> row_pos(d.f1().size(), -1), col_pos(d.f2().size(), -1);
  for (std::size_t i = 0; i < idx.retained_rows.size(); ++i) row_pos[idx.retained_rows[i]] = i;
  for (std::size_t j = 0; j < idx.retained_cols.size(); ++j) col_pos[idx.retained_cols[j]] = j;
  Layering sub_layering;
  sub_layering.k = layering.k - 1;
  sub_layering.parts1.resize(layering.k);
  sub_layering.parts2.resize(layering.k);
  for (int i = 1; i <= layering.k; ++i) {
    for (std::uint32_t x : layering.parts1[i])
      sub_layering.parts1[i - 1].push_back(static_cast<std::uint32_t>(row_pos[x]));
    for (std::uint32_t x : layering.parts2[i])
      sub_layering.parts2[i - 1].push_back(static_cast<std::uint32_t>(col_pos[x]));
  }
  Extension inner = extend_by_layering(sub, sub_layering, reduced_pair(d, split, v));
  return extend_with_split(d, split, v, sub, inner);
}

}  // namespace leplab
