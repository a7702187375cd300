#include <algorithm>
#include <bit>
#include <numeric>

#include "polymc/error.hpp"
#include "polymc/geometry.hpp"
#include "simplex_index.hpp"

namespace polymc {

CellTable build_cell_table(const SimplicialModel& model) {
  const auto& specs = model.simplexes;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& pts = specs[i].points;
    if (pts.empty()) throw Error(ErrorKind::EmptySimplex, "simplex #" + std::to_string(i));
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (pts[k] >= model.vertices.size()) {
        throw Error(ErrorKind::IndexError, "simplex #" + std::to_string(i) + " references vertex " +
                                               std::to_string(pts[k]));
      }
      if (k > 0 && pts[k - 1] >= pts[k]) {
        throw Error(ErrorKind::InvalidArgument,
                    "simplex #" + std::to_string(i) + " vertex list is not strictly increasing");
      }
    }
  }

  // Sort on flat keys; comparing the specs' own vectors chases a pointer per
  // comparison, which dominates on large models.
  std::size_t width = 0;
  for (const auto& s : specs) width = std::max(width, s.points.size());
  const std::size_t stride = width + 1;
  std::vector<VertexIndex> keys(specs.size() * stride, 0);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    VertexIndex* key = keys.data() + i * stride;
    key[0] = static_cast<VertexIndex>(specs[i].points.size());
    std::copy(specs[i].points.begin(), specs[i].points.end(), key + 1);
  }
  std::vector<std::uint32_t> order(specs.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const VertexIndex* ka = keys.data() + a * stride;
    const VertexIndex* kb = keys.data() + b * stride;
    return std::lexicographical_compare(ka, ka + stride, kb, kb + stride);
  });
  keys = {};

  CellTable table;
  table.offsets_.reserve(specs.size() + 1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& pts = specs[order[k]].points;
    if (k > 0 && specs[order[k - 1]].points == pts) {
      throw Error(ErrorKind::DuplicateSimplex, "simplex listed twice: cell " + std::to_string(k));
    }
    table.data_.insert(table.data_.end(), pts.begin(), pts.end());
    table.offsets_.push_back(static_cast<std::uint32_t>(table.data_.size()));
    table.max_dim_ = std::max(table.max_dim_, static_cast<int>(pts.size()) - 1);
  }
  table.source_ = std::move(order);

  const std::size_t n = table.size();
  table.slots_.assign(std::bit_ceil(std::max<std::size_t>(16, n * 2)), detail::kEmptySlot);
  const std::size_t mask = table.slots_.size() - 1;
  for (CellId id = 0; id < n; ++id) {
    std::size_t pos = detail::hash_vertices(table.vertices(id)) & mask;
    while (table.slots_[pos] != detail::kEmptySlot) pos = (pos + 1) & mask;
    table.slots_[pos] = id;
  }

  // Closure under faces follows from every facet being present.
  table.facets_.assign(table.data_.size(), detail::kEmptySlot);
  std::vector<VertexIndex> facet;
  for (CellId id = 0; id < n; ++id) {
    auto pts = table.vertices(id);
    if (pts.size() < 2) continue;
    for (std::size_t skip = 0; skip < pts.size(); ++skip) {
      facet.clear();
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k != skip) facet.push_back(pts[k]);
      }
      auto fid = table.find(facet);
      if (!fid) throw Error(ErrorKind::NotClosed, "face of cell " + table.label(id) + " is missing");
      table.facets_[table.offsets_[id] + skip] = *fid;
    }
  }
  return table;
}

}  // namespace polymc
