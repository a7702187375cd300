#include "simplex_index.hpp"

#include <algorithm>
#include <bit>

namespace polymc::detail {

std::uint64_t hash_vertices(std::span<const VertexIndex> points) noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ points.size();
  for (VertexIndex v : points) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return h ^ (h >> 31);
}

SimplexIndex::SimplexIndex(std::size_t expected) {
  std::size_t capacity = std::bit_ceil(std::max<std::size_t>(16, expected * 2));
  slots_.assign(capacity, kEmptySlot);
  offsets_.reserve(expected + 1);
}

std::size_t SimplexIndex::probe(std::span<const VertexIndex> points,
                                std::uint64_t hash) const noexcept {
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = hash & mask;
  while (slots_[pos] != kEmptySlot) {
    auto stored = get(slots_[pos]);
    if (std::ranges::equal(stored, points)) return pos;
    pos = (pos + 1) & mask;
  }
  return pos;
}

std::optional<std::uint32_t> SimplexIndex::find(std::span<const VertexIndex> points) const noexcept {
  std::size_t pos = probe(points, hash_vertices(points));
  if (slots_[pos] == kEmptySlot) return std::nullopt;
  return slots_[pos];
}

std::pair<std::uint32_t, bool> SimplexIndex::insert(std::span<const VertexIndex> points) {
  if ((size() + 1) * 2 > slots_.size()) grow();
  std::size_t pos = probe(points, hash_vertices(points));
  if (slots_[pos] != kEmptySlot) return {slots_[pos], false};
  auto id = static_cast<std::uint32_t>(size());
  data_.insert(data_.end(), points.begin(), points.end());
  offsets_.push_back(static_cast<std::uint32_t>(data_.size()));
  slots_[pos] = id;
  return {id, true};
}

void SimplexIndex::grow() {
  std::vector<std::uint32_t> old(slots_.size() * 2, kEmptySlot);
  old.swap(slots_);
  for (std::uint32_t id = 0; id < size(); ++id) {
    slots_[probe(get(id), hash_vertices(get(id)))] = id;
  }
}

}  // namespace polymc::detail
