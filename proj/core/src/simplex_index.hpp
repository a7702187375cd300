#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polymc/geometry.hpp"

namespace polymc::detail {

std::uint64_t hash_vertices(std::span<const VertexIndex> points) noexcept;

/// Insert-only set of vertex lists with dense ids, stored flat. Lookups never
/// allocate, which matters for the subset enumeration in closure and encoding.
class SimplexIndex {
 public:
  explicit SimplexIndex(std::size_t expected = 0);

  std::size_t size() const noexcept { return offsets_.size() - 1; }
  std::span<const VertexIndex> get(std::uint32_t id) const noexcept {
    return {data_.data() + offsets_[id], data_.data() + offsets_[id + 1]};
  }

  std::optional<std::uint32_t> find(std::span<const VertexIndex> points) const noexcept;
  /// Returns the id and whether the list was newly inserted.
  std::pair<std::uint32_t, bool> insert(std::span<const VertexIndex> points);

 private:
  void grow();
  std::size_t probe(std::span<const VertexIndex> points, std::uint64_t hash) const noexcept;

  std::vector<VertexIndex> data_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<std::uint32_t> slots_;
};

inline constexpr std::uint32_t kEmptySlot = 0xffffffffu;

}  // namespace polymc::detail
