#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polymc/geometry.hpp"

namespace polymc {

/// Fixed-length set of cell ids packed 64 per word. Binary operations require
/// equal lengths and throw LengthMismatch otherwise.
class SatSet {
 public:
  SatSet() = default;
  explicit SatSet(std::size_t n, bool value = false);

  static SatSet from_indices(std::size_t n, std::span<const CellId> ids);
  static SatSet all(std::size_t n) { return SatSet(n, true); }

  std::size_t size() const noexcept { return size_; }
  bool test(CellId id) const noexcept { return (words_[id >> 6] >> (id & 63)) & 1u; }
  void set(CellId id) noexcept { words_[id >> 6] |= std::uint64_t{1} << (id & 63); }
  void reset(CellId id) noexcept { words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63)); }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool any() const noexcept { return !none(); }
  bool is_subset_of(const SatSet& other) const;

  SatSet& operator&=(const SatSet& other);
  SatSet& operator|=(const SatSet& other);
  SatSet operator~() const;

  friend SatSet operator&(SatSet a, const SatSet& b) { return a &= b; }
  friend SatSet operator|(SatSet a, const SatSet& b) { return a |= b; }
  friend bool operator==(const SatSet&, const SatSet&) = default;

  std::vector<CellId> indices() const;
  std::vector<bool> to_bools() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        fn(static_cast<CellId>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  void require_same_size(const SatSet& other) const;
  void clear_tail() noexcept;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace polymc
