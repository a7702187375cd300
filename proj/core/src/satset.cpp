#include "polymc/satset.hpp"

#include <string>

#include "polymc/error.hpp"

namespace polymc {

SatSet::SatSet(std::size_t n, bool value)
    : size_(n), words_((n + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  clear_tail();
}

SatSet SatSet::from_indices(std::size_t n, std::span<const CellId> ids) {
  SatSet s(n);
  for (CellId id : ids) {
    if (id >= n) throw Error(ErrorKind::UnknownCell, "cell " + std::to_string(id));
    s.set(id);
  }
  return s;
}

void SatSet::clear_tail() noexcept {
  if (size_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

void SatSet::require_same_size(const SatSet& other) const {
  if (size_ != other.size_) {
    throw Error(ErrorKind::LengthMismatch,
                "sets of length " + std::to_string(size_) + " and " + std::to_string(other.size_));
  }
}

std::size_t SatSet::count() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool SatSet::none() const noexcept {
  for (std::uint64_t w : words_) {
    if (w) return false;
  }
  return true;
}

bool SatSet::is_subset_of(const SatSet& other) const {
  require_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

SatSet& SatSet::operator&=(const SatSet& other) {
  require_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

SatSet& SatSet::operator|=(const SatSet& other) {
  require_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

SatSet SatSet::operator~() const {
  SatSet out = *this;
  for (std::uint64_t& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

std::vector<CellId> SatSet::indices() const {
  std::vector<CellId> out;
  out.reserve(count());
  for_each([&](CellId id) { out.push_back(id); });
  return out;
}

std::vector<bool> SatSet::to_bools() const {
  std::vector<bool> out(size_, false);
  for_each([&](CellId id) { out[id] = true; });
  return out;
}

}  // namespace polymc
