#pragma once

// The finite Kripke model of a polyhedral model: cells as states, the proper
// face relation (stored transitively, irreflexive) in both directions, and one
// satisfaction set per atom.

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polymc/geometry.hpp"
#include "polymc/satset.hpp"

namespace polymc {

class KripkeModel {
 public:
  KripkeModel() = default;

  std::size_t size() const noexcept { return cells_.size(); }
  int max_dim() const noexcept { return cells_.max_dim(); }
  const CellTable& cells() const noexcept { return cells_; }

  /// Proper cofaces of `id`, ascending.
  std::span<const CellId> out_adj(CellId id) const noexcept {
    return {out_ids_.data() + out_offsets_[id], out_ids_.data() + out_offsets_[id + 1]};
  }
  /// Proper faces of `id`, ascending.
  std::span<const CellId> in_adj(CellId id) const noexcept {
    return {in_ids_.data() + in_offsets_[id], in_ids_.data() + in_offsets_[id + 1]};
  }

  std::size_t edge_count() const noexcept { return in_ids_.size(); }

  bool has_atom(std::string_view name) const { return atoms_.find(name) != atoms_.end(); }
  /// Throws UnknownAtom.
  const SatSet& atom(std::string_view name) const;
  const std::map<std::string, SatSet, std::less<>>& atoms() const noexcept { return atoms_; }

 private:
  friend KripkeModel build_kripke(CellTable cells, const SimplicialModel& model);

  CellTable cells_;
  std::vector<std::uint32_t> out_offsets_{0};
  std::vector<CellId> out_ids_;
  std::vector<std::uint32_t> in_offsets_{0};
  std::vector<CellId> in_ids_;
  std::map<std::string, SatSet, std::less<>> atoms_;
};

/// `cells` must be build_cell_table(model); a table of another size throws
/// InvalidArgument.
KripkeModel build_kripke(CellTable cells, const SimplicialModel& model);

/// Convenience: build_kripke(build_cell_table(model), model).
KripkeModel build_kripke(const SimplicialModel& model);

/// Union of the cofaces of the members of `s` (plus `s` when reflexive).
SatSet out_set(const KripkeModel& m, const SatSet& s, bool reflexive = true);
/// Union of the faces of the members of `s` (plus `s` when reflexive).
SatSet in_set(const KripkeModel& m, const SatSet& s, bool reflexive = true);

}  // namespace polymc
