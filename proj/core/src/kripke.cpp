#include "polymc/kripke.hpp"

#include <algorithm>

#include "polymc/error.hpp"

namespace polymc {

const SatSet& KripkeModel::atom(std::string_view name) const {
  auto it = atoms_.find(name);
  if (it == atoms_.end()) throw Error(ErrorKind::UnknownAtom, "atom \"" + std::string(name) + "\"");
  return it->second;
}

KripkeModel build_kripke(CellTable cells, const SimplicialModel& model) {
  KripkeModel m;
  m.cells_ = std::move(cells);
  const CellTable& table = m.cells_;
  const std::size_t n = table.size();

  m.in_offsets_.resize(n + 1);
  m.in_offsets_[0] = 0;
  for (CellId id = 0; id < n; ++id) {
    const auto k = table.vertices(id).size();
    m.in_offsets_[id + 1] = m.in_offsets_[id] + ((1u << k) - 2);
  }
  m.in_ids_.resize(m.in_offsets_[n]);

  // Cells come ordered by dimension, so every facet's face list is complete
  // before the cell itself is reached.
  std::vector<CellId> faces;
  for (CellId id = 0; id < n; ++id) {
    faces.clear();
    for (CellId f : table.facets(id)) {
      faces.push_back(f);
      auto sub = m.in_adj(f);
      faces.insert(faces.end(), sub.begin(), sub.end());
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::copy(faces.begin(), faces.end(), m.in_ids_.begin() + m.in_offsets_[id]);
  }
  std::vector<std::uint32_t> out_degree(n, 0);
  for (CellId f : m.in_ids_) ++out_degree[f];

  m.out_offsets_.resize(n + 1);
  m.out_offsets_[0] = 0;
  for (CellId id = 0; id < n; ++id) m.out_offsets_[id + 1] = m.out_offsets_[id] + out_degree[id];
  m.out_ids_.resize(m.out_offsets_[n]);
  std::vector<std::uint32_t> cursor(m.out_offsets_.begin(), m.out_offsets_.end() - 1);
  // Cofaces are appended in increasing id order, so each out list is sorted.
  for (CellId id = 0; id < n; ++id) {
    for (CellId f : m.in_adj(id)) m.out_ids_[cursor[f]++] = id;
  }

  for (const std::string& name : model.atom_names) m.atoms_.emplace(name, SatSet(n));
  if (model.simplexes.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "cell table was built from a different model");
  }
  for (CellId id = 0; id < n; ++id) {
    const SimplexSpec& s = model.simplexes[table.source(id)];
    for (AtomId a : s.atoms) {
      if (a >= model.atom_names.size()) {
        throw Error(ErrorKind::IndexError, "atom id " + std::to_string(a) + " out of range");
      }
      m.atoms_.find(model.atom_names[a])->second.set(id);
    }
  }
  return m;
}

KripkeModel build_kripke(const SimplicialModel& model) {
  return build_kripke(build_cell_table(model), model);
}

namespace {

void require_length(const KripkeModel& m, const SatSet& s) {
  if (s.size() != m.size()) {
    throw Error(ErrorKind::LengthMismatch, "set of length " + std::to_string(s.size()) +
                                               " for a model of " + std::to_string(m.size()) +
                                               " cells");
  }
}

}  // namespace

SatSet out_set(const KripkeModel& m, const SatSet& s, bool reflexive) {
  require_length(m, s);
  SatSet out = reflexive ? s : SatSet(m.size());
  s.for_each([&](CellId id) {
    for (CellId t : m.out_adj(id)) out.set(t);
  });
  return out;
}

SatSet in_set(const KripkeModel& m, const SatSet& s, bool reflexive) {
  require_length(m, s);
  SatSet out = reflexive ? s : SatSet(m.size());
  s.for_each([&](CellId id) {
    for (CellId t : m.in_adj(id)) out.set(t);
  });
  return out;
}

}  // namespace polymc
