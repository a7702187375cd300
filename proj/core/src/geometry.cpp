#include "polymc/geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "polymc/error.hpp"
#include "simplex_index.hpp"

namespace polymc {

namespace {

constexpr std::size_t kMaxSimplexVertices = 24;

bool strictly_increasing(std::span<const VertexIndex> points) {
  return std::adjacent_find(points.begin(), points.end(),
                            [](VertexIndex a, VertexIndex b) { return a >= b; }) == points.end();
}

bool canonical_less(std::span<const VertexIndex> a, std::span<const VertexIndex> b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void require_listable(const SimplicialModel& model, const SimplexSpec& s, std::size_t index) {
  if (s.points.empty()) {
    throw Error(ErrorKind::EmptySimplex, "simplex #" + std::to_string(index) + " has no vertices");
  }
  if (!strictly_increasing(s.points)) {
    canonicalize_simplex(s.points);  // reports DuplicateVertex if that is the cause
    throw Error(ErrorKind::InvalidArgument,
                "simplex #" + std::to_string(index) + " vertex list is not sorted");
  }
  if (s.points.back() >= model.vertices.size()) {
    throw Error(ErrorKind::IndexError, "simplex #" + std::to_string(index) + " references vertex " +
                                           std::to_string(s.points.back()) + " of " +
                                           std::to_string(model.vertices.size()));
  }
  if (s.points.size() > kMaxSimplexVertices) {
    throw Error(ErrorKind::InvalidArgument,
                "simplex #" + std::to_string(index) + " exceeds the supported dimension");
  }
}

std::string format_points(std::span<const VertexIndex> points) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < points.size(); ++i) out << (i ? "," : "") << points[i];
  out << ']';
  return out.str();
}

// Calls fn(subset) for every nonempty proper subset of the sorted list.
template <typename Fn>
void for_each_proper_face(std::span<const VertexIndex> points, std::vector<VertexIndex>& scratch,
                          Fn&& fn) {
  const std::uint32_t k = static_cast<std::uint32_t>(points.size());
  const std::uint32_t full = (1u << k) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    scratch.clear();
    for (std::uint32_t b = 0; b < k; ++b) {
      if (mask & (1u << b)) scratch.push_back(points[b]);
    }
    fn(std::span<const VertexIndex>(scratch));
  }
}

}  // namespace

std::vector<VertexIndex> canonicalize_simplex(std::span<const VertexIndex> points) {
  if (points.empty()) throw Error(ErrorKind::EmptySimplex, "the empty simplex is not a cell");
  std::vector<VertexIndex> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(ErrorKind::DuplicateVertex, "vertex " + std::to_string(*dup) + " repeated");
  }
  return sorted;
}

SimplicialModel face_closure(const SimplicialModel& model) {
  detail::SimplexIndex index(model.simplexes.size() * 4);
  for (std::size_t i = 0; i < model.simplexes.size(); ++i) {
    require_listable(model, model.simplexes[i], i);
    if (!index.insert(model.simplexes[i].points).second) {
      throw Error(ErrorKind::DuplicateSimplex,
                  "simplex " + format_points(model.simplexes[i].points) + " listed twice");
    }
  }
  const std::size_t listed = index.size();
  std::vector<VertexIndex> scratch;
  for (const SimplexSpec& s : model.simplexes) {
    for_each_proper_face(s.points, scratch,
                         [&](std::span<const VertexIndex> face) { index.insert(face); });
  }

  SimplicialModel out = model;
  std::vector<std::uint32_t> added;
  added.reserve(index.size() - listed);
  for (auto id = static_cast<std::uint32_t>(listed); id < index.size(); ++id) added.push_back(id);
  std::sort(added.begin(), added.end(), [&](std::uint32_t a, std::uint32_t b) {
    return canonical_less(index.get(a), index.get(b));
  });
  out.simplexes.reserve(index.size());
  for (std::uint32_t id : added) {
    auto pts = index.get(id);
    out.simplexes.push_back(SimplexSpec{{pts.begin(), pts.end()}, {}});
  }
  return out;
}

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::NotCanonical: return "not-canonical";
    case ViolationKind::IndexOutOfRange: return "index-out-of-range";
    case ViolationKind::DuplicateSimplex: return "duplicate-simplex";
    case ViolationKind::MissingFace: return "missing-face";
    case ViolationKind::AffineDependence: return "affine-dependence";
    case ViolationKind::BadIntersection: return "bad-intersection";
  }
  return "unknown";
}

std::size_t ValidationReport::count(ViolationKind kind) const noexcept {
  return static_cast<std::size_t>(std::ranges::count_if(
      violations, [kind](const Violation& v) { return v.kind == kind; }));
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  if (ok()) {
    out << "ok\n";
    return out.str();
  }
  out << violations.size() << " violation(s)\n";
  for (const Violation& v : violations) {
    out << "  " << to_string(v.kind) << " [";
    for (std::size_t i = 0; i < v.simplexes.size(); ++i) out << (i ? "," : "") << '#' << v.simplexes[i];
    out << "] " << v.detail << '\n';
  }
  return out.str();
}

ValidationReport validate_combinatorial(const SimplicialModel& model) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::vector<std::size_t> which, std::string detail) {
    report.violations.push_back(Violation{kind, std::move(which), std::move(detail)});
  };

  std::vector<bool> usable(model.simplexes.size(), true);
  for (std::size_t i = 0; i < model.simplexes.size(); ++i) {
    const SimplexSpec& s = model.simplexes[i];
    if (s.points.empty()) {
      add(ViolationKind::NotCanonical, {i}, "empty vertex list");
      usable[i] = false;
      continue;
    }
    if (!strictly_increasing(s.points)) {
      add(ViolationKind::NotCanonical, {i}, format_points(s.points) + " is not strictly increasing");
      usable[i] = false;
    }
    if (s.points.size() > kMaxSimplexVertices) {
      add(ViolationKind::NotCanonical, {i}, "dimension too large");
      usable[i] = false;
    }
    for (VertexIndex v : s.points) {
      if (v >= model.vertices.size()) {
        add(ViolationKind::IndexOutOfRange, {i},
            "vertex " + std::to_string(v) + " of " + std::to_string(model.vertices.size()));
        usable[i] = false;
      }
    }
    for (AtomId a : s.atoms) {
      if (a >= model.atom_names.size()) {
        add(ViolationKind::IndexOutOfRange, {i},
            "atom " + std::to_string(a) + " of " + std::to_string(model.atom_names.size()));
      }
    }
  }

  detail::SimplexIndex index(model.simplexes.size());
  std::vector<std::size_t> first_listing;
  for (std::size_t i = 0; i < model.simplexes.size(); ++i) {
    if (!usable[i]) continue;
    auto [id, inserted] = index.insert(model.simplexes[i].points);
    if (inserted) {
      first_listing.push_back(i);
    } else {
      add(ViolationKind::DuplicateSimplex, {first_listing[id], i},
          format_points(model.simplexes[i].points) + " listed more than once");
    }
  }

  detail::SimplexIndex reported;
  std::vector<VertexIndex> scratch;
  for (std::size_t i = 0; i < model.simplexes.size(); ++i) {
    if (!usable[i]) continue;
    for_each_proper_face(model.simplexes[i].points, scratch, [&](std::span<const VertexIndex> face) {
      if (!index.find(face) && reported.insert(face).second) {
        add(ViolationKind::MissingFace, {i},
            "face " + format_points(face) + " of " + format_points(model.simplexes[i].points) +
                " is not listed");
      }
    });
  }
  return report;
}

std::span<const VertexIndex> CellTable::vertices(CellId id) const {
  if (id >= size()) throw Error(ErrorKind::UnknownCell, "cell " + std::to_string(id));
  return {data_.data() + offsets_[id], data_.data() + offsets_[id + 1]};
}

int CellTable::dim(CellId id) const { return static_cast<int>(vertices(id).size()) - 1; }

std::optional<CellId> CellTable::find(std::span<const VertexIndex> points) const noexcept {
  if (slots_.empty()) return std::nullopt;
  const std::size_t mask = slots_.size() - 1;
  std::size_t pos = detail::hash_vertices(points) & mask;
  while (slots_[pos] != detail::kEmptySlot) {
    CellId id = slots_[pos];
    std::span<const VertexIndex> stored{data_.data() + offsets_[id], data_.data() + offsets_[id + 1]};
    if (std::ranges::equal(stored, points)) return id;
    pos = (pos + 1) & mask;
  }
  return std::nullopt;
}

CellId CellTable::id_of(std::span<const VertexIndex> points) const {
  if (auto id = find(points)) return *id;
  throw Error(ErrorKind::UnknownCell, "no cell " + format_points(points));
}

std::string CellTable::label(CellId id) const { return format_points(vertices(id)); }

std::span<const CellId> CellTable::facets(CellId id) const {
  if (id >= size()) throw Error(ErrorKind::UnknownCell, "cell " + std::to_string(id));
  if (offsets_[id + 1] - offsets_[id] < 2) return {};
  return {facets_.data() + offsets_[id], facets_.data() + offsets_[id + 1]};
}

Point barycentre(const SimplicialModel& model, const CellTable& cells, CellId cell) {
  auto pts = cells.vertices(cell);
  Point mean(model.ambient_dim, 0.0);
  for (VertexIndex v : pts) {
    if (v >= model.vertices.size()) {
      throw Error(ErrorKind::IndexError, "cell " + cells.label(cell) + " is not from this model");
    }
    for (std::size_t k = 0; k < model.ambient_dim; ++k) mean[k] += model.vertices[v][k];
  }
  for (double& c : mean) c /= static_cast<double>(pts.size());
  return mean;
}

}  // namespace polymc
