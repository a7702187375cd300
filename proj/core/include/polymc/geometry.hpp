#pragma once

// Simplicial complexes: the input polyhedral model, its face closure, the
// canonical numbering of cells, and combinatorial/geometric validation.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polymc {

using VertexIndex = std::uint32_t;
using AtomId = std::uint32_t;
using CellId = std::uint32_t;
using Point = std::vector<double>;

inline constexpr double kDefaultTolerance = 1e-9;

/// One listed simplex: strictly increasing vertex indices plus the atoms that
/// hold on its whole cell.
struct SimplexSpec {
  std::vector<VertexIndex> points;
  std::vector<AtomId> atoms;  // sorted, unique

  int dimension() const noexcept { return static_cast<int>(points.size()) - 1; }

  friend bool operator==(const SimplexSpec&, const SimplexSpec&) = default;
};

struct SimplicialModel {
  std::size_t ambient_dim = 0;
  std::vector<Point> vertices;
  std::vector<std::string> atom_names;
  std::vector<SimplexSpec> simplexes;

  friend bool operator==(const SimplicialModel&, const SimplicialModel&) = default;
};

/// Sorts a vertex list. Throws DuplicateVertex on repeats, EmptySimplex on {}.
std::vector<VertexIndex> canonicalize_simplex(std::span<const VertexIndex> points);

/// Adds every missing nonempty face of every listed simplex. Listed simplexes
/// keep their position and atoms; synthesized faces are appended in canonical
/// order with no atoms, so a closed input is returned unchanged.
SimplicialModel face_closure(const SimplicialModel& model);

enum class ViolationKind {
  NotCanonical,
  IndexOutOfRange,
  DuplicateSimplex,
  MissingFace,
  AffineDependence,
  BadIntersection,
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> simplexes;  // indices into SimplicialModel::simplexes
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::size_t count(ViolationKind kind) const noexcept;
  std::string summary() const;
};

/// Index ranges, canonical vertex lists, duplicates and face closure.
ValidationReport validate_combinatorial(const SimplicialModel& model);

/// Affine independence of every simplex and, for every pair of maximal
/// simplexes with overlapping bounding boxes, that the hulls meet exactly in
/// the hull of their shared vertices. Throws ToleranceInvalid if tol <= 0.
ValidationReport validate_geometric(const SimplicialModel& model, double tol = kDefaultTolerance);

/// Dense numbering of the cells of a face-closed complex, ordered by
/// (dimension, lexicographic vertex list).
class CellTable {
 public:
  CellTable() = default;

  std::size_t size() const noexcept { return offsets_.size() - 1; }
  bool empty() const noexcept { return size() == 0; }
  int max_dim() const noexcept { return max_dim_; }

  std::span<const VertexIndex> vertices(CellId id) const;
  int dim(CellId id) const;

  std::optional<CellId> find(std::span<const VertexIndex> sorted_points) const noexcept;
  /// Throws UnknownCell when the vertex list is not a cell.
  CellId id_of(std::span<const VertexIndex> sorted_points) const;

  std::string label(CellId id) const;

  /// Facet ids of a cell of k >= 2 vertices; entry i drops vertex i. Empty for vertices.
  std::span<const CellId> facets(CellId id) const;
  /// Position of the cell's entry in the model's simplex list.
  std::size_t source(CellId id) const { return source_.at(id); }

  friend bool operator==(const CellTable& a, const CellTable& b) noexcept {
    return a.offsets_ == b.offsets_ && a.data_ == b.data_;
  }

 private:
  friend CellTable build_cell_table(const SimplicialModel& model);

  std::vector<VertexIndex> data_;
  std::vector<std::uint32_t> offsets_{0};
  std::vector<CellId> slots_;
  std::vector<CellId> facets_;  // parallel to data_
  std::vector<std::uint32_t> source_;
  int max_dim_ = -1;
};

/// Throws IndexError, DuplicateSimplex or NotClosed on invalid input.
CellTable build_cell_table(const SimplicialModel& model);

/// Arithmetic mean of the cell's vertex coordinates. Throws UnknownCell.
Point barycentre(const SimplicialModel& model, const CellTable& cells, CellId cell);

}  // namespace polymc
