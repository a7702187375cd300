#include <doctest.h>

#include <algorithm>
#include <random>

#include "polymc/error.hpp"
#include "polymc/geometry.hpp"
#include "support.hpp"

using namespace polymc;
using polymc::testing::load_corpus_model;

namespace {

SimplicialModel triangle_only() {
  SimplicialModel m;
  m.ambient_dim = 2;
  m.vertices = {{0, 0}, {1, 0}, {0, 1}};
  m.simplexes = {{{0, 1, 2}, {}}};
  return m;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::IoError;
}

bool inside_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  auto cross = [](const Point& o, const Point& u, const Point& v) {
    return (u[0] - o[0]) * (v[1] - o[1]) - (u[1] - o[1]) * (v[0] - o[0]);
  };
  const double d1 = cross(a, b, p), d2 = cross(b, c, p), d3 = cross(c, a, p);
  const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("canonicalize_simplex") {
    const std::vector<VertexIndex> a{2, 0, 1};
    CHECK(canonicalize_simplex(a) == std::vector<VertexIndex>{0, 1, 2});
    const std::vector<VertexIndex> dup{0, 0, 1};
    CHECK(kind_of([&] { canonicalize_simplex(dup); }) == ErrorKind::DuplicateVertex);
    const std::vector<VertexIndex> empty;
    CHECK(kind_of([&] { canonicalize_simplex(empty); }) == ErrorKind::EmptySimplex);
  }

  TEST_CASE("face_closure of a lone triangle yields seven simplexes") {
    const SimplicialModel closed = face_closure(triangle_only());
    REQUIRE(closed.simplexes.size() == 7);
    int by_dim[3] = {0, 0, 0};
    for (const auto& s : closed.simplexes) ++by_dim[s.dimension()];
    CHECK(by_dim[0] == 3);
    CHECK(by_dim[1] == 3);
    CHECK(by_dim[2] == 1);
  }

  TEST_CASE("face_closure sizes for single simplexes of dimension 0..3") {
    for (int d = 0; d <= 3; ++d) {
      SimplicialModel m;
      m.ambient_dim = 3;
      SimplexSpec s;
      for (int v = 0; v <= d; ++v) {
        m.vertices.push_back({double(v == 1), double(v == 2), double(v == 3)});
        s.points.push_back(static_cast<VertexIndex>(v));
      }
      m.simplexes = {s};
      CHECK(face_closure(m).simplexes.size() == (std::size_t{1} << (d + 1)) - 1);
    }
  }

  TEST_CASE("face_closure keeps listed atoms and is idempotent") {
    SimplicialModel m = triangle_only();
    m.atom_names = {"a"};
    m.simplexes[0].atoms = {0};
    const SimplicialModel once = face_closure(m);
    CHECK(once.simplexes[0] == m.simplexes[0]);
    for (std::size_t i = 1; i < once.simplexes.size(); ++i) CHECK(once.simplexes[i].atoms.empty());
    CHECK(face_closure(once) == once);
  }

  TEST_CASE("the six-vertex strip has nineteen cells") {
    const SimplicialModel m = load_corpus_model("strip.json");
    const CellTable t = build_cell_table(m);
    CHECK(t.size() == 19);
    CHECK(t.max_dim() == 2);
    // closure of the four triangles alone gives the same complex
    SimplicialModel tris = m;
    tris.simplexes.erase(std::remove_if(tris.simplexes.begin(), tris.simplexes.end(),
                                        [](const SimplexSpec& s) { return s.dimension() < 2; }),
                         tris.simplexes.end());
    CHECK(face_closure(tris).simplexes.size() == 19);
  }

  TEST_CASE("validate_combinatorial") {
    SimplicialModel closed = face_closure(triangle_only());
    CHECK(validate_combinatorial(closed).ok());

    SimplicialModel missing = closed;
    missing.simplexes.erase(std::find_if(missing.simplexes.begin(), missing.simplexes.end(),
                                         [](const SimplexSpec& s) { return s.points == std::vector<VertexIndex>{0, 1}; }));
    const ValidationReport r = validate_combinatorial(missing);
    CHECK_FALSE(r.ok());
    CHECK(r.count(ViolationKind::MissingFace) == 1);

    SimplicialModel dup;
    dup.ambient_dim = 1;
    dup.vertices = {{0}, {1}};
    dup.simplexes = {{{0}, {}}, {{1}, {}}, {{0, 1}, {}}, {{0, 1}, {}}};
    CHECK(validate_combinatorial(dup).count(ViolationKind::DuplicateSimplex) == 1);

    SimplicialModel out_of_range = dup;
    out_of_range.simplexes = {{{0}, {}}, {{7}, {}}};
    CHECK(validate_combinatorial(out_of_range).count(ViolationKind::IndexOutOfRange) == 1);
  }

  TEST_CASE("validate_geometric: collinear triangle") {
    SimplicialModel m;
    m.ambient_dim = 2;
    m.vertices = {{0, 0}, {1, 1}, {2, 2}};
    m.simplexes = {{{0, 1, 2}, {}}};
    const ValidationReport r = validate_geometric(face_closure(m));
    CHECK(r.count(ViolationKind::AffineDependence) == 1);
  }

  TEST_CASE("validate_geometric: the strip and the small paper models are valid") {
    for (const char* name : {"strip.json", "square.json", "modelA.json", "modelC.json", "anatomy.json"}) {
      CAPTURE(name);
      CHECK(validate_geometric(load_corpus_model(name)).ok());
    }
  }

  TEST_CASE("validate_geometric: overlapping triangles without shared vertices") {
    SimplicialModel m;
    m.ambient_dim = 2;
    m.vertices = {{0, 0}, {2, 0}, {0, 2}, {0.5, 0.5}, {2.5, 0.5}, {0.5, 2.5}};
    m.simplexes = {{{0, 1, 2}, {}}, {{3, 4, 5}, {}}};
    const ValidationReport r = validate_geometric(face_closure(m));
    CHECK(r.count(ViolationKind::BadIntersection) >= 1);

    // Independent confirmation: some sample point lies inside both hulls.
    bool overlap = false;
    for (int i = 0; i <= 50 && !overlap; ++i) {
      for (int j = 0; j <= 50 && !overlap; ++j) {
        const Point p{i * 0.06, j * 0.06};
        overlap = inside_triangle(p, m.vertices[0], m.vertices[1], m.vertices[2]) &&
                  inside_triangle(p, m.vertices[3], m.vertices[4], m.vertices[5]);
      }
    }
    CHECK(overlap);
  }

  TEST_CASE("validate_geometric: triangles touching in a single vertex are fine, crossing edges are not") {
    SimplicialModel touch;
    touch.ambient_dim = 2;
    touch.vertices = {{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    touch.simplexes = {{{0, 1, 2}, {}}, {{0, 3, 4}, {}}};
    CHECK(validate_geometric(face_closure(touch)).ok());

    SimplicialModel cross;
    cross.ambient_dim = 2;
    cross.vertices = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
    cross.simplexes = {{{0, 1}, {}}, {{2, 3}, {}}};
    CHECK(validate_geometric(face_closure(cross)).count(ViolationKind::BadIntersection) == 1);
  }

  TEST_CASE("validate_geometric rejects a non-positive tolerance") {
    CHECK(kind_of([] { validate_geometric(face_closure(triangle_only()), 0.0); }) == ErrorKind::ToleranceInvalid);
    CHECK(kind_of([] { validate_geometric(face_closure(triangle_only()), -1.0); }) == ErrorKind::ToleranceInvalid);
  }

  TEST_CASE("build_cell_table orders by dimension then vertex list") {
    const CellTable t = build_cell_table(face_closure(triangle_only()));
    REQUIRE(t.size() == 7);
    const std::vector<std::vector<VertexIndex>> expect{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
    for (CellId i = 0; i < 7; ++i) {
      auto v = t.vertices(i);
      CHECK(std::vector<VertexIndex>(v.begin(), v.end()) == expect[i]);
    }
    CHECK(t.label(6) == "[0,1,2]");
  }

  TEST_CASE("build_cell_table: four-vertex model has eleven cells") {
    CHECK(build_cell_table(load_corpus_model("square.json")).size() == 11);
  }

  TEST_CASE("build_cell_table is invariant under listing order") {
    std::mt19937_64 rng(7);
    SimplicialModel m = load_corpus_model("strip.json");
    const CellTable ref = build_cell_table(m);
    for (int i = 0; i < 20; ++i) {
      std::shuffle(m.simplexes.begin(), m.simplexes.end(), rng);
      CHECK(build_cell_table(m) == ref);
    }
  }

  TEST_CASE("build_cell_table errors") {
    SimplicialModel open = triangle_only();
    CHECK(kind_of([&] { build_cell_table(open); }) == ErrorKind::NotClosed);
    SimplicialModel dup = face_closure(triangle_only());
    dup.simplexes.push_back(dup.simplexes.front());
    CHECK(kind_of([&] { build_cell_table(dup); }) == ErrorKind::DuplicateSimplex);
    const CellTable t = build_cell_table(face_closure(triangle_only()));
    CHECK(kind_of([&] { t.vertices(99); }) == ErrorKind::UnknownCell);
    const std::vector<VertexIndex> nope{0, 5};
    CHECK_FALSE(t.find(nope).has_value());
    CHECK(kind_of([&] { t.id_of(nope); }) == ErrorKind::UnknownCell);
  }

  TEST_CASE("barycentre") {
    SimplicialModel m = face_closure(triangle_only());
    const CellTable t = build_cell_table(m);
    CHECK(barycentre(m, t, 1) == Point{1, 0});
    const Point edge = barycentre(m, t, t.id_of(std::vector<VertexIndex>{0, 1}));
    CHECK(edge[0] == doctest::Approx(0.5));
    CHECK(edge[1] == doctest::Approx(0.0));
    const Point tri = barycentre(m, t, 6);
    CHECK(tri[0] == doctest::Approx(1.0 / 3));
    CHECK(tri[1] == doctest::Approx(1.0 / 3));
    CHECK(kind_of([&] { barycentre(m, t, 7); }) == ErrorKind::UnknownCell);
  }

  TEST_CASE("vertex-subset relation is a partial order on cells") {
    std::mt19937_64 rng(11);
    polymc::testing::RandomModelParams p;
    p.max_cells = 200;
    p.max_vertices = 9;
    for (int round = 0; round < 10; ++round) {
      const CellTable t = build_cell_table(polymc::testing::random_model(rng, p));
      const std::size_t n = t.size();
      auto le = [&](CellId a, CellId b) {
        auto va = t.vertices(a), vb = t.vertices(b);
        return std::includes(vb.begin(), vb.end(), va.begin(), va.end());
      };
      // Cache the relation, then check the laws without per-pair assertions.
      std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
      for (CellId a = 0; a < n; ++a) {
        for (CellId b = 0; b < n; ++b) rel[a][b] = le(a, b);
      }
      std::size_t broken = 0;
      for (CellId a = 0; a < n; ++a) {
        if (!rel[a][a]) ++broken;
        for (CellId b = 0; b < n; ++b) {
          if (!rel[a][b]) continue;
          if (a != b && rel[b][a]) ++broken;
          for (CellId c = 0; c < n; ++c) {
            if (rel[b][c] && !rel[a][c]) ++broken;
          }
        }
      }
      CHECK(broken == 0);
    }
  }
}
