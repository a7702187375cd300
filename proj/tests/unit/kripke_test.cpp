#include <doctest.h>

#include <algorithm>
#include <random>

#include "polymc/error.hpp"
#include "polymc/kripke.hpp"
#include "polymc/maze.hpp"
#include "support.hpp"

using namespace polymc;
using polymc::testing::cells_named;
using polymc::testing::load_corpus_model;
using polymc::testing::names_of;

namespace {

const std::vector<std::string> kABCD{"A", "B", "C", "D"};

std::set<std::string> names(const KripkeModel& m, std::span<const CellId> ids) {
  SatSet s(m.size());
  for (CellId id : ids) s.set(id);
  return names_of(m, s, kABCD);
}

// Symmetry, transitivity and irreflexivity checked directly on the arrays.
void check_relation(const KripkeModel& m) {
  std::size_t broken = 0;
  for (CellId s = 0; s < m.size(); ++s) {
    auto out = m.out_adj(s);
    if (!std::is_sorted(out.begin(), out.end())) ++broken;
    for (CellId t : out) {
      if (t == s) ++broken;
      auto in = m.in_adj(t);
      if (!std::binary_search(in.begin(), in.end(), s)) ++broken;
      for (CellId u : m.out_adj(t)) {
        if (!std::binary_search(out.begin(), out.end(), u)) ++broken;
      }
    }
    for (CellId f : m.in_adj(s)) {
      auto o = m.out_adj(f);
      if (!std::binary_search(o.begin(), o.end(), s)) ++broken;
    }
  }
  CHECK(broken == 0);
  std::string why;
  CHECK_MESSAGE(polymc::testing::encoding_bounds_hold(m, &why), why);
}

}  // namespace

TEST_SUITE("kripke") {
  TEST_CASE("SatSet basics") {
    SatSet a(70);
    CHECK(a.none());
    a.set(0);
    a.set(69);
    CHECK(a.count() == 2);
    CHECK((~a).count() == 68);
    CHECK((~SatSet(70)).count() == 70);
    SatSet b = SatSet::from_indices(70, std::vector<CellId>{0, 5});
    CHECK((a & b).indices() == std::vector<CellId>{0});
    CHECK((a | b).indices() == std::vector<CellId>{0, 5, 69});
    CHECK((a & b).is_subset_of(a));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK(SatSet::all(70).count() == 70);
    CHECK_THROWS_AS(a & SatSet(3), Error);
    CHECK_THROWS_AS(SatSet::from_indices(3, std::vector<CellId>{3}), Error);
    SatSet empty(0);
    CHECK((~empty).size() == 0);
  }

  TEST_CASE("four-vertex model: adjacency of ABC and C") {
    const KripkeModel m = build_kripke(load_corpus_model("square.json"));
    CHECK(m.size() == 11);
    const CellId abc = polymc::testing::cell_named(m, "ABC", kABCD);
    const CellId c = polymc::testing::cell_named(m, "C", kABCD);
    CHECK(names(m, m.in_adj(abc)) == std::set<std::string>{"A", "B", "C", "AB", "AC", "BC"});
    CHECK(m.in_adj(abc).size() == 6);
    CHECK(names(m, m.out_adj(c)) == std::set<std::string>{"AC", "BC", "CD", "ABC", "BCD"});
    check_relation(m);
  }

  TEST_CASE("single vertex model") {
    SimplicialModel sm;
    sm.ambient_dim = 1;
    sm.vertices = {{0.0}};
    sm.atom_names = {"p"};
    sm.simplexes = {{{0}, {0}}};
    const KripkeModel m = build_kripke(sm);
    CHECK(m.size() == 1);
    CHECK(m.edge_count() == 0);
    CHECK(m.atom("p").count() == 1);
    CHECK_THROWS_AS(m.atom("nope"), Error);
  }

  TEST_CASE("atoms mark exactly the listed cells") {
    const KripkeModel m = build_kripke(load_corpus_model("square.json"));
    CHECK(names_of(m, m.atom("r"), kABCD) == std::set<std::string>{"A", "AB", "AC", "BC", "ABC"});
    CHECK(names_of(m, m.atom("g"), kABCD) == std::set<std::string>{"C", "D"});
  }

  TEST_CASE("out_set and in_set examples") {
    const KripkeModel m = build_kripke(load_corpus_model("square.json"));
    const SatSet g = m.atom("g");
    const SatSet out = out_set(m, g);
    CHECK(names_of(m, out, kABCD) == std::set<std::string>{"C", "D", "AC", "BC", "CD", "BD", "ABC", "BCD"});
    CHECK(names_of(m, out & m.atom("r"), kABCD) == std::set<std::string>{"AC", "BC", "ABC"});
    CHECK(out_set(m, SatSet(11)).none());
    CHECK(out_set(m, SatSet::all(11)).count() == 11);

    const SatSet flooded = cells_named(m, {"A", "AB", "AC", "BC", "ABC"}, kABCD);
    CHECK(names_of(m, in_set(m, flooded), kABCD) ==
          std::set<std::string>{"A", "B", "C", "AB", "AC", "BC", "ABC"});
    CHECK(in_set(m, SatSet(11)).none());
    const SatSet verts = cells_named(m, {"A", "D"}, kABCD);
    CHECK(in_set(m, verts) == verts);
    // without reflexivity a vertex-only set has no faces
    CHECK(in_set(m, verts, false).none());
    CHECK_THROWS_AS(out_set(m, SatSet(3)), Error);
    CHECK_THROWS_AS(in_set(m, SatSet(12)), Error);
  }

  TEST_CASE("random complexes satisfy symmetry, transitivity and the edge bound") {
    std::mt19937_64 rng(3);
    polymc::testing::RandomModelParams p;
    p.max_cells = 500;
    p.max_vertices = 12;
    for (int i = 0; i < 60; ++i) {
      p.force_max_dim = i % 2 == 0;
      check_relation(build_kripke(polymc::testing::random_model(rng, p)));
    }
    MazeParams mp;
    mp.grid = {3, 3, 3};
    mp.seed = 5;
    const KripkeModel maze = build_kripke(generate_maze(mp).model);
    CHECK(maze.max_dim() == 3);
    CHECK(maze.size() <= 5000);
    check_relation(maze);
  }

  TEST_CASE("out_set and in_set are monotone and distribute over union") {
    std::mt19937_64 rng(19);
    polymc::testing::RandomModelParams p;
    p.max_cells = 60;
    p.max_vertices = 7;
    std::size_t broken = 0;
    for (int i = 0; i < 100; ++i) {
      const KripkeModel m = build_kripke(polymc::testing::random_model(rng, p));
      SatSet s(m.size()), t(m.size());
      std::bernoulli_distribution coin(0.3);
      for (CellId c = 0; c < m.size(); ++c) {
        if (coin(rng)) s.set(c);
        if (coin(rng)) t.set(c);
      }
      const SatSet st = s | t;
      if (!out_set(m, s).is_subset_of(out_set(m, st))) ++broken;
      if (!in_set(m, s).is_subset_of(in_set(m, st))) ++broken;
      if (out_set(m, st) != (out_set(m, s) | out_set(m, t))) ++broken;
      if (in_set(m, st) != (in_set(m, s) | in_set(m, t))) ++broken;
    }
    CHECK(broken == 0);
  }

  TEST_CASE("build_kripke reports missing faces") {
    SimplicialModel sm;
    sm.ambient_dim = 2;
    sm.vertices = {{0, 0}, {1, 0}, {0, 1}};
    sm.simplexes = {{{0, 1, 2}, {}}};
    CHECK_THROWS_AS(build_kripke(sm), Error);
  }
}
