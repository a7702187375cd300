#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "polymc/formula.hpp"
#include "polymc/geometry.hpp"
#include "polymc/kripke.hpp"
#include "polymc/satset.hpp"

namespace polymc::testing {

std::filesystem::path corpus_dir();
std::filesystem::path golden_dir();
std::filesystem::path corpus(const std::string& name);

SimplicialModel load_corpus_model(const std::string& name);

/// Cells named by vertex letters, e.g. {"A", "AB", "ABC"} with letters "ABCD"
/// mapping to vertex indices 0, 1, 2, 3.
SatSet cells_named(const KripkeModel& m, std::initializer_list<std::string> names,
                   const std::vector<std::string>& letters);
std::set<std::string> names_of(const KripkeModel& m, const SatSet& s,
                               const std::vector<std::string>& letters);
CellId cell_named(const KripkeModel& m, const std::string& name, const std::vector<std::string>& letters);

struct RandomModelParams {
  std::size_t max_cells = 12;
  int max_dim = 3;
  std::size_t max_vertices = 6;
  std::vector<std::string> atoms{"p", "q", "r"};
  double atom_density = 0.35;
  bool force_max_dim = false;  // start from a simplex of dimension max_dim
};

/// Random face-closed complex listing every cell with random atoms.
SimplicialModel random_model(std::mt19937_64& rng, const RandomModelParams& params);

/// Random formula over `atoms` using every core connective.
Formula random_formula(std::mt19937_64& rng, int depth, const std::vector<std::string>& atoms);

/// Distinct subformulas, counted on the printed tree without any sharing.
std::size_t count_distinct_subformulas(const std::vector<Formula>& roots);

/// Edges and per-cell face counts as required by the encoding bounds.
bool encoding_bounds_hold(const KripkeModel& m, std::string* why = nullptr);

}  // namespace polymc::testing
