#include "support.hpp"

#include <algorithm>
#include <functional>

#include "polymc/model_io.hpp"

namespace polymc::testing {

std::filesystem::path corpus_dir() { return POLYMC_CORPUS_DIR; }
std::filesystem::path golden_dir() { return POLYMC_GOLDEN_DIR; }
std::filesystem::path corpus(const std::string& name) { return corpus_dir() / name; }

SimplicialModel load_corpus_model(const std::string& name) {
  return load_model_json(read_file(corpus(name)));
}

namespace {

std::vector<VertexIndex> parse_name(const std::string& name, const std::vector<std::string>& letters) {
  std::vector<VertexIndex> pts;
  std::size_t i = 0;
  while (i < name.size()) {
    bool found = false;
    // Longest match first so names like "p10" beat "p1".
    std::size_t best = 0;
    VertexIndex best_v = 0;
    for (VertexIndex v = 0; v < letters.size(); ++v) {
      const std::string& l = letters[v];
      if (l.size() > best && name.compare(i, l.size(), l) == 0) {
        best = l.size();
        best_v = v;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("bad cell name " + name);
    pts.push_back(best_v);
    i += best;
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

}  // namespace

CellId cell_named(const KripkeModel& m, const std::string& name, const std::vector<std::string>& letters) {
  return m.cells().id_of(parse_name(name, letters));
}

SatSet cells_named(const KripkeModel& m, std::initializer_list<std::string> names,
                   const std::vector<std::string>& letters) {
  SatSet s(m.size());
  for (const std::string& n : names) s.set(cell_named(m, n, letters));
  return s;
}

std::set<std::string> names_of(const KripkeModel& m, const SatSet& s, const std::vector<std::string>& letters) {
  std::set<std::string> out;
  s.for_each([&](CellId id) {
    std::string name;
    for (VertexIndex v : m.cells().vertices(id)) name += letters.at(v);
    out.insert(name);
  });
  return out;
}

SimplicialModel random_model(std::mt19937_64& rng, const RandomModelParams& p) {
  std::set<std::vector<VertexIndex>> cells;
  auto closure_of = [](const std::vector<VertexIndex>& s) {
    std::vector<std::vector<VertexIndex>> faces;
    for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
      std::vector<VertexIndex> f;
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (mask & (1u << b)) f.push_back(s[b]);
      }
      faces.push_back(std::move(f));
    }
    return faces;
  };
  auto try_add = [&](const std::vector<VertexIndex>& s) {
    auto faces = closure_of(s);
    std::size_t fresh = 0;
    for (const auto& f : faces) fresh += cells.count(f) ? 0 : 1;
    if (cells.size() + fresh > p.max_cells) return false;
    cells.insert(faces.begin(), faces.end());
    return true;
  };

  const std::size_t nv = std::uniform_int_distribution<std::size_t>(
      p.force_max_dim ? static_cast<std::size_t>(p.max_dim + 1) : 1, p.max_vertices)(rng);
  std::vector<VertexIndex> all(nv);
  for (VertexIndex v = 0; v < nv; ++v) all[v] = v;

  if (p.force_max_dim) {
    std::vector<VertexIndex> s = all;
    std::shuffle(s.begin(), s.end(), rng);
    s.resize(static_cast<std::size_t>(p.max_dim + 1));
    std::sort(s.begin(), s.end());
    try_add(s);
  }
  const int attempts = std::uniform_int_distribution<int>(1, 12)(rng);
  for (int a = 0; a < attempts; ++a) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(
        1, std::min<std::size_t>(nv, static_cast<std::size_t>(p.max_dim + 1)))(rng);
    std::vector<VertexIndex> s = all;
    std::shuffle(s.begin(), s.end(), rng);
    s.resize(k);
    std::sort(s.begin(), s.end());
    try_add(s);
  }

  SimplicialModel m;
  m.ambient_dim = 3;
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (std::size_t v = 0; v < nv; ++v) m.vertices.push_back({coord(rng), coord(rng), coord(rng)});
  m.atom_names = p.atoms;
  std::bernoulli_distribution has(p.atom_density);
  std::vector<std::vector<VertexIndex>> ordered(cells.begin(), cells.end());
  // Shuffle the listing order; the cell table must not depend on it.
  std::shuffle(ordered.begin(), ordered.end(), rng);
  for (auto& c : ordered) {
    SimplexSpec s{std::move(c), {}};
    for (AtomId a = 0; a < p.atoms.size(); ++a) {
      if (has(rng)) s.atoms.push_back(a);
    }
    m.simplexes.push_back(std::move(s));
  }
  return m;
}

Formula random_formula(std::mt19937_64& rng, int depth, const std::vector<std::string>& atoms) {
  std::uniform_int_distribution<int> leaf(0, static_cast<int>(atoms.size()));
  if (depth <= 0) {
    const int i = leaf(rng);
    return i == static_cast<int>(atoms.size()) ? Formula::top() : Formula::atom(atoms[i]);
  }
  switch (std::uniform_int_distribution<int>(0, 6)(rng)) {
    case 0: return random_formula(rng, 0, atoms);
    case 1: return !random_formula(rng, depth - 1, atoms);
    case 2: return random_formula(rng, depth - 1, atoms) & random_formula(rng, depth - 1, atoms);
    case 3: return random_formula(rng, depth - 1, atoms) | random_formula(rng, depth - 1, atoms);
    case 4: return Formula::box(random_formula(rng, depth - 1, atoms));
    default: {
      Formula f = random_formula(rng, depth - 1, atoms);
      return Formula::gamma(f, random_formula(rng, depth - 1, atoms));
    }
  }
}

std::size_t count_distinct_subformulas(const std::vector<Formula>& roots) {
  std::set<std::string> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    seen.insert(f.to_string());
    for (std::size_t i = 0; i < f.child_count(); ++i) walk(f.child(i));
  };
  for (const Formula& r : roots) walk(r);
  return seen.size();
}

bool encoding_bounds_hold(const KripkeModel& m, std::string* why) {
  const std::size_t n = m.size();
  const int d = m.max_dim();
  const std::size_t bound = d < 0 ? 0 : n * ((std::size_t{1} << (d + 1)) - 1);
  if (m.edge_count() > bound) {
    if (why) *why = "edge count " + std::to_string(m.edge_count()) + " > " + std::to_string(bound);
    return false;
  }
  for (CellId c = 0; c < n; ++c) {
    const std::size_t expect = (std::size_t{1} << (m.cells().dim(c) + 1)) - 2;
    if (m.in_adj(c).size() != expect) {
      if (why) *why = "cell " + m.cells().label(c) + " has " + std::to_string(m.in_adj(c).size()) + " faces";
      return false;
    }
  }
  return true;
}

}  // namespace polymc::testing
