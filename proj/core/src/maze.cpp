#include "polymc/maze.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "polymc/error.hpp"

namespace polymc {

char atom_letter(RoomColour c) noexcept {
  switch (c) {
    case RoomColour::Green: return 'G';
    case RoomColour::White: return 'W';
    case RoomColour::Black: return 'B';
    case RoomColour::Red: return 'R';
  }
  return '?';
}

namespace {

using Lattice = std::array<int, 3>;

// Uniform in [0,1) from the top 53 bits, identical on every platform.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Five tetrahedra of the unit box at lattice corner `o`. The central one uses
// the corners of even lattice parity, so shared faces of neighbouring boxes are
// cut along the same diagonal.
std::vector<std::array<Lattice, 4>> split_box(const Lattice& o) {
  std::vector<Lattice> even, odd;
  for (int c = 0; c < 8; ++c) {
    Lattice p{o[0] + (c & 1), o[1] + ((c >> 1) & 1), o[2] + ((c >> 2) & 1)};
    ((p[0] + p[1] + p[2]) % 2 == 0 ? even : odd).push_back(p);
  }
  std::vector<std::array<Lattice, 4>> tets;
  tets.push_back({even[0], even[1], even[2], even[3]});
  for (const Lattice& q : odd) {
    std::array<Lattice, 4> t{q, q, q, q};
    int k = 1;
    for (int axis = 0; axis < 3; ++axis) {
      t[k] = q;
      t[k][axis] += (q[axis] == o[axis]) ? 1 : -1;
      ++k;
    }
    tets.push_back(t);
  }
  return tets;
}

}  // namespace

Maze generate_maze(const MazeParams& p) {
  for (int n : p.grid) {
    if (n < 1) throw Error(ErrorKind::InvalidParams, "grid dimensions must be positive");
    if (n > 256) throw Error(ErrorKind::InvalidParams, "grid dimension too large");
  }
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(p.black_fraction)) throw Error(ErrorKind::InvalidParams, "black_fraction must lie in [0,1]");
  if (!in_unit(p.corridor_probability)) {
    throw Error(ErrorKind::InvalidParams, "corridor_probability must lie in [0,1]");
  }
  if (!(p.room_size > 0.0) || !(p.corridor_length > 0.0)) {
    throw Error(ErrorKind::InvalidParams, "room_size and corridor_length must be positive");
  }

  Maze maze;
  MazeLayout& layout = maze.layout;
  layout.grid = p.grid;
  const auto [nx, ny, nz] = p.grid;
  const std::size_t rooms = static_cast<std::size_t>(nx) * ny * nz;
  std::mt19937_64 rng(p.seed);

  layout.colours.resize(rooms);
  for (int z = 0; z < nz; ++z) {
    for (int y = 0; y < ny; ++y) {
      for (int x = 0; x < nx; ++x) {
        RoomColour c;
        if (x == nx / 2 && y == ny / 2 && z == nz / 2) {
          c = RoomColour::Red;
        } else if (x == 0 || y == 0 || z == 0 || x == nx - 1 || y == ny - 1 || z == nz - 1) {
          c = RoomColour::Green;
        } else {
          c = unit(rng) < p.black_fraction ? RoomColour::Black : RoomColour::White;
        }
        layout.colours[layout.room_index(x, y, z)] = c;
      }
    }
  }

  // Each existing box as (fine cell, owner): rooms sit at even fine indices,
  // a corridor at the odd index between its two rooms.
  struct Box {
    Lattice fine;
    bool is_room;
    std::size_t owner;  // room index or corridor index
  };
  std::vector<Box> boxes;
  for (int z = 0; z < nz; ++z) {
    for (int y = 0; y < ny; ++y) {
      for (int x = 0; x < nx; ++x) boxes.push_back({{2 * x, 2 * y, 2 * z}, true, layout.room_index(x, y, z)});
    }
  }
  for (int z = 0; z < nz; ++z) {
    for (int y = 0; y < ny; ++y) {
      for (int x = 0; x < nx; ++x) {
        const Lattice r{x, y, z};
        for (int axis = 0; axis < 3; ++axis) {
          if (r[axis] + 1 >= p.grid[axis]) continue;
          if (unit(rng) >= p.corridor_probability) continue;
          Lattice s = r;
          ++s[axis];
          Lattice fine{2 * x, 2 * y, 2 * z};
          ++fine[axis];
          boxes.push_back({fine, false, layout.corridors.size()});
          layout.corridors.push_back(
              {layout.room_index(x, y, z), layout.room_index(s[0], s[1], s[2]), axis, {}});
        }
      }
    }
  }

  // Lattice coordinates of every tetrahedron, then dense vertex numbering in
  // lexicographic lattice order.
  std::vector<std::array<Lattice, 4>> tets;
  std::vector<std::size_t> tet_box;
  std::set<Lattice> used;
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    for (auto& t : split_box(boxes[b].fine)) {
      for (const Lattice& q : t) used.insert(q);
      tets.push_back(t);
      tet_box.push_back(b);
    }
  }
  std::map<Lattice, VertexIndex> vid;
  const double pitch = p.room_size + p.corridor_length;
  auto coord = [&](int i) { return (i / 2) * pitch + (i % 2) * p.room_size; };
  SimplicialModel& model = maze.model;
  model.ambient_dim = 3;
  model.atom_names = {"G", "W", "B", "R", "corridor"};
  for (const Lattice& q : used) {
    vid.emplace(q, static_cast<VertexIndex>(model.vertices.size()));
    model.vertices.push_back({coord(q[0]), coord(q[1]), coord(q[2])});
  }

  layout.room_tetrahedra.resize(rooms);
  // Room atoms first; corridor atoms only on faces no room owns.
  std::map<std::vector<VertexIndex>, AtomId> atom_of;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t t = 0; t < tets.size(); ++t) {
      const Box& box = boxes[tet_box[t]];
      if (box.is_room != (pass == 0)) continue;
      std::vector<VertexIndex> pts;
      for (const Lattice& q : tets[t]) pts.push_back(vid.at(q));
      std::sort(pts.begin(), pts.end());
      const AtomId atom = box.is_room ? static_cast<AtomId>(layout.colours[box.owner]) : 4;
      (box.is_room ? layout.room_tetrahedra[box.owner] : layout.corridors[box.owner].tetrahedra)
          .push_back(pts);
      for (unsigned mask = 1; mask < 16; ++mask) {
        std::vector<VertexIndex> face;
        for (int i = 0; i < 4; ++i) {
          if (mask & (1u << i)) face.push_back(pts[i]);
        }
        atom_of.emplace(std::move(face), atom);
      }
    }
  }

  std::vector<std::pair<std::vector<VertexIndex>, AtomId>> cells(atom_of.begin(), atom_of.end());
  std::stable_sort(cells.begin(), cells.end(),
                   [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  model.simplexes.reserve(cells.size());
  for (auto& [pts, atom] : cells) model.simplexes.push_back({std::move(pts), {atom}});
  return maze;
}

}  // namespace polymc
