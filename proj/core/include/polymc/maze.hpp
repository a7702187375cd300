#pragma once

// Procedural 3D mazes: a grid of box rooms joined by box corridors, every box
// split into five tetrahedra. Rooms on the outer boundary are green, the centre
// room is red, interior rooms are white or black at random.

#include <array>
#include <cstdint>
#include <vector>

#include "polymc/geometry.hpp"

namespace polymc {

struct MazeParams {
  std::array<int, 3> grid{3, 3, 3};
  double black_fraction = 0.2;
  std::uint64_t seed = 0;
  double corridor_probability = 0.75;
  double room_size = 1.0;
  double corridor_length = 0.5;
};

enum class RoomColour { Green, White, Black, Red };

char atom_letter(RoomColour c) noexcept;

struct MazeCorridor {
  std::size_t a;  // room indices, a < b
  std::size_t b;
  int axis;
  std::vector<std::vector<VertexIndex>> tetrahedra;
};

struct MazeLayout {
  std::array<int, 3> grid{};
  std::vector<RoomColour> colours;  // room index = x + nx * (y + ny * z)
  std::vector<std::vector<std::vector<VertexIndex>>> room_tetrahedra;
  std::vector<MazeCorridor> corridors;

  std::size_t room_index(int x, int y, int z) const noexcept {
    return static_cast<std::size_t>(x + grid[0] * (y + grid[1] * z));
  }
  std::size_t room_count() const noexcept { return colours.size(); }
};

struct Maze {
  SimplicialModel model;
  MazeLayout layout;
};

/// Deterministic for fixed parameters. Atoms: "G", "W", "B", "R", "corridor".
/// Throws InvalidParams.
Maze generate_maze(const MazeParams& params);

}  // namespace polymc
