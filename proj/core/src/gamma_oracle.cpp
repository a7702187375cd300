// Brute-force reference for gamma, used only to cross-check flooding. It reads
// the face relation off the vertex lists and ignores the adjacency arrays.

#include <algorithm>

#include "polymc/checker.hpp"
#include "polymc/error.hpp"

namespace polymc {

SatSet check_gamma_oracle(const KripkeModel& m, const SatSet& phi, const SatSet& psi,
                          std::size_t max_cells) {
  const std::size_t n = m.size();
  if (max_cells > kOracleHardMaxCells) {
    throw Error(ErrorKind::ModelTooLarge, "oracle limit " + std::to_string(max_cells) +
                                              " exceeds " + std::to_string(kOracleHardMaxCells));
  }
  if (n > max_cells) {
    throw Error(ErrorKind::ModelTooLarge, std::to_string(n) + " cells exceed the oracle limit of " +
                                              std::to_string(max_cells));
  }
  if (phi.size() != n || psi.size() != n) throw Error(ErrorKind::LengthMismatch, "oracle operands");

  const CellTable& cells = m.cells();
  // le[a][b]: a is a face of b (reflexive).
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (CellId a = 0; a < n; ++a) {
    auto va = cells.vertices(a);
    for (CellId b = 0; b < n; ++b) {
      auto vb = cells.vertices(b);
      le[a][b] = std::includes(vb.begin(), vb.end(), va.begin(), va.end());
    }
  }

  // Middle cells, renumbered 0..k-1 for the visited mask.
  std::vector<CellId> mid = phi.indices();
  const std::size_t k = mid.size();
  std::vector<bool> ends(k, false);  // middle cell that can step down into psi
  for (std::size_t i = 0; i < k; ++i) {
    for (CellId c = 0; c < n; ++c) {
      if (psi.test(c) && le[c][mid[i]]) ends[i] = true;
    }
  }
  auto related = [&](std::size_t i, std::size_t j) {
    return le[mid[i]][mid[j]] || le[mid[j]][mid[i]];
  };

  // good[i]: some simple path of middle cells from i reaches an end cell.
  std::vector<bool> good(k, false);
  std::vector<bool> visited;
  for (std::size_t start = 0; start < k; ++start) {
    visited.assign((std::size_t{1} << k) * k, false);
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{1u << start, start}};
    while (!stack.empty() && !good[start]) {
      auto [mask, cur] = stack.back();
      stack.pop_back();
      if (visited[mask * k + cur]) continue;
      visited[mask * k + cur] = true;
      if (ends[cur]) {
        good[start] = true;
        break;
      }
      for (std::size_t nxt = 0; nxt < k; ++nxt) {
        if ((mask >> nxt) & 1u) continue;
        if (related(cur, nxt)) stack.emplace_back(mask | (1u << nxt), nxt);
      }
    }
  }

  SatSet out(n);
  for (CellId s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      if (good[i] && le[s][mid[i]]) {
        out.set(s);
        break;
      }
    }
  }
  return out;
}

}  // namespace polymc
