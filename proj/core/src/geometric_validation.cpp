#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "polymc/error.hpp"
#include "polymc/geometry.hpp"
#include "simplex_index.hpp"

namespace polymc {

namespace {

struct Box {
  std::vector<double> lo, hi;
};

Box bounding_box(const SimplicialModel& model, const SimplexSpec& s) {
  Box box{model.vertices[s.points[0]], model.vertices[s.points[0]]};
  for (VertexIndex v : s.points) {
    for (std::size_t k = 0; k < model.ambient_dim; ++k) {
      box.lo[k] = std::min(box.lo[k], model.vertices[v][k]);
      box.hi[k] = std::max(box.hi[k], model.vertices[v][k]);
    }
  }
  return box;
}

bool boxes_overlap(const Box& a, const Box& b, double tol) {
  for (std::size_t k = 0; k < a.lo.size(); ++k) {
    if (a.hi[k] + tol < b.lo[k] || b.hi[k] + tol < a.lo[k]) return false;
  }
  return true;
}

bool affinely_independent(const SimplicialModel& model, const SimplexSpec& s, double tol) {
  const auto d = static_cast<Eigen::Index>(s.points.size()) - 1;
  if (d == 0) return true;
  const auto m = static_cast<Eigen::Index>(model.ambient_dim);
  if (d > m) return false;
  Eigen::MatrixXd edges(m, d);
  const Point& origin = model.vertices[s.points[0]];
  for (Eigen::Index j = 0; j < d; ++j) {
    const Point& p = model.vertices[s.points[static_cast<std::size_t>(j) + 1]];
    for (Eigen::Index i = 0; i < m; ++i) edges(i, j) = p[i] - origin[i];
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(edges);
  const auto& sv = svd.singularValues();
  const double threshold = tol * std::max(1.0, sv.maxCoeff());
  return sv.minCoeff() > threshold;
}

// Largest barycentric mass that a common point of both hulls can put on
// vertices outside the shared set. Solved as a tiny LP by visiting every
// basic solution of {A x = b, x >= 0}; returns -inf when the hulls are apart.
double max_unshared_mass(const SimplicialModel& model, const SimplexSpec& a, const SimplexSpec& b,
                         double tol) {
  const auto m = static_cast<Eigen::Index>(model.ambient_dim);
  const auto ka = static_cast<Eigen::Index>(a.points.size());
  const auto kb = static_cast<Eigen::Index>(b.points.size());
  const Eigen::Index cols = ka + kb;
  const Eigen::Index rows = m + 2;

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rows);
  Eigen::VectorXd weight = Eigen::VectorXd::Zero(cols);
  rhs(0) = 1.0;
  rhs(1) = 1.0;
  double scale = 1.0;
  auto fill = [&](const SimplexSpec& own, const SimplexSpec& other, Eigen::Index offset,
                  Eigen::Index sum_row, double sign) {
    for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(own.points.size()); ++j) {
      VertexIndex v = own.points[static_cast<std::size_t>(j)];
      A(sum_row, offset + j) = 1.0;
      for (Eigen::Index i = 0; i < m; ++i) {
        A(2 + i, offset + j) = sign * model.vertices[v][i];
        scale = std::max(scale, std::abs(model.vertices[v][i]));
      }
      weight(offset + j) = std::ranges::binary_search(other.points, v) ? 0.0 : 1.0;
    }
  };
  fill(a, b, 0, 0, 1.0);
  fill(b, a, ka, 1, -1.0);

  Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
  lu.setThreshold(1e-12);
  const Eigen::Index rank = lu.rank();
  const double feas_tol = tol * scale;

  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> pick(static_cast<std::size_t>(rank));
  // Enumerate column subsets of size `rank` in lexicographic order.
  for (Eigen::Index i = 0; i < rank; ++i) pick[static_cast<std::size_t>(i)] = static_cast<int>(i);
  while (true) {
    Eigen::MatrixXd basis(rows, rank);
    for (Eigen::Index j = 0; j < rank; ++j) basis.col(j) = A.col(pick[static_cast<std::size_t>(j)]);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis);
    qr.setThreshold(1e-12);
    if (qr.rank() == rank) {
      Eigen::VectorXd x = qr.solve(rhs);
      if ((basis * x - rhs).norm() <= feas_tol && x.minCoeff() >= -tol) {
        double mass = 0.0;
        for (Eigen::Index j = 0; j < rank; ++j) {
          mass += weight(pick[static_cast<std::size_t>(j)]) * std::max(0.0, x(j));
        }
        best = std::max(best, mass);
      }
    }
    Eigen::Index i = rank - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == cols - rank + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (Eigen::Index j = i + 1; j < rank; ++j) {
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
    }
  }
  return best;
}

std::string points_text(const SimplexSpec& s) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < s.points.size(); ++i) out << (i ? "," : "") << s.points[i];
  out << ']';
  return out.str();
}

}  // namespace

ValidationReport validate_geometric(const SimplicialModel& model, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorKind::ToleranceInvalid, "tolerance must be positive");
  ValidationReport report;
  const auto& specs = model.simplexes;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (specs[i].points.empty() || specs[i].points.back() >= model.vertices.size()) {
      throw Error(ErrorKind::IndexError, "simplex #" + std::to_string(i) + " is not valid");
    }
  }

  std::vector<bool> degenerate(specs.size(), false);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (!affinely_independent(model, specs[i], tol)) {
      degenerate[i] = true;
      report.violations.push_back(Violation{ViolationKind::AffineDependence, {i},
                                            points_text(specs[i]) + " is affinely dependent"});
    }
  }

  detail::SimplexIndex faces(specs.size() * 4);
  std::vector<VertexIndex> scratch;
  for (const SimplexSpec& s : specs) {
    const auto k = static_cast<std::uint32_t>(s.points.size());
    for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
      scratch.clear();
      for (std::uint32_t b = 0; b < k; ++b) {
        if (mask & (1u << b)) scratch.push_back(s.points[b]);
      }
      faces.insert(scratch);
    }
  }

  std::vector<std::size_t> maximal;
  std::vector<Box> boxes;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (degenerate[i] || faces.find(specs[i].points)) continue;
    maximal.push_back(i);
  }
  boxes.reserve(maximal.size());
  for (std::size_t i : maximal) boxes.push_back(bounding_box(model, specs[i]));

  // Sweep along the first axis; only nearby boxes need the exact test.
  std::vector<std::size_t> by_lo(maximal.size());
  for (std::size_t k = 0; k < by_lo.size(); ++k) by_lo[k] = k;
  if (model.ambient_dim > 0) {
    std::sort(by_lo.begin(), by_lo.end(),
              [&](std::size_t a, std::size_t b) { return boxes[a].lo[0] < boxes[b].lo[0]; });
  }
  for (std::size_t x = 0; x < by_lo.size(); ++x) {
    const std::size_t p = by_lo[x];
    for (std::size_t y = x + 1; y < by_lo.size(); ++y) {
      const std::size_t q = by_lo[y];
      if (model.ambient_dim > 0 && boxes[q].lo[0] > boxes[p].hi[0] + tol) break;
      if (!boxes_overlap(boxes[p], boxes[q], tol)) continue;
      const SimplexSpec& a = specs[maximal[p]];
      const SimplexSpec& b = specs[maximal[q]];
      const double mass = max_unshared_mass(model, a, b, tol);
      if (mass > tol) {
        std::ostringstream detail;
        detail << points_text(a) << " and " << points_text(b)
               << " intersect outside their common face (mass " << mass << ")";
        auto lo = std::min(maximal[p], maximal[q]);
        auto hi = std::max(maximal[p], maximal[q]);
        report.violations.push_back(Violation{ViolationKind::BadIntersection, {lo, hi}, detail.str()});
      }
    }
  }
  return report;
}

}  // namespace polymc
