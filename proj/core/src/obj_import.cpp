#include <algorithm>
#include <array>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "polymc/error.hpp"
#include "polymc/model_io.hpp"

namespace polymc {

int quantize_channel(double c, int levels) {
  if (levels < 1) throw Error(ErrorKind::InvalidParams, "levels must be at least 1");
  if (!(c > 0.0)) return 0;  // also catches NaN
  const double q = std::floor(c * levels);
  if (q >= levels - 1) return levels - 1;
  return static_cast<int>(q);
}

namespace {

struct ObjVertex {
  Point position;
  std::array<double, 3> colour{0.0, 0.0, 0.0};
};

[[noreturn]] void malformed(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::MalformedLine, "line " + std::to_string(line) + ": " + msg);
}

double parse_number(std::string_view tok, std::size_t line) {
  // strtod accepts forms (exponents, leading '+') that OBJ writers emit.
  std::string s(tok);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    malformed(line, "'" + s + "' is not a number");
  }
  return v;
}

long parse_face_index(std::string_view tok, std::size_t line) {
  const auto slash = tok.find('/');
  std::string_view head = tok.substr(0, slash);
  long v = 0;
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), v);
  if (head.empty() || ec != std::errc() || ptr != head.data() + head.size() || v == 0) {
    malformed(line, "bad face index '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

ObjImport import_obj(std::string_view bytes, int levels) {
  if (levels < 1) throw Error(ErrorKind::InvalidParams, "levels must be at least 1");
  ObjImport out;
  std::vector<ObjVertex> verts;
  std::vector<std::array<std::uint32_t, 3>> faces;
  std::set<std::string> warned;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= bytes.size()) {
    std::size_t eol = bytes.find('\n', pos);
    if (eol == std::string_view::npos) eol = bytes.size();
    std::string line(bytes.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream in(line);
    std::vector<std::string> toks;
    for (std::string t; in >> t;) toks.push_back(t);
    if (toks.empty()) continue;

    if (toks[0] == "v") {
      if (toks.size() != 4 && toks.size() != 7) {
        malformed(line_no, "vertex needs 3 coordinates and optionally 3 colour channels");
      }
      ObjVertex v;
      for (int i = 1; i <= 3; ++i) v.position.push_back(parse_number(toks[i], line_no));
      if (toks.size() == 7) {
        for (int i = 0; i < 3; ++i) v.colour[i] = parse_number(toks[4 + i], line_no);
      }
      verts.push_back(std::move(v));
    } else if (toks[0] == "f") {
      if (toks.size() > 4) {
        throw Error(ErrorKind::NonTriangularFace, "line " + std::to_string(line_no) + ": face with " +
                                                      std::to_string(toks.size() - 1) + " vertices");
      }
      if (toks.size() < 4) malformed(line_no, "face needs 3 vertices");
      std::array<std::uint32_t, 3> f{};
      for (int i = 0; i < 3; ++i) {
        long idx = parse_face_index(toks[1 + i], line_no);
        // Negative indices count back from the most recent vertex.
        long resolved = idx > 0 ? idx - 1 : static_cast<long>(verts.size()) + idx;
        if (resolved < 0 || resolved >= static_cast<long>(verts.size())) {
          malformed(line_no, "face index " + std::to_string(idx) + " out of range");
        }
        f[i] = static_cast<std::uint32_t>(resolved);
      }
      std::sort(f.begin(), f.end());
      if (f[0] == f[1] || f[1] == f[2]) malformed(line_no, "face repeats a vertex");
      faces.push_back(f);
    } else if (warned.insert(toks[0]).second) {
      out.warnings.push_back("line " + std::to_string(line_no) + ": ignoring '" + toks[0] + "' records");
    }
  }

  std::sort(faces.begin(), faces.end());
  if (auto dup = std::unique(faces.begin(), faces.end()); dup != faces.end()) {
    out.warnings.push_back(std::to_string(faces.end() - dup) + " duplicate face(s) dropped");
    faces.erase(dup, faces.end());
  }

  // Only vertices used by some face become cells.
  std::vector<std::uint32_t> remap(verts.size(), UINT32_MAX);
  for (const auto& f : faces) {
    for (auto v : f) remap[v] = 0;
  }
  SimplicialModel& model = out.model;
  model.ambient_dim = 3;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (remap[i] == 0) {
      remap[i] = static_cast<std::uint32_t>(model.vertices.size());
      model.vertices.push_back(verts[i].position);
    }
  }
  std::vector<std::array<double, 3>> colour(model.vertices.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (remap[i] != UINT32_MAX) colour[remap[i]] = verts[i].colour;
  }

  for (char ch : {'r', 'g', 'b'}) {
    for (int l = 0; l < levels; ++l) model.atom_names.push_back(std::string(1, ch) + std::to_string(l));
  }

  std::set<std::vector<VertexIndex>> cells;
  for (const auto& f : faces) {
    const std::array<VertexIndex, 3> t{remap[f[0]], remap[f[1]], remap[f[2]]};
    for (unsigned mask = 1; mask < 8; ++mask) {
      std::vector<VertexIndex> c;
      for (int b = 0; b < 3; ++b) {
        if (mask & (1u << b)) c.push_back(t[b]);
      }
      std::sort(c.begin(), c.end());
      cells.insert(std::move(c));
    }
  }
  std::vector<std::vector<VertexIndex>> ordered(cells.begin(), cells.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  for (auto& c : ordered) {
    std::array<double, 3> mean{0.0, 0.0, 0.0};
    for (VertexIndex v : c) {
      for (int ch = 0; ch < 3; ++ch) mean[ch] += colour[v][ch];
    }
    SimplexSpec s{std::move(c), {}};
    for (int ch = 0; ch < 3; ++ch) {
      const int q = quantize_channel(mean[ch] / static_cast<double>(s.points.size()), levels);
      s.atoms.push_back(static_cast<AtomId>(ch * levels + q));
    }
    model.simplexes.push_back(std::move(s));
  }
  return out;
}

}  // namespace polymc
