#pragma once

// File formats: the JSON model, the JSON results document, content digests
// and the Wavefront OBJ importer.

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "polymc/geometry.hpp"
#include "polymc/satset.hpp"

namespace polymc {

inline constexpr int kFormatVersion = 1;

struct LoadOptions {
  bool close_faces = true;
  bool reject_duplicates = true;
};

/// {"formatVersion":1, "coordinates":[[x,y,..],..], "atomNames":[..],
///  "simplexes":[{"points":[..], "atoms":[index or name,..]},..]}
/// Each simplex is canonicalized and the complex is face-closed.
/// Throws SchemaError, IndexError, DuplicateSimplex, DuplicateVertex,
/// EmptySimplex, UnknownAtom.
SimplicialModel load_model_json(std::string_view bytes, LoadOptions options = {});

/// Compact, key-ordered serialization; atoms are written as indices.
std::string save_model_json(const SimplicialModel& model);

struct LabelledValues {
  std::string label;
  std::vector<bool> values;

  friend bool operator==(const LabelledValues&, const LabelledValues&) = default;
};

struct ResultsDocument {
  std::string model_hash;
  std::size_t cell_count = 0;
  std::vector<LabelledValues> results;

  void add(std::string label, const SatSet& value);
  friend bool operator==(const ResultsDocument&, const ResultsDocument&) = default;
};

/// {"model_hash":..,"cell_count":n,"results":[{"label":..,"values":[..]}]}
/// Throws SchemaError when a values list has the wrong length or a label repeats.
std::string save_results_json(const ResultsDocument& doc);
ResultsDocument load_results_json(std::string_view bytes);

/// "sha256:" followed by the lowercase hex digest of `bytes`.
std::string content_digest(std::string_view bytes);

/// Checks a results document against the model file it claims to describe:
/// HashMismatch if the digests differ, SchemaError if the cell count differs.
void verify_results_for_model(const ResultsDocument& doc, std::string_view model_bytes);

struct ObjImport {
  SimplicialModel model;
  std::vector<std::string> warnings;
};

/// Triangles of an OBJ mesh, face-closed; every cell gets the quantized mean
/// colour of its vertices as atoms r<i>, g<i>, b<i>.
/// Throws NonTriangularFace, MalformedLine (with line number), InvalidParams.
ObjImport import_obj(std::string_view bytes, int levels = 4);

/// floor(c * levels) clamped to [0, levels - 1].
int quantize_channel(double c, int levels);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace polymc
