#include "polymc/model_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "polymc/error.hpp"

namespace polymc {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorKind::SchemaError, msg); }

const json& member(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t as_index(const json& v, const std::string& what) {
  if (!v.is_number_integer()) schema(what + " must be a non-negative integer");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  const auto i = v.get<std::int64_t>();
  if (i < 0) throw Error(ErrorKind::IndexError, what + " " + std::to_string(i) + " is negative");
  return static_cast<std::uint64_t>(i);
}

json parse_json(std::string_view bytes) {
  try {
    return json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    schema(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

SimplicialModel load_model_json(std::string_view bytes, LoadOptions options) {
  const json doc = parse_json(bytes);
  if (!doc.is_object()) schema("model must be a JSON object");
  if (auto it = doc.find("formatVersion"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() != kFormatVersion) {
      schema("unsupported formatVersion " + it->dump());
    }
  }

  SimplicialModel model;
  const json& coords = member(doc, "coordinates");
  if (!coords.is_array()) schema("\"coordinates\" must be an array");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const json& c = coords[i];
    if (!c.is_array() || c.empty()) schema("coordinate " + std::to_string(i) + " must be a nonempty array");
    if (i == 0) model.ambient_dim = c.size();
    if (c.size() != model.ambient_dim) {
      schema("coordinate " + std::to_string(i) + " has " + std::to_string(c.size()) +
             " components, expected " + std::to_string(model.ambient_dim));
    }
    Point p;
    for (const json& x : c) {
      if (!x.is_number()) schema("coordinate " + std::to_string(i) + " has a non-numeric component");
      p.push_back(x.get<double>());
    }
    model.vertices.push_back(std::move(p));
  }

  const json& names = member(doc, "atomNames");
  if (!names.is_array()) schema("\"atomNames\" must be an array");
  std::map<std::string, AtomId, std::less<>> atom_index;
  for (const json& n : names) {
    if (!n.is_string()) schema("atom names must be strings");
    auto name = n.get<std::string>();
    if (!atom_index.emplace(name, static_cast<AtomId>(model.atom_names.size())).second) {
      schema("atom name \"" + name + "\" listed twice");
    }
    model.atom_names.push_back(std::move(name));
  }

  const json& simplexes = member(doc, "simplexes");
  if (!simplexes.is_array()) schema("\"simplexes\" must be an array");
  std::map<std::vector<VertexIndex>, std::size_t> seen;
  for (std::size_t s = 0; s < simplexes.size(); ++s) {
    const json& entry = simplexes[s];
    const std::string where = "simplex " + std::to_string(s);
    if (!entry.is_object()) schema(where + " must be an object");
    const json& pts = member(entry, "points");
    if (!pts.is_array()) schema(where + ": \"points\" must be an array");
    std::vector<VertexIndex> raw;
    for (const json& p : pts) {
      const auto v = as_index(p, where + " vertex");
      if (v >= model.vertices.size()) {
        throw Error(ErrorKind::IndexError, where + " uses vertex " + std::to_string(v) + " of " +
                                               std::to_string(model.vertices.size()));
      }
      raw.push_back(static_cast<VertexIndex>(v));
    }
    SimplexSpec spec;
    spec.points = canonicalize_simplex(raw);

    if (auto it = entry.find("atoms"); it != entry.end()) {
      if (!it->is_array()) schema(where + ": \"atoms\" must be an array");
      for (const json& a : *it) {
        if (a.is_string()) {
          auto found = atom_index.find(a.get<std::string>());
          if (found == atom_index.end()) {
            throw Error(ErrorKind::UnknownAtom, where + " names unknown atom \"" + a.get<std::string>() + "\"");
          }
          spec.atoms.push_back(found->second);
        } else {
          const auto id = as_index(a, where + " atom");
          if (id >= model.atom_names.size()) {
            throw Error(ErrorKind::IndexError, where + " uses atom " + std::to_string(id) + " of " +
                                                   std::to_string(model.atom_names.size()));
          }
          spec.atoms.push_back(static_cast<AtomId>(id));
        }
      }
      std::sort(spec.atoms.begin(), spec.atoms.end());
      spec.atoms.erase(std::unique(spec.atoms.begin(), spec.atoms.end()), spec.atoms.end());
    }

    auto [it, inserted] = seen.emplace(spec.points, model.simplexes.size());
    if (!inserted) {
      if (options.reject_duplicates) {
        throw Error(ErrorKind::DuplicateSimplex, where + " repeats simplex " + std::to_string(it->second));
      }
      auto& atoms = model.simplexes[it->second].atoms;
      atoms.insert(atoms.end(), spec.atoms.begin(), spec.atoms.end());
      std::sort(atoms.begin(), atoms.end());
      atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
      continue;
    }
    model.simplexes.push_back(std::move(spec));
  }
  if (options.close_faces) model = face_closure(model);
  return model;
}

std::string save_model_json(const SimplicialModel& model) {
  ordered_json doc;
  doc["formatVersion"] = kFormatVersion;
  doc["coordinates"] = ordered_json::array();
  for (const Point& p : model.vertices) doc["coordinates"].push_back(p);
  doc["atomNames"] = model.atom_names;
  ordered_json simplexes = ordered_json::array();
  for (const SimplexSpec& s : model.simplexes) {
    ordered_json e;
    e["points"] = s.points;
    e["atoms"] = s.atoms;
    simplexes.push_back(std::move(e));
  }
  doc["simplexes"] = std::move(simplexes);
  return doc.dump();
}

void ResultsDocument::add(std::string label, const SatSet& value) {
  if (value.size() != cell_count) {
    throw Error(ErrorKind::LengthMismatch, "result \"" + label + "\" has " + std::to_string(value.size()) +
                                               " values for " + std::to_string(cell_count) + " cells");
  }
  results.push_back({std::move(label), value.to_bools()});
}

namespace {

void check_results(const ResultsDocument& doc) {
  std::set<std::string, std::less<>> labels;
  for (const LabelledValues& r : doc.results) {
    if (!labels.insert(r.label).second) schema("result label \"" + r.label + "\" repeated");
    if (r.values.size() != doc.cell_count) {
      schema("result \"" + r.label + "\" has " + std::to_string(r.values.size()) + " values, expected " +
             std::to_string(doc.cell_count));
    }
  }
}

}  // namespace

std::string save_results_json(const ResultsDocument& doc) {
  check_results(doc);
  ordered_json out;
  out["model_hash"] = doc.model_hash;
  out["cell_count"] = doc.cell_count;
  ordered_json results = ordered_json::array();
  for (const LabelledValues& r : doc.results) {
    ordered_json e;
    e["label"] = r.label;
    e["values"] = r.values;
    results.push_back(std::move(e));
  }
  out["results"] = std::move(results);
  return out.dump();
}

ResultsDocument load_results_json(std::string_view bytes) {
  const json doc = parse_json(bytes);
  if (!doc.is_object()) schema("results must be a JSON object");
  ResultsDocument out;
  const json& hash = member(doc, "model_hash");
  if (!hash.is_string()) schema("\"model_hash\" must be a string");
  out.model_hash = hash.get<std::string>();
  const json& count = member(doc, "cell_count");
  if (!count.is_number_unsigned()) schema("\"cell_count\" must be a non-negative integer");
  out.cell_count = count.get<std::size_t>();
  const json& results = member(doc, "results");
  if (!results.is_array()) schema("\"results\" must be an array");
  for (const json& r : results) {
    if (!r.is_object()) schema("each result must be an object");
    const json& label = member(r, "label");
    const json& values = member(r, "values");
    if (!label.is_string()) schema("result labels must be strings");
    if (!values.is_array()) schema("result values must be an array");
    LabelledValues lv{label.get<std::string>(), {}};
    lv.values.reserve(values.size());
    for (const json& v : values) {
      if (!v.is_boolean()) schema("result \"" + lv.label + "\" has a non-boolean value");
      lv.values.push_back(v.get<bool>());
    }
    out.results.push_back(std::move(lv));
  }
  check_results(out);
  return out;
}

void verify_results_for_model(const ResultsDocument& doc, std::string_view model_bytes) {
  const std::string digest = content_digest(model_bytes);
  if (doc.model_hash != digest) {
    throw Error(ErrorKind::HashMismatch, "results were computed for " + doc.model_hash + ", model is " + digest);
  }
  const SimplicialModel model = load_model_json(model_bytes);
  if (model.simplexes.size() != doc.cell_count) {
    schema("results describe " + std::to_string(doc.cell_count) + " cells, model has " +
           std::to_string(model.simplexes.size()));
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::IoError, "failed writing '" + path.string() + "'");
}

}  // namespace polymc
