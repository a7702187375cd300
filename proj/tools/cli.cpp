#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "polymc/checker.hpp"
#include "polymc/error.hpp"
#include "polymc/kripke.hpp"
#include "polymc/maze.hpp"
#include "polymc/model_io.hpp"
#include "polymc/spec_language.hpp"
#include "polymc/task_graph.hpp"

namespace polymc::cli {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

unsigned default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

struct CheckArgs {
  std::string spec;
  std::string model;
  std::string out_dir = ".";
  unsigned workers = 0;
  std::string validate = "none";
  bool timing = false;
};

struct ValidateArgs {
  std::string model;
  std::string mode = "combinatorial";
  double tol = kDefaultTolerance;
};

struct ConvertArgs {
  std::string in;
  std::string out;
  int levels = 4;
};

struct MazeArgs {
  std::vector<int> grid;
  double black_fraction = 0.2;
  std::uint64_t seed = 0;
  double corridor_probability = 0.75;
  std::string out;
};

int report(const ValidationReport& r, const std::string& what, std::ostream& out, std::ostream& err) {
  if (r.ok()) {
    out << what << ": ok\n";
    return kExitOk;
  }
  err << what << ": " << r.summary() << "\n";
  return kExitFailure;
}

int do_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const auto t_total = Clock::now();

  auto t = Clock::now();
  const ElaboratedSpec spec = load_spec(a.spec);
  fs::path model_path;
  if (!a.model.empty()) {
    model_path = a.model;
  } else if (spec.model_path) {
    model_path = *spec.model_path;
  } else {
    err << "error: " << a.spec << " does not load a model and --model was not given\n";
    return kExitUsage;
  }
  const TaskGraph graph = build_task_graph(spec);
  const std::string model_bytes = read_file(model_path);
  const SimplicialModel model = load_model_json(model_bytes);
  const double parse_ms = ms_since(t);

  if (a.validate != "none") {
    int rc = report(validate_combinatorial(model), model_path.string() + " (combinatorial)", out, err);
    if (rc == kExitOk && a.validate == "geometric") {
      rc = report(validate_geometric(model), model_path.string() + " (geometric)", out, err);
    }
    if (rc != kExitOk) return rc;
  }

  t = Clock::now();
  const KripkeModel kripke = build_kripke(model);
  const double kripke_ms = ms_since(t);

  t = Clock::now();
  const CheckResults results = run(kripke, graph, RunOptions{a.workers});
  const double check_ms = ms_since(t);

  if (!results.ok()) {
    for (const std::string& e : results.errors()) err << "error: " << e << "\n";
    for (const SavedResult& s : results.saves) {
      if (results.nodes[s.node].status != NodeStatus::Done) err << "not computed: \"" << s.label << "\"\n";
    }
    return kExitFailure;
  }

  ResultsDocument doc;
  doc.model_hash = content_digest(model_bytes);
  doc.cell_count = kripke.size();
  for (const SavedResult& s : results.saves) doc.add(s.label, results.value(s.label));
  fs::create_directories(a.out_dir);
  const fs::path out_file = fs::path(a.out_dir) / "results.json";
  write_file(out_file, save_results_json(doc));

  out << "model " << model_path.string() << ": " << kripke.size() << " cells, " << kripke.edge_count()
      << " edges, " << graph.size() << " tasks\n";
  for (const SavedResult& s : results.saves) {
    out << "  " << s.label << ": " << results.value(s.label).count() << " cells\n";
  }
  out << "wrote " << out_file.string() << "\n";
  if (a.timing) {
    const double total_ms = ms_since(t_total);
    out << std::fixed << std::setprecision(1);
    out << "timing (ms)\n";
    out << "  parse  " << std::setw(10) << parse_ms << "\n";
    out << "  kripke " << std::setw(10) << kripke_ms << "\n";
    out << "  check  " << std::setw(10) << check_ms << "\n";
    out << "  total  " << std::setw(10) << total_ms << "\n";
    out.unsetf(std::ios::floatfield);
  }
  return kExitOk;
}

int do_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  const SimplicialModel raw = load_model_json(read_file(a.model), LoadOptions{false, true});
  const ValidationReport listed = validate_combinatorial(raw);
  if (listed.count(ViolationKind::MissingFace) > 0) {
    out << a.model << ": " << listed.count(ViolationKind::MissingFace)
        << " face(s) not listed in the file; they are added when loading\n";
  }
  const SimplicialModel model = face_closure(raw);
  int rc = report(validate_combinatorial(model), a.model + " (combinatorial)", out, err);
  if (rc == kExitOk && a.mode == "geometric") {
    rc = report(validate_geometric(model, a.tol), a.model + " (geometric)", out, err);
  }
  return rc;
}

int do_convert(const ConvertArgs& a, std::ostream& out, std::ostream& err) {
  ObjImport imported = import_obj(read_file(a.in), a.levels);
  for (const std::string& w : imported.warnings) err << "warning: " << w << "\n";
  write_file(a.out, save_model_json(imported.model));
  out << "wrote " << a.out << ": " << imported.model.vertices.size() << " vertices, "
      << imported.model.simplexes.size() << " cells\n";
  return kExitOk;
}

int do_maze(const MazeArgs& a, std::ostream& out) {
  MazeParams p;
  p.grid = {a.grid[0], a.grid[1], a.grid[2]};
  p.black_fraction = a.black_fraction;
  p.seed = a.seed;
  p.corridor_probability = a.corridor_probability;
  const Maze maze = generate_maze(p);
  write_file(a.out, save_model_json(maze.model));
  out << "wrote " << a.out << ": " << maze.layout.room_count() << " rooms, " << maze.layout.corridors.size()
      << " corridors, " << maze.model.simplexes.size() << " cells\n";
  return kExitOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownAtom:
    case ErrorKind::LengthMismatch:
    case ErrorKind::ModelTooLarge:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spatial model checker for polyhedral models", "polymc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "polymc 0.1.0");

  CheckArgs check;
  check.workers = default_workers();
  auto* check_cmd = app.add_subcommand("check", "Check the formulas saved by a specification file");
  check_cmd->add_option("spec", check.spec, "Specification file")->required();
  check_cmd->add_option("--model", check.model, "Model file, overriding the spec's load command");
  check_cmd->add_option("--out", check.out_dir, "Directory for results.json")->capture_default_str();
  check_cmd->add_option("--workers", check.workers,
                        std::string("Worker threads (default: $") + kWorkersEnv + " or all cores)")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--validate", check.validate, "Validate the model before checking")
      ->check(CLI::IsMember({"none", "combinatorial", "geometric"}))
      ->capture_default_str();
  check_cmd->add_flag("--timing", check.timing, "Print parse/kripke/check/total times in ms");

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "Validate a model file");
  validate_cmd->add_option("model", validate.model, "Model file")->required();
  validate_cmd->add_option("--mode", validate.mode, "Checks to run")
      ->check(CLI::IsMember({"combinatorial", "geometric"}))
      ->capture_default_str();
  validate_cmd->add_option("--tol", validate.tol, "Geometric tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert a mesh into a model file");
  convert_cmd->require_subcommand(1);
  auto* obj_cmd = convert_cmd->add_subcommand("obj", "Import a triangulated OBJ mesh with vertex colours");
  obj_cmd->add_option("in", convert.in, "Input OBJ file")->required();
  obj_cmd->add_option("out", convert.out, "Output model file")->required();
  obj_cmd->add_option("--levels", convert.levels, "Quantization levels per colour channel")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();

  MazeArgs maze;
  auto* maze_cmd = app.add_subcommand("gen-maze", "Generate a 3D maze benchmark model");
  maze_cmd->add_option("--grid", maze.grid, "Rooms per axis as X,Y,Z")
      ->required()
      ->delimiter(',')
      ->expected(3)
      ->check(CLI::PositiveNumber);
  maze_cmd->add_option("--black-fraction", maze.black_fraction, "Probability that an interior room is black")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  maze_cmd->add_option("--seed", maze.seed, "Random seed")->capture_default_str();
  maze_cmd->add_option("--corridor-prob", maze.corridor_probability,
                       "Probability that two neighbouring rooms are joined")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  maze_cmd->add_option("out", maze.out, "Output model file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return do_check(check, out, err);
    if (validate_cmd->parsed()) return do_validate(validate, out, err);
    if (obj_cmd->parsed()) return do_convert(convert, out, err);
    if (maze_cmd->parsed()) return do_maze(maze, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace polymc::cli
