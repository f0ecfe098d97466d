#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "copula_transport/baselines.hpp"
#include "copula_transport/cluster.hpp"
#include "copula_transport/copula.hpp"
#include "copula_transport/dependence.hpp"
#include "copula_transport/error.hpp"
#include "copula_transport/io.hpp"
#include "copula_transport/power.hpp"
#include "copula_transport/synth.hpp"
#include "copula_transport/transport.hpp"

namespace copula_transport::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kJobsVariable = "COPULA_TRANSPORT_JOBS";

struct SolverFlags {
  std::string solver = "exact";
  double epsilon = SinkhornOptions{}.epsilon;
  double tolerance = SinkhornOptions{}.tolerance;
  std::size_t max_iterations = SinkhornOptions{}.max_iterations;
  bool kernel = false;

  void attach(CLI::App* app) {
    app->add_option("--solver", solver, "exact or sinkhorn")->capture_default_str();
    app->add_option("--epsilon", epsilon, "Sinkhorn regularization")->capture_default_str();
    app->add_option("--tol", tolerance, "Sinkhorn marginal tolerance")->capture_default_str();
    app->add_option("--max-iter", max_iterations, "Sinkhorn iteration cap")
        ->capture_default_str();
    app->add_flag("--kernel", kernel, "Plain kernel Sinkhorn instead of log-domain");
  }

  EmdOptions options() const {
    EmdOptions opts;
    opts.solver = parse_solver(solver);
    opts.sinkhorn.epsilon = epsilon;
    opts.sinkhorn.tolerance = tolerance;
    opts.sinkhorn.max_iterations = max_iterations;
    opts.sinkhorn.log_domain = !kernel;
    return opts;
  }
};

std::size_t parse_jobs_text(std::string_view text, std::string_view what) {
  std::size_t jobs = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), jobs);
  if (ec != std::errc{} || ptr != text.data() + text.size() || jobs == 0) {
    throw InvalidArgument(std::string(what) + " must be a positive integer, got '" +
                          std::string(text) + "'");
  }
  return jobs;
}

std::size_t resolve_jobs(const std::optional<std::size_t>& flag) {
  if (flag) {
    if (*flag == 0) throw InvalidArgument("--jobs must be positive");
    return *flag;
  }
  if (const char* env = std::getenv(kJobsVariable); env != nullptr && *env != '\0') {
    return parse_jobs_text(env, kJobsVariable);
  }
  return 1;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

// Writes to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

Panel load_panel(const std::string& path) { return read_panel_csv(path).panel; }

std::size_t grid_or_default(std::size_t grid, std::size_t dimension) {
  return grid == 0 ? default_resolution(dimension) : grid;
}

// ---------------------------------------------------------------- manifest

struct ManifestEntry {
  fs::path path;
  std::optional<std::string> label;
};

struct Manifest {
  std::vector<ManifestEntry> panels;
  std::optional<std::size_t> resolution;
  std::optional<std::string> solver;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;
  std::optional<Json> targets;
};

Manifest read_manifest(const fs::path& path) {
  const Json json = read_json_file(path);
  const fs::path base = path.parent_path();
  Manifest manifest;
  try {
    for (const auto& entry : json.at("panels")) {
      ManifestEntry item;
      item.path = base / entry.at("path").get<std::string>();
      if (entry.contains("label")) {
        const auto& label = entry.at("label");
        item.label = label.is_string() ? label.get<std::string>() : label.dump();
      }
      manifest.panels.push_back(std::move(item));
    }
    if (json.contains("resolution")) manifest.resolution = json.at("resolution").get<std::size_t>();
    if (json.contains("solver")) manifest.solver = json.at("solver").get<std::string>();
    if (json.contains("seed")) manifest.seed = json.at("seed").get<std::uint64_t>();
    if (json.contains("mode")) manifest.mode = json.at("mode").get<std::string>();
    if (json.contains("targets")) manifest.targets = json.at("targets");
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path.string() + ": malformed manifest: " + e.what());
  }
  if (manifest.panels.size() < 2) {
    throw DataError(path.string() + ": manifest lists fewer than 2 panels");
  }
  return manifest;
}

// Class labels mapped to 0, 1, ... in order of first appearance.
std::vector<std::size_t> encode_labels(const std::vector<std::string>& labels) {
  std::map<std::string, std::size_t> ids;
  std::vector<std::size_t> encoded;
  for (const auto& label : labels) {
    encoded.push_back(ids.try_emplace(label, ids.size()).first->second);
  }
  return encoded;
}

// ---------------------------------------------------------------- commands

struct TransformArgs {
  std::string in;
  std::string out;
  std::size_t grid = 0;
  std::string signature;
};

int cmd_transform(const TransformArgs& a, std::ostream& out) {
  const CsvPanel csv = read_panel_csv(a.in);
  const CopulaSample sample = empirical_copula_transform(csv.panel);
  std::ostringstream text;
  write_copula_csv(text, csv.header, sample);
  emit(a.out, text.str(), out);
  if (!a.signature.empty()) {
    const std::size_t m = grid_or_default(a.grid, sample.dimension());
    write_text_file(a.signature, dump(signature_to_json(bin_copula(sample, m))));
  }
  return kExitOk;
}

struct EmdArgs {
  std::string a;
  std::string b;
  SolverFlags solver;
};

int cmd_emd(const EmdArgs& a, std::ostream& out) {
  const Signature s1 = signature_from_json(read_json_file(a.a));
  const Signature s2 = signature_from_json(read_json_file(a.b));
  const EmdOptions opts = a.solver.options();
  Json result = {{"solver", std::string(to_string(opts.solver))}};
  if (opts.solver == Solver::kExact) {
    result["cost"] = emd(s1, s2);
  } else {
    const SinkhornResult r = emd_sinkhorn(s1, s2, opts.sinkhorn);
    result["cost"] = r.cost;
    result["epsilon"] = opts.sinkhorn.epsilon;
    result["status"] = std::string(to_string(r.status));
    result["iterations"] = r.iterations;
    result["marginal_error"] = r.marginal_error;
  }
  out << dump(result);
  return kExitOk;
}

struct IntraArgs {
  std::string x;
  std::string y;
  std::size_t grid = 0;
  SolverFlags solver;
};

int cmd_intra(const IntraArgs& a, std::ostream& out) {
  const Panel x = load_panel(a.x);
  const Panel y = load_panel(a.y);
  const std::size_t m = grid_or_default(a.grid, x.dimension());
  const double distance = intra_distance(x, y, m, a.solver.options());
  out << dump({{"distance", distance}, {"resolution", m}});
  return kExitOk;
}

struct TdcArgs {
  std::string x;
  std::string y;
  std::string targets;
  std::size_t grid = 0;
  std::uint64_t seed = 0;
  SolverFlags solver;
};

int cmd_tdc(const TdcArgs& a, std::ostream& out) {
  const Panel x = load_panel(a.x);
  const Panel y = load_panel(a.y);
  const std::size_t d = x.dimension() + y.dimension();
  const std::size_t m = grid_or_default(a.grid, d);
  std::vector<TargetSpec> specs;
  if (!a.targets.empty()) {
    specs = target_specs_from_json(read_json_file(a.targets));
  } else if (d == 2) {
    specs = monotone_target_specs();
  } else {
    throw InvalidArgument("--targets is required unless both panels are univariate");
  }
  const TargetSet targets = build_target_set(specs, m, a.seed);
  const TdcResult r = tdc(x, y, targets, m, a.solver.options());
  Json distances = Json::object();
  for (std::size_t i = 0; i < targets.targets().size(); ++i) {
    distances[targets.targets()[i].name] = r.target_distances[i];
  }
  out << dump({{"value", r.value},
               {"activated_target", r.activated_target},
               {"independence_distance", r.independence_distance},
               {"target_distances", std::move(distances)},
               {"resolution", m}});
  return kExitOk;
}

struct MatrixArgs {
  std::string manifest;
  std::vector<std::string> panels;
  std::string mode;
  std::string targets;
  std::size_t grid = 0;
  std::optional<std::uint64_t> seed;
  SolverFlags solver;
  std::optional<std::size_t> jobs;
  std::string out;
  bool solver_given = false;
};

int cmd_matrix(const MatrixArgs& a, std::ostream& out) {
  if (a.manifest.empty() == a.panels.empty()) {
    throw InvalidArgument("give exactly one of --manifest or --panels");
  }
  Manifest manifest;
  if (!a.manifest.empty()) {
    manifest = read_manifest(a.manifest);
  } else {
    for (const auto& p : a.panels) manifest.panels.push_back({p, std::nullopt});
    if (manifest.panels.size() < 2) throw InvalidArgument("--panels needs at least 2 files");
  }
  std::vector<Panel> panels;
  std::vector<std::string> names;
  for (const auto& entry : manifest.panels) {
    panels.push_back(load_panel(entry.path.string()));
    names.push_back(entry.path.stem().string());
  }
  const std::string mode = !a.mode.empty() ? a.mode : manifest.mode.value_or("intra");
  EmdOptions opts = a.solver.options();
  if (!a.solver_given && manifest.solver) opts.solver = parse_solver(*manifest.solver);
  const std::uint64_t seed = a.seed.value_or(manifest.seed.value_or(0));
  const std::size_t jobs = resolve_jobs(a.jobs);

  std::optional<DistanceMatrix> dm;
  std::size_t m = a.grid != 0 ? a.grid : manifest.resolution.value_or(0);
  if (mode == "intra") {
    m = grid_or_default(m, panels.front().dimension());
    dm = distance_matrix(panels, IntraMode{}, m, opts, jobs);
  } else if (mode == "tdc") {
    const std::size_t d = 2 * panels.front().dimension();
    m = grid_or_default(m, d);
    std::vector<TargetSpec> specs;
    if (!a.targets.empty()) {
      specs = target_specs_from_json(read_json_file(a.targets));
    } else if (manifest.targets) {
      specs = target_specs_from_json(*manifest.targets);
    } else if (d == 2) {
      specs = monotone_target_specs();
    } else {
      throw InvalidArgument("tdc mode needs --targets for multivariate panels");
    }
    const TargetSet targets = build_target_set(specs, m, seed);
    dm = distance_matrix(panels, TdcMode{&targets}, m, opts, jobs);
  } else {
    throw InvalidArgument("unknown --mode '" + mode + "' (expected intra or tdc)");
  }
  DistanceMatrix labelled(dm->size(), {dm->entries().begin(), dm->entries().end()}, names);
  Json json = distance_matrix_to_json(labelled);
  json["mode"] = mode;
  json["resolution"] = m;
  std::vector<std::string> classes;
  for (const auto& entry : manifest.panels) {
    if (entry.label) classes.push_back(*entry.label);
  }
  if (classes.size() == manifest.panels.size()) json["classes"] = classes;
  emit(a.out, dump(json), out);
  return kExitOk;
}

struct ClusterArgs {
  std::string matrix;
  std::string linkage = "average";
  std::size_t k = 2;
  std::string truth;
  std::string out;
};

int cmd_cluster(const ClusterArgs& a, std::ostream& out) {
  const Json json = read_json_file(a.matrix);
  const DistanceMatrix dm = distance_matrix_from_json(json);
  const Linkage linkage = parse_linkage(a.linkage);
  const Dendrogram dendrogram = agglomerate(dm, linkage);
  const std::vector<std::size_t> assignments = cut(dendrogram, a.k);

  std::optional<std::vector<std::string>> truth;
  if (!a.truth.empty()) {
    const Manifest manifest = read_manifest(a.truth);
    truth.emplace();
    for (const auto& entry : manifest.panels) {
      if (!entry.label) throw DataError(a.truth + ": every panel needs a label");
      truth->push_back(*entry.label);
    }
  } else if (json.contains("classes")) {
    truth = json.at("classes").get<std::vector<std::string>>();
  }

  Json result = {{"linkage", std::string(to_string(linkage))},
                 {"k", a.k},
                 {"labels", json.at("labels")},
                 {"assignments", assignments},
                 {"dendrogram", dendrogram_to_json(dendrogram)}};
  if (truth) {
    const auto encoded = encode_labels(*truth);
    result["ari"] = adjusted_rand_index(assignments, encoded);
  }
  emit(a.out, dump(result), out);
  return kExitOk;
}

struct PowerArgs {
  std::string estimators = "tdc,dcor,rdc,pearson";
  std::string patterns;
  std::vector<double> levels;
  std::size_t trials = PowerOptions{}.trials;
  double alpha = PowerOptions{}.alpha;
  std::size_t n = PowerOptions{}.sample_size;
  std::uint64_t seed = PowerOptions{}.seed;
  std::size_t grid = 16;
  std::string null_mode = "regenerate";
  std::optional<std::size_t> jobs;
  std::string out;
  SolverFlags solver;
};

int cmd_power(const PowerArgs& a, std::ostream& out) {
  PowerOptions opts;
  opts.trials = a.trials;
  opts.alpha = a.alpha;
  opts.sample_size = a.n;
  opts.seed = a.seed;
  opts.null_mode = parse_null_mode(a.null_mode);
  opts.jobs = resolve_jobs(a.jobs);

  std::vector<PatternKind> patterns;
  if (a.patterns.empty()) {
    const auto all = benchmark_patterns();
    patterns.assign(all.begin(), all.end());
  } else {
    for (const auto& name : split_list(a.patterns)) patterns.push_back(parse_pattern(name));
  }
  const std::vector<double> levels = a.levels.empty() ? default_noise_levels() : a.levels;

  std::vector<PowerCurve> curves;
  for (const auto& name : split_list(a.estimators)) {
    EstimatorId estimator = parse_estimator(name);
    estimator.tdc_resolution = a.grid;
    estimator.emd = a.solver.options();
    curves.push_back(power_curve(estimator, patterns, levels, opts));
  }
  if (curves.empty()) throw InvalidArgument("--estimators is empty");
  std::ostringstream text;
  write_power_csv(text, curves);
  emit(a.out, text.str(), out);
  return kExitOk;
}

struct GenPatternArgs {
  std::string pattern = "linear";
  double noise = 0.0;
  std::size_t n = 500;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen_pattern(const GenPatternArgs& a, std::ostream& out) {
  PatternSpec spec;
  spec.kind = parse_pattern(a.pattern);
  spec.noise_level = a.noise;
  spec.sample_size = a.n;
  spec.seed = a.seed;
  std::ostringstream text;
  write_panel_csv(text, {"x", "y"}, generate_pattern(spec));
  emit(a.out, text.str(), out);
  return kExitOk;
}

struct GenDatasetArgs {
  std::vector<std::string> classes{"comonotone:0.1", "countermonotone:0.1"};
  std::size_t per_class = 5;
  std::size_t length = 500;
  std::size_t dimension = 2;
  std::uint64_t seed = 0;
  std::string out_dir;
};

ClassSpec parse_class(const std::string& text, std::size_t dimension) {
  const auto colon = text.find(':');
  ClassSpec spec;
  spec.dimension = dimension;
  spec.kind = parse_intra_kind(text.substr(0, colon));
  if (colon != std::string::npos) {
    const std::string value = text.substr(colon + 1);
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), spec.parameter);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw InvalidArgument("bad class parameter in '" + text + "'");
    }
  }
  return spec;
}

int cmd_gen_dataset(const GenDatasetArgs& a, std::ostream& out) {
  std::vector<ClassSpec> classes;
  for (const auto& c : a.classes) classes.push_back(parse_class(c, a.dimension));
  const auto dataset = generate_mts_dataset(a.per_class, classes, a.length, a.seed);
  const fs::path dir = a.out_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create '" + dir.string() + "': " + ec.message());

  Json panels = Json::array();
  for (const auto& item : dataset) {
    const std::string file = item.panel.series_id() + ".csv";
    std::ostringstream text;
    write_panel_csv(text, default_header(item.panel.dimension()), item.panel);
    write_text_file(dir / file, text.str());
    panels.push_back({{"path", file}, {"label", a.classes[item.label]}});
  }
  const Json manifest = {{"panels", std::move(panels)}, {"seed", a.seed}};
  write_text_file(dir / "manifest.json", dump(manifest));
  out << (dir / "manifest.json").string() << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal-transport distances between empirical copulas", "copula-transport"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "copula-transport 0.1.0");
  std::function<int()> action;

  TransformArgs transform;
  auto* sub = app.add_subcommand("transform", "Normalized-rank copula transform of a panel");
  sub->add_option("--in", transform.in, "Panel CSV")->required();
  sub->add_option("--out", transform.out, "Copula CSV (default stdout)");
  sub->add_option("--grid", transform.grid, "Bins per axis for --signature");
  sub->add_option("--signature", transform.signature, "Also write the binned signature JSON");
  sub->callback([&] { action = [&] { return cmd_transform(transform, out); }; });

  EmdArgs emd_args;
  sub = app.add_subcommand("emd", "Earth mover's distance between two signature files");
  sub->add_option("--a", emd_args.a, "Signature JSON")->required();
  sub->add_option("--b", emd_args.b, "Signature JSON")->required();
  emd_args.solver.attach(sub);
  sub->callback([&] { action = [&] { return cmd_emd(emd_args, out); }; });

  IntraArgs intra;
  sub = app.add_subcommand("intra", "Distance between the intra-dependence of two panels");
  sub->add_option("--x", intra.x, "Panel CSV")->required();
  sub->add_option("--y", intra.y, "Panel CSV")->required();
  sub->add_option("--grid", intra.grid, "Bins per axis (default depends on d)");
  intra.solver.attach(sub);
  sub->callback([&] { action = [&] { return cmd_intra(intra, out); }; });

  TdcArgs tdc_args;
  sub = app.add_subcommand("tdc", "Target dependencies coefficient between two panels");
  sub->add_option("--x", tdc_args.x, "Panel CSV")->required();
  sub->add_option("--y", tdc_args.y, "Panel CSV")->required();
  sub->add_option("--targets", tdc_args.targets, "Target set JSON");
  sub->add_option("--grid", tdc_args.grid, "Bins per axis (default depends on d)");
  sub->add_option("--seed", tdc_args.seed, "Seed for sampled targets")->capture_default_str();
  tdc_args.solver.attach(sub);
  sub->callback([&] { action = [&] { return cmd_tdc(tdc_args, out); }; });

  MatrixArgs matrix;
  sub = app.add_subcommand("matrix", "Pairwise distance matrix over a set of panels");
  sub->add_option("--manifest", matrix.manifest, "Manifest JSON");
  sub->add_option("--panels", matrix.panels, "Panel CSV files");
  sub->add_option("--mode", matrix.mode, "intra or tdc (distance 1 - TDC)");
  sub->add_option("--targets", matrix.targets, "Target set JSON for tdc mode");
  sub->add_option("--grid", matrix.grid, "Bins per axis");
  sub->add_option("--seed", matrix.seed, "Seed for sampled targets");
  matrix.solver.attach(sub);
  sub->add_option("--jobs", matrix.jobs, "Worker threads");
  sub->add_option("--out", matrix.out, "Matrix JSON (default stdout)");
  auto* matrix_sub = sub;
  sub->callback([&] {
    matrix.solver_given = matrix_sub->count("--solver") > 0;
    action = [&] { return cmd_matrix(matrix, out); };
  });

  ClusterArgs cluster;
  sub = app.add_subcommand("cluster", "Agglomerative clustering of a distance matrix");
  sub->add_option("--matrix", cluster.matrix, "Matrix JSON from `matrix`")->required();
  sub->add_option("--linkage", cluster.linkage, "single, complete or average")
      ->capture_default_str();
  sub->add_option("--k", cluster.k, "Number of clusters")->capture_default_str();
  sub->add_option("--truth", cluster.truth, "Manifest with ground-truth labels");
  sub->add_option("--out", cluster.out, "Result JSON (default stdout)");
  sub->callback([&] { action = [&] { return cmd_cluster(cluster, out); }; });

  PowerArgs power;
  sub = app.add_subcommand("power", "Statistical power benchmark");
  sub->add_option("--estimators", power.estimators, "Comma-separated estimators")
      ->capture_default_str();
  sub->add_option("--patterns", power.patterns, "Comma-separated patterns (default: all 8)");
  sub->add_option("--levels", power.levels, "Noise levels (default 0, 1/3, ..., 3)")
      ->delimiter(',');
  sub->add_option("--trials", power.trials, "Trials per null and alternative")
      ->capture_default_str();
  sub->add_option("--alpha", power.alpha, "Test level")->capture_default_str();
  sub->add_option("--n", power.n, "Sample size")->capture_default_str();
  sub->add_option("--seed", power.seed, "Random seed")->capture_default_str();
  sub->add_option("--grid", power.grid, "TDC bins per axis")->capture_default_str();
  sub->add_option("--null", power.null_mode, "regenerate or permute")->capture_default_str();
  sub->add_option("--jobs", power.jobs, "Worker threads");
  sub->add_option("--out", power.out, "CSV (default stdout)");
  power.solver.attach(sub);
  sub->callback([&] { action = [&] { return cmd_power(power, out); }; });

  auto* gen = app.add_subcommand("gen", "Synthetic data");
  gen->require_subcommand(1);
  GenPatternArgs gen_pattern;
  sub = gen->add_subcommand("pattern", "Noisy functional pattern as an (x, y) CSV");
  sub->add_option("--pattern", gen_pattern.pattern, "Pattern name")->capture_default_str();
  sub->add_option("--noise", gen_pattern.noise, "Noise level")->capture_default_str();
  sub->add_option("--n", gen_pattern.n, "Sample size")->capture_default_str();
  sub->add_option("--seed", gen_pattern.seed, "Random seed")->capture_default_str();
  sub->add_option("--out", gen_pattern.out, "CSV (default stdout)");
  sub->callback([&] { action = [&] { return cmd_gen_pattern(gen_pattern, out); }; });

  GenDatasetArgs gen_dataset;
  sub = gen->add_subcommand("dataset", "Labeled multivariate panels plus a manifest");
  sub->add_option("--classes", gen_dataset.classes, "kind[:parameter] per class")
      ->delimiter(',')
      ->capture_default_str();
  sub->add_option("--per-class", gen_dataset.per_class, "Panels per class")
      ->capture_default_str();
  sub->add_option("--length", gen_dataset.length, "Observations per panel")
      ->capture_default_str();
  sub->add_option("--dimension", gen_dataset.dimension, "Series per panel")
      ->capture_default_str();
  sub->add_option("--seed", gen_dataset.seed, "Random seed")->capture_default_str();
  sub->add_option("--out-dir", gen_dataset.out_dir, "Output directory")->required();
  sub->callback([&] { action = [&] { return cmd_gen_dataset(gen_dataset, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action();
  } catch (const InvalidArgument& e) {
    err << "copula-transport: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    err << "copula-transport: " << e.what() << "\n";
    return kExitData;
  } catch (const NumericalError& e) {
    err << "copula-transport: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "copula-transport: " << e.what() << "\n";
    return kExitData;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace copula_transport::cli
