#include "buckleopt/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "buckleopt/domain_io.hpp"
#include "buckleopt/errors.hpp"
#include "buckleopt/operators.hpp"
#include "buckleopt/parallel.hpp"
#include "buckleopt/raster.hpp"
#include "buckleopt/shapeopt.hpp"
#include "buckleopt/verify.hpp"

namespace buckleopt::cli {

namespace {

std::string read_text(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("cannot read " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw FormatError("cannot write " + path.string());
  os << text;
}

std::string line(const char* format, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b);
  return buf;
}

RunManifest start_manifest(std::string command, std::string config_json, std::uint64_t seed) {
  RunManifest m;
  m.command = std::move(command);
  m.config_json = std::move(config_json);
  m.seed = seed;
  m.version = tool_version();
  m.started_at = utc_timestamp();
  return m;
}

void finish_manifest(RunManifest& m, const std::filesystem::path& path, std::string status) {
  m.finished_at = utc_timestamp();
  m.status = std::move(status);
  m.write(path);
}

struct EigArgs {
  std::string domain_file;
  std::optional<double> h;
  int count = 1;
  bool extrapolate = false;
  std::string out;
  double tol = 1e-8;
  std::string dump_mask;
  std::string dump_biharmonic;
  std::string dump_laplacian;
};

int cmd_eig(const EigArgs& args, std::ostream& out) {
  const DomainSpec d = load_domain(args.domain_file);
  const double h = args.h.value_or(diameter(d) / 64.0);
  if (!(h > 0.0)) throw InvalidArgument("--h must be positive");
  if (args.count < 1) throw InvalidArgument("--count must be at least 1");
  if (!(args.tol > 0.0)) throw InvalidArgument("--tol must be positive");

  SolverOptions opts;
  opts.tol = args.tol;
  opts.seed = seed_from_environment().value_or(opts.seed);

  nlohmann::ordered_json config;
  config["domain_file"] = args.domain_file;
  config["h"] = h;
  config["count"] = args.count;
  config["extrapolate"] = args.extrapolate;
  config["tol"] = args.tol;

  std::optional<RunManifest> manifest;
  std::filesystem::path manifest_path;
  if (!args.out.empty()) {
    manifest = start_manifest("eig", config.dump(), opts.seed);
    manifest_path = manifest_path_for(args.out);
    manifest->write(manifest_path);
  }

  if (!args.dump_mask.empty() || !args.dump_biharmonic.empty() || !args.dump_laplacian.empty()) {
    const GridEmbedding g = rasterize(d, h);
    if (!args.dump_mask.empty()) write_mask(args.dump_mask, g);
    if (!args.dump_biharmonic.empty()) write_matrix_market(args.dump_biharmonic, assemble_biharmonic(g));
    if (!args.dump_laplacian.empty()) write_matrix_market(args.dump_laplacian, assemble_laplacian(g));
  }

  const ObjectiveRecord rec = buckling_of_domain(d, h, args.count, args.extrapolate, opts);
  out << describe(d) << '\n';
  out << line("h = %.17g, unknowns = %.0f", h, rec.unknowns) << (rec.extrapolated ? " (Richardson h, h/2)" : "") << '\n';
  for (std::size_t i = 0; i < rec.lambda.size(); ++i) {
    out << "Lambda_" << i + 1 << " = " << format_number(rec.lambda[i]) << '\n';
  }
  if (manifest) {
    write_text(args.out, record_to_json(rec) + "\n");
    manifest->outputs = {args.out};
    finish_manifest(*manifest, manifest_path, "ok");
  }
  return kSuccess;
}

int cmd_optimize(const std::string& config_file, const std::filesystem::path& out_dir, int threads, std::ostream& out) {
  OptimizerConfig config = optimizer_config_from_json(read_text(config_file));
  if (auto seed = seed_from_environment()) config.seed = *seed;
  config.threads = std::clamp(config.threads, 1, threads);
  config.validate();

  const auto manifest_path = out_dir / "manifest.json";
  RunManifest manifest = start_manifest("optimize", optimizer_config_to_json(config), config.seed);
  manifest.write(manifest_path);

  const OptTrace trace = optimize(config);
  const int eigen_count = config.eigen_index;

  std::ostringstream evals;
  evals << "eval_count,accepted,objective,perimeter,area";
  for (int i = 1; i <= eigen_count; ++i) evals << ",lambda" << i;
  evals << '\n';
  for (const auto& e : trace.evaluations) {
    evals << e.eval_count << ',' << (e.record ? 1 : 0) << ',' << format_number(e.objective);
    if (e.record) {
      evals << ',' << format_number(e.record->perimeter) << ',' << format_number(e.record->area);
      for (double v : e.record->lambda) evals << ',' << format_number(v);
    } else {
      evals << ",nan,nan";
      for (int i = 0; i < eigen_count; ++i) evals << ",nan";
    }
    evals << '\n';
  }

  manifest.outputs = {out_dir / "trace.csv", out_dir / "evaluations.csv", out_dir / "final_domain.json",
                      out_dir / "final_record.json", out_dir / "start_record.json"};
  write_text(manifest.outputs[0], trace_to_csv(trace, eigen_count));
  write_text(manifest.outputs[1], evals.str());
  save_domain(manifest.outputs[2], trace.final.domain);
  write_text(manifest.outputs[3], record_to_json(trace.final) + "\n");
  write_text(manifest.outputs[4], record_to_json(trace.start) + "\n");

  out << "evaluations: " << trace.evaluations.size() << (trace.converged ? " (converged)" : " (evaluation budget)")
      << '\n';
  out << "start objective: " << format_number(trace.start.objective_value) << '\n';
  out << "final objective: " << format_number(trace.final.objective_value) << '\n';
  for (std::size_t i = 0; i < trace.final.lambda.size(); ++i) {
    out << "Lambda_" << i + 1 << " = " << format_number(trace.final.lambda[i]) << '\n';
  }
  out << "hausdorff_to_disk: " << format_number(trace.hausdorff_to_disk) << '\n';
  finish_manifest(manifest, manifest_path, "ok");
  return kSuccess;
}

int cmd_verify(std::uint64_t seed, const std::string& out_file, int threads, std::ostream& out) {
  SuiteConfig config;
  config.seed = seed;
  config.threads = threads;

  nlohmann::ordered_json echo;
  echo["seed"] = seed;
  echo["threads"] = threads;
  std::optional<RunManifest> manifest;
  std::filesystem::path manifest_path;
  if (!out_file.empty()) {
    manifest = start_manifest("verify", echo.dump(), seed);
    manifest_path = manifest_path_for(out_file);
    manifest->write(manifest_path);
  }

  const VerificationReport report = run_suite(config);
  out << report.to_table();
  if (manifest) {
    write_text(out_file, report.to_json());
    manifest->outputs = {out_file};
    finish_manifest(*manifest, manifest_path, report.ok() ? "ok" : "checks failed");
  }
  return report.ok() ? kSuccess : kNumerical;
}

int cmd_sweep(const std::string& config_file, int threads, std::ostream& out) {
  SweepConfig config = sweep_config_from_json(read_text(config_file));
  if (auto seed = seed_from_environment()) config.seed = *seed;
  config.validate();

  std::optional<RunManifest> manifest;
  std::filesystem::path manifest_path;
  if (config.out) {
    manifest = start_manifest("sweep", config.to_json(), config.seed);
    manifest_path = manifest_path_for(*config.out);
    manifest->write(manifest_path);
  }
  const std::string csv = sweep_to_csv(run_sweep(config, threads));
  if (manifest) {
    write_text(*config.out, csv);
    manifest->outputs = {*config.out};
    finish_manifest(*manifest, manifest_path, "ok");
    out << "wrote " << config.out->string() << '\n';
  } else {
    out << csv;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clamped-plate buckling eigenvalues and perimeter-constrained shape optimization", "buckleopt"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());
  int threads = default_thread_count();
  app.add_option("--threads", threads, "Worker thread cap")->check(CLI::PositiveNumber);

  EigArgs eig_args;
  auto* eig = app.add_subcommand("eig", "Smallest buckling eigenvalues of a domain");
  eig->set_help_flag("--help", "Print this help message and exit");
  eig->add_option("domain_file", eig_args.domain_file, "Domain JSON")->required();
  eig->add_option("--h", eig_args.h, "Grid spacing (default: diameter / 64)");
  eig->add_option("--count", eig_args.count, "Number of eigenvalues");
  eig->add_flag("--extrapolate", eig_args.extrapolate, "Richardson extrapolation from h and h/2");
  eig->add_option("--out", eig_args.out, "Write the objective record JSON here");
  eig->add_option("--tol", eig_args.tol, "Relative eigen-residual tolerance");
  eig->add_option("--dump-mask", eig_args.dump_mask, "Write the grid mask (.pgm or .csv)");
  eig->add_option("--dump-biharmonic", eig_args.dump_biharmonic, "Write the biharmonic matrix (Matrix Market)");
  eig->add_option("--dump-laplacian", eig_args.dump_laplacian, "Write the Laplacian matrix (Matrix Market)");

  std::string opt_config;
  std::string opt_out_dir;
  auto* opt = app.add_subcommand("optimize", "Shape optimization under a perimeter constraint");
  opt->add_option("config_file", opt_config, "Optimizer config JSON")->required();
  opt->add_option("--out-dir", opt_out_dir, "Output directory")->required();

  std::uint64_t verify_seed = 1;
  std::string verify_out;
  auto* ver = app.add_subcommand("verify", "Run the property verification suite");
  auto* seed_opt = ver->add_option("--seed", verify_seed, "Suite seed");
  ver->add_option("--out", verify_out, "Write the JSON report here");

  std::string sweep_config;
  auto* sweep = app.add_subcommand("sweep", "Sweep a regular-polygon family toward the disk");
  sweep->add_option("config_file", sweep_config, "Sweep config JSON")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (eig->parsed()) return cmd_eig(eig_args, out);
    if (opt->parsed()) return cmd_optimize(opt_config, opt_out_dir, threads, out);
    if (ver->parsed()) {
      if (seed_opt->count() == 0) verify_seed = seed_from_environment().value_or(verify_seed);
      return cmd_verify(verify_seed, verify_out, threads, out);
    }
    if (sweep->parsed()) return cmd_sweep(sweep_config, threads, out);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResolutionTooCoarse& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}

}  // namespace buckleopt::cli
