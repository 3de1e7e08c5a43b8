// Copyright 2026 The kadapt Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <glob.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "kadapt/fci.hpp"

namespace kadapt::cli {
namespace {

// Shortest representation that parses back to the same double.
std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string optional_num(const std::optional<double>& v) { return v ? num(*v) : std::string{}; }

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());
}

std::string manifest_comment(const nlohmann::json& m) { return "# manifest: " + m.dump() + "\n"; }

// Adapt flags shared by run, compare and scan. Values given on the command
// line override the ones read from --manifest.
class ManifestFlags {
 public:
  void attach(CLI::App* app, bool with_fcidump) {
    if (with_fcidump) {
      bind(app->add_option("--fcidump", fcidump_, "FCIDUMP file"),
           [this](RunManifest& m) { m.fcidump = fcidump_; });
    }
    bind(app->add_option("--k", values_.k, "operators appended per step")->capture_default_str(),
         [this](RunManifest& m) { m.k = values_.k; });
    bind(app->add_option("--max-ops", values_.max_operators, "ansatz size limit")->capture_default_str(),
         [this](RunManifest& m) { m.max_operators = values_.max_operators; });
    bind(app->add_option("--iters-per-step", values_.iterations_per_step,
                         "optimizer iterations per step (0: total * k / max-ops)")
             ->capture_default_str(),
         [this](RunManifest& m) { m.iterations_per_step = values_.iterations_per_step; });
    bind(app->add_option("--total-iters", values_.total_iterations, "iteration budget over all steps")
             ->capture_default_str(),
         [this](RunManifest& m) { m.total_iterations = values_.total_iterations; });
    bind(app->add_option("--eps", values_.gradient_threshold, "gradient screening threshold")
             ->capture_default_str(),
         [this](RunManifest& m) { m.gradient_threshold = values_.gradient_threshold; });
    bind(app->add_option("--f-tol", values_.f_tolerance, "optimizer tolerance")->capture_default_str(),
         [this](RunManifest& m) { m.f_tolerance = values_.f_tolerance; });
    bind(app->add_option("--initial-step", values_.initial_step, "initial trust radius (rad)")
             ->capture_default_str(),
         [this](RunManifest& m) { m.initial_step = values_.initial_step; });
    bind(app->add_option("--out", out_, "output directory"), [this](RunManifest& m) { m.output_dir = out_; });
    bind(app->add_option("--seed", values_.seed, "seed for randomised components")->capture_default_str(),
         [this](RunManifest& m) { m.seed = values_.seed; });
  }

  RunManifest resolve(const std::string& manifest_path) const {
    RunManifest m = manifest_path.empty() ? values_ : RunManifest::load(manifest_path);
    for (const auto& [opt, set] : setters_) {
      if (manifest_path.empty() || opt->count() > 0) set(m);
    }
    return m;
  }

 private:
  void bind(CLI::Option* opt, std::function<void(RunManifest&)> set) {
    setters_.emplace_back(opt, std::move(set));
  }

  RunManifest values_;
  std::string fcidump_;
  std::string out_;
  std::vector<std::pair<CLI::Option*, std::function<void(RunManifest&)>>> setters_;
};

void validate(const RunManifest& m, bool need_fcidump = true) {
  if (need_fcidump && m.fcidump.empty()) throw UsageError("--fcidump is required");
  try {
    m.adapt_config().validate();
  } catch (const StructureError& e) {
    throw UsageError(e.what());
  }
}

void print_outcome(const RunOutcome& r, std::ostream& out) {
  out << "fixture        " << r.manifest.fcidump.string() << "\n";
  if (!r.metadata.molecule.empty()) {
    out << "molecule       " << r.metadata.molecule << " at " << fixed(r.metadata.bond_length_angstrom, 2)
        << " A\n";
  }
  out << "qubits         " << r.n_qubits << "\n";
  out << "pool size      " << r.pool_size << "\n";
  out << "HF energy      " << fixed(r.hf_energy) << " Ha\n";
  out << "ADAPT energy   " << fixed(r.result.final_energy) << " Ha\n";
  if (r.fci_energy) {
    out << "FCI energy     " << fixed(*r.fci_energy) << " Ha\n";
    const double e = *r.error();
    out << "error          " << sci(e) << " Ha (chemical accuracy: " << (e < kChemicalAccuracy ? "yes" : "no")
        << ")\n";
  }
  out << "operators      " << r.result.ansatz.size() << " in " << r.result.steps.size() << " steps (stop: "
      << to_string(r.result.converged_by) << ")\n";
  out << "VQE iterations " << r.result.total_iterations << "\n";
  out << "quantum calls  assumed " << r.calls.assumed_total << " (3 x " << r.calls.vqe_iterations << " + "
      << r.calls.screening_evaluations << "), measured " << r.calls.measured_total << " ("
      << r.calls.energy_evaluations << " + " << r.calls.screening_evaluations << ")\n";
}

bool same_fixture(const RunManifest& a, const MolecularProblem& pa, const RunManifest& b,
                  const MolecularProblem& pb) {
  std::error_code ec;
  if (std::filesystem::equivalent(a.fcidump, b.fcidump, ec)) return true;
  if (pa.integrals.n_spatial_orbitals() != pb.integrals.n_spatial_orbitals() ||
      pa.integrals.n_electrons() != pb.integrals.n_electrons()) {
    return false;
  }
  if (!pa.metadata || !pb.metadata) return false;
  return pa.metadata->molecule == pb.metadata->molecule &&
         std::abs(pa.metadata->bond_length_angstrom - pb.metadata->bond_length_angstrom) < 1e-9;
}

int cmd_run(const RunManifest& m, std::ostream& out) {
  validate(m);
  const MolecularProblem problem = load_problem(m.fcidump);
  const RunOutcome r = execute(m, problem);
  print_outcome(r, out);
  if (!m.output_dir.empty()) {
    write_artifacts(r, problem);
    out << "artifacts      " << m.output_dir.string() << "\n";
  }
  return kOk;
}

int cmd_compare(std::vector<RunManifest> runs, std::ostream& out) {
  if (runs.empty()) throw UsageError("compare needs --fcidump, --ks values or --manifest files");
  for (const auto& m : runs) validate(m);

  std::vector<std::unique_ptr<MolecularProblem>> problems;
  for (const auto& m : runs) problems.push_back(std::make_unique<MolecularProblem>(load_problem(m.fcidump)));
  for (std::size_t i = 1; i < runs.size(); ++i) {
    if (!same_fixture(runs[0], *problems[0], runs[i], *problems[i])) {
      throw UsageError("refusing to compare different fixtures: '" + runs[0].fcidump.string() + "' and '" +
                       runs[i].fcidump.string() + "'");
    }
  }

  std::vector<RunOutcome> outcomes;
  for (std::size_t i = 0; i < runs.size(); ++i) outcomes.push_back(execute(runs[i], *problems[i]));

  nlohmann::json manifests = nlohmann::json::array();
  for (const auto& m : runs) manifests.push_back(m.to_json());
  std::ostringstream table;
  table << "# manifests: " << manifests.dump() << "\n";
  table << "run,k,max_operators,iterations_per_step,final_energy,fci_energy,error,vqe_iterations,"
           "energy_evaluations,screening_evaluations,assumed_calls,measured_calls\n";
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    table << i << ',' << o.manifest.k << ',' << o.manifest.max_operators << ','
          << o.manifest.effective_iterations_per_step() << ',' << num(o.result.final_energy) << ','
          << optional_num(o.fci_energy) << ',' << optional_num(o.error()) << ',' << o.calls.vqe_iterations << ','
          << o.calls.energy_evaluations << ',' << o.calls.screening_evaluations << ',' << o.calls.assumed_total
          << ',' << o.calls.measured_total << '\n';
  }

  std::ostringstream ratios;
  if (outcomes.size() > 1) {
    ratios << "run_a,run_b,k_a,k_b,assumed_call_ratio,measured_call_ratio,error_ratio,assumed_quoted\n";
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      for (std::size_t j = i + 1; j < outcomes.size(); ++j) {
        const auto& a = outcomes[i];
        const auto& b = outcomes[j];
        const CallRatio cr = call_ratio(a.calls, b.calls);
        std::string err_ratio;
        if (a.error() && b.error() && *b.error() > 0.0) err_ratio = num(*a.error() / *b.error());
        ratios << i << ',' << j << ',' << a.manifest.k << ',' << b.manifest.k << ',' << num(cr.assumed) << ','
               << num(cr.measured) << ',' << err_ratio << ',' << approx_ratio(cr.assumed) << '\n';
      }
    }
  }

  out << table.str();
  if (outcomes.size() > 1) out << "\n" << ratios.str();
  const auto& dir = runs.front().output_dir;
  if (!dir.empty()) {
    ensure_directory(dir);
    write_file(dir / "compare.csv", table.str());
    if (outcomes.size() > 1) write_file(dir / "compare_ratios.csv", manifest_comment(manifests) + ratios.str());
  }
  return kOk;
}

int cmd_scan(const RunManifest& base, const std::vector<std::string>& patterns, std::ostream& out,
             std::ostream& err) {
  validate(base, false);
  std::vector<std::filesystem::path> files;
  for (const auto& p : patterns) {
    const auto hit = expand_glob(p);
    if (hit.empty()) throw UsageError("no FCIDUMP files match '" + p + "'");
    files.insert(files.end(), hit.begin(), hit.end());
  }
  if (files.empty()) throw UsageError("scan needs --glob or file arguments");

  std::vector<ScanRow> rows;
  int norb = -1;
  for (const auto& f : files) {
    RunManifest m = base;
    m.fcidump = f;
    m.output_dir.clear();
    const MolecularProblem problem = load_problem(f);
    if (norb >= 0 && problem.integrals.n_spatial_orbitals() != norb) {
      throw UsageError("inconsistent orbital counts across scan files ('" + f.string() + "' has " +
                       std::to_string(problem.integrals.n_spatial_orbitals()) + ", expected " +
                       std::to_string(norb) + ")");
    }
    norb = problem.integrals.n_spatial_orbitals();
    const RunOutcome o = execute(m, problem);
    rows.push_back({f, o.metadata.molecule, o.metadata.bond_length_angstrom, o.hf_energy, o.fci_energy,
                    o.result.final_energy, o.result.total_iterations});
    err << f.filename().string() << ": error " << (o.error() ? sci(*o.error()) : std::string("n/a")) << "\n";
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ScanRow& a, const ScanRow& b) { return a.bond_length < b.bond_length; });

  nlohmann::json manifest = base.to_json();
  manifest["fcidump"] = patterns;
  std::ostringstream csv;
  csv << manifest_comment(manifest);
  csv << "file,molecule,bond_length_angstrom,hf_energy,fci_energy,adapt_energy,error,vqe_iterations\n";
  for (const auto& r : rows) {
    csv << r.file.filename().string() << ',' << r.molecule << ',' << num(r.bond_length) << ',' << num(r.hf)
        << ',' << optional_num(r.fci) << ',' << num(r.adapt) << ','
        << (r.fci ? num(r.adapt - *r.fci) : std::string{}) << ',' << r.iterations << '\n';
  }
  out << csv.str();
  if (!base.output_dir.empty()) {
    ensure_directory(base.output_dir);
    write_file(base.output_dir / "scan.csv", csv.str());
  }
  return kOk;
}

int cmd_pool_info(const std::string& path, bool as_json, std::ostream& out) {
  if (path.empty()) throw UsageError("--fcidump is required");
  const MolecularIntegrals m = parse_fcidump_file(path);
  const OperatorPool pool = build_pool(m.n_electrons(), m.n_spin_orbitals());
  if (as_json) {
    out << pool_summary(pool).dump(2) << "\n";
    return kOk;
  }
  out << "qubits         " << pool.n_qubits << "\n";
  out << "electrons      " << pool.n_electrons << "\n";
  out << "pool size      " << pool.size() << "\n";
  out << "mixed-spin     " << pool.mixed_spin_count() << "\n";
  out << "same-spin      " << pool.same_spin_count() << "\n";
  return kOk;
}

int cmd_fci(const std::string& path, std::uint64_t seed, std::ostream& out) {
  if (path.empty()) throw UsageError("--fcidump is required");
  const MolecularIntegrals m = parse_fcidump_file(path);
  const PauliSum h = qubit_hamiltonian(m);
  const double hf = expectation(hartree_fock_state(m.n_spin_orbitals(), m.n_electrons()), h);
  const auto meta = load_sidecar(path);
  out << "qubits         " << m.n_spin_orbitals() << "\n";
  out << "HF energy      " << fixed(hf) << " Ha";
  if (meta && meta->hf_energy) out << "  (sidecar " << fixed(*meta->hf_energy) << ", diff " << sci(hf - *meta->hf_energy) << ")";
  out << "\n";
  if (m.n_spin_orbitals() > 24) {
    out << "FCI energy     unavailable above 24 qubits\n";
    return kOk;
  }
  SpectrumRequest req{h, Sector{m.n_electrons(), m.ms2()}, 1, SolverKind::automatic, seed};
  const double fci = exact_ground_energy(req);
  out << "FCI energy     " << fixed(fci) << " Ha";
  if (meta && meta->fci_energy) {
    out << "  (sidecar " << fixed(*meta->fci_energy) << ", diff " << sci(fci - *meta->fci_energy) << ")";
  }
  out << "\n";
  return kOk;
}

}  // namespace

int RunManifest::effective_iterations_per_step() const {
  if (iterations_per_step > 0) return iterations_per_step;
  if (max_operators <= 0) return 1;
  return std::max(1, total_iterations * k / max_operators);
}

AdaptConfig RunManifest::adapt_config() const {
  AdaptConfig c;
  c.k = k;
  c.max_operators = max_operators;
  c.vqe_iterations_per_step = effective_iterations_per_step();
  c.total_iteration_budget = total_iterations;
  c.gradient_threshold = gradient_threshold;
  c.optimizer.max_iterations = c.vqe_iterations_per_step;
  c.optimizer.f_tolerance = f_tolerance;
  c.optimizer.initial_step = initial_step;
  return c;
}

nlohmann::json RunManifest::to_json() const {
  return {{"fcidump", fcidump.string()},
          {"k", k},
          {"max_operators", max_operators},
          {"iterations_per_step", iterations_per_step},
          {"total_iterations", total_iterations},
          {"gradient_threshold", gradient_threshold},
          {"f_tolerance", f_tolerance},
          {"initial_step", initial_step},
          {"output_dir", output_dir.string()},
          {"seed", seed}};
}

RunManifest RunManifest::from_json(const nlohmann::json& doc) {
  const nlohmann::json& j = doc.contains("manifest") ? doc.at("manifest") : doc;
  RunManifest m;
  try {
    m.fcidump = j.at("fcidump").get<std::string>();
    m.k = j.value("k", m.k);
    m.max_operators = j.value("max_operators", m.max_operators);
    m.iterations_per_step = j.value("iterations_per_step", m.iterations_per_step);
    m.total_iterations = j.value("total_iterations", m.total_iterations);
    m.gradient_threshold = j.value("gradient_threshold", m.gradient_threshold);
    m.f_tolerance = j.value("f_tolerance", m.f_tolerance);
    m.initial_step = j.value("initial_step", m.initial_step);
    m.output_dir = j.value("output_dir", std::string{});
    m.seed = j.value("seed", m.seed);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

RunManifest RunManifest::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest '" + path.string() + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("manifest '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return from_json(j);
}

std::optional<double> RunOutcome::error() const {
  if (!fci_energy) return std::nullopt;
  return result.final_energy - *fci_energy;
}

nlohmann::json RunOutcome::to_json(const AnsatzReport& ansatz) const {
  nlohmann::json j;
  j["manifest"] = manifest.to_json();
  j["molecule"] = metadata.molecule;
  j["bond_length_angstrom"] = metadata.bond_length_angstrom;
  j["n_qubits"] = n_qubits;
  j["pool_size"] = pool_size;
  j["hf_energy"] = hf_energy;
  j["fci_energy"] = fci_energy ? nlohmann::json(*fci_energy) : nlohmann::json(nullptr);
  j["error"] = error() ? nlohmann::json(*error()) : nlohmann::json(nullptr);
  if (fci_energy) {
    const auto it = iterations_to_accuracy(result, *fci_energy);
    j["chemical_accuracy"] = *error() < kChemicalAccuracy;
    j["iterations_to_chemical_accuracy"] = it ? nlohmann::json(*it) : nlohmann::json(nullptr);
  }
  j["quantum_calls"] = calls.to_json();
  j["result"] = result_to_json(result);
  j["ansatz_report"] = ansatz.to_json();
  return j;
}

std::optional<double> reference_energy(const MolecularProblem& p, std::uint64_t seed) {
  if (p.n_qubits() > 24) return std::nullopt;
  SpectrumRequest req{p.hamiltonian, Sector{p.integrals.n_electrons(), p.integrals.ms2()}, 1,
                      SolverKind::automatic, seed};
  return exact_ground_energy(req);
}

RunOutcome execute(const RunManifest& m) { return execute(m, load_problem(m.fcidump)); }

RunOutcome execute(const RunManifest& m, const MolecularProblem& problem) {
  RunOutcome r;
  r.manifest = m;
  r.metadata = problem.metadata.value_or(FixtureMetadata{});
  r.n_qubits = problem.n_qubits();
  r.pool_size = problem.pool.size();
  const Statevector hf = problem.hartree_fock();
  r.hf_energy = expectation(hf, problem.hamiltonian);
  r.fci_energy = reference_energy(problem, m.seed);
  r.result = run_adapt(problem.hamiltonian, problem.pool, hf, m.adapt_config());
  r.calls = quantum_call_report(r.result, 3);
  return r;
}

void write_artifacts(const RunOutcome& r, const MolecularProblem& problem) {
  const auto& dir = r.manifest.output_dir;
  ensure_directory(dir);
  const AnsatzReport ansatz = ansatz_report(r.result, problem.pool);
  const nlohmann::json manifest = r.manifest.to_json();

  write_file(dir / "result.json", r.to_json(ansatz).dump(2) + "\n");

  std::ostringstream trace;
  trace << manifest_comment(manifest) << "iterations,energy,error\n";
  for (const auto& p : r.result.energy_trace) {
    trace << p.cumulative_iterations << ',' << num(p.energy) << ','
          << (r.fci_energy ? num(p.energy - *r.fci_energy) : std::string{}) << '\n';
  }
  write_file(dir / "trace.csv", trace.str());

  write_file(dir / "ansatz.txt", manifest_comment(manifest) + ansatz.to_text(r.n_qubits));
  write_file(dir / "ansatz.json", nlohmann::json{{"manifest", manifest}, {"ansatz", ansatz.to_json()}}.dump(2) + "\n");
}

std::vector<std::filesystem::path> expand_glob(const std::string& pattern) {
  glob_t g{};
  std::vector<std::filesystem::path> out;
  if (::glob(pattern.c_str(), 0, nullptr, &g) == 0) {
    for (std::size_t i = 0; i < g.gl_pathc; ++i) out.emplace_back(g.gl_pathv[i]);
  }
  ::globfree(&g);
  std::sort(out.begin(), out.end());
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"K-ADAPT-VQE ground-state energies from FCIDUMP integrals", "kadapt"};
  app.require_subcommand(1);

  std::string manifest_path;
  ManifestFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "grow and optimise one ansatz");
  run_flags.attach(run_cmd, true);
  run_cmd->add_option("--manifest", manifest_path, "re-run from a manifest or result.json");

  ManifestFlags compare_flags;
  std::vector<int> ks;
  std::vector<std::string> compare_manifests;
  auto* compare_cmd = app.add_subcommand("compare", "run several chunk sizes on one fixture");
  compare_flags.attach(compare_cmd, true);
  compare_cmd->add_option("--ks", ks, "chunk sizes to compare, e.g. --ks 1 5");
  compare_cmd->add_option("--manifest", compare_manifests, "manifests to compare (repeatable)");

  ManifestFlags scan_flags;
  std::vector<std::string> patterns;
  auto* scan_cmd = app.add_subcommand("scan", "dissociation curve over several geometries");
  scan_flags.attach(scan_cmd, false);
  scan_cmd->add_option("--glob,files", patterns, "FCIDUMP files or shell patterns");

  std::string info_path;
  bool info_json = false;
  auto* pool_cmd = app.add_subcommand("pool-info", "summarise the excitation pool");
  pool_cmd->add_option("--fcidump", info_path, "FCIDUMP file");
  pool_cmd->add_flag("--json", info_json, "full per-operator summary");

  std::string fci_path;
  std::uint64_t fci_seed = 0;
  auto* fci_cmd = app.add_subcommand("fci", "Hartree-Fock and exact energies");
  fci_cmd->add_option("--fcidump", fci_path, "FCIDUMP file");
  fci_cmd->add_option("--seed", fci_seed, "seed for the Lanczos start vector");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageOrIo;
  }

  try {
    if (*run_cmd) return cmd_run(run_flags.resolve(manifest_path), out);
    if (*compare_cmd) {
      std::vector<RunManifest> runs;
      for (const auto& p : compare_manifests) runs.push_back(compare_flags.resolve(p));
      const RunManifest base = compare_flags.resolve("");
      if (ks.empty() && compare_manifests.empty() && !base.fcidump.empty()) runs.push_back(base);
      if (!ks.empty()) {
        for (int k : ks) {
          RunManifest m = base;
          m.k = k;
          runs.push_back(m);
        }
      }
      return cmd_compare(std::move(runs), out);
    }
    if (*scan_cmd) return cmd_scan(scan_flags.resolve(""), patterns, out, err);
    if (*pool_cmd) return cmd_pool_info(info_path, info_json, out);
    if (*fci_cmd) return cmd_fci(fci_path, fci_seed, out);
  } catch (const UsageError& e) {
    err << "kadapt: " << e.what() << "\n";
    return kUsageOrIo;
  } catch (const IoError& e) {
    err << "kadapt: " << e.what() << "\n";
    return kUsageOrIo;
  } catch (const ParseError& e) {
    err << "kadapt: " << e.what() << "\n";
    return kUsageOrIo;
  } catch (const std::exception& e) {
    err << "kadapt: " << e.what() << "\n";
    return kComputationFailure;
  }
  return kUsageOrIo;
}

}  // namespace kadapt::cli
