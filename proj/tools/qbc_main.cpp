// qbc: run the bit-commitment protocol and its security games from the
// command line. Commands: honest, bind, hide, epr, sweep.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qbc/errors.hpp"
#include "qbc/experiments.hpp"
#include "qbc/result_io.hpp"
#include "qbc/transcript_io.hpp"

namespace {

using qbc::AttackStrategy;
using qbc::Axis;
using qbc::BasisPair;
using qbc::ExperimentConfig;
using qbc::ExperimentKind;
using qbc::ProtocolParams;
using qbc::UnitaryFamily;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw qbc::InvalidConfig("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Family shorthand: rot:<axes>:<N> | pauli | haar | list:<path>, where
// <axes> is letters from {x,y,z} (commas optional) and list files carry a
// JSON array of row-major 2x2 complex matrices.
UnitaryFamily parse_family(const std::string& spec) {
  if (spec == "pauli") return UnitaryFamily::pauli();
  if (spec == "haar") return UnitaryFamily::haar_continuous();
  if (spec.rfind("rot:", 0) == 0) {
    const std::string rest = spec.substr(4);
    const std::size_t colon = rest.rfind(':');
    if (colon == std::string::npos) {
      throw qbc::InvalidConfig("rotation family spec must be rot:<axes>:<N>");
    }
    std::vector<Axis> axes;
    for (char c : rest.substr(0, colon)) {
      if (c == ',') continue;
      axes.push_back(qbc::axis_from_letter(c));
    }
    int n = 0;
    try {
      n = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw qbc::InvalidConfig("bad rotation grid size in: " + spec);
    }
    return UnitaryFamily::rotation_grid(std::move(axes), n);
  }
  if (spec.rfind("list:", 0) == 0) {
    const nlohmann::json doc = nlohmann::json::parse(read_file(spec.substr(5)));
    std::vector<qbc::UnitaryMatrix> members;
    for (const auto& m : doc) {
      Eigen::Matrix2cd entries;
      std::size_t k = 0;
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          entries(r, c) = qbc::Complex(m.at(k).at(0).get<double>(),
                                       m.at(k).at(1).get<double>());
          ++k;
        }
      }
      members.emplace_back(entries);
    }
    return UnitaryFamily::explicit_list(std::move(members));
  }
  throw qbc::InvalidConfig("unknown family spec: " + spec);
}

BasisPair parse_basis(const std::string& spec) {
  if (spec == "computational") return qbc::computational_basis();
  if (spec.rfind("file:", 0) == 0) {
    const nlohmann::json doc = nlohmann::json::parse(read_file(spec.substr(5)));
    auto state = [&](const char* key) {
      Eigen::VectorXcd amps(2);
      for (int i = 0; i < 2; ++i) {
        amps[i] = qbc::Complex(doc.at(key).at(i).at(0).get<double>(),
                               doc.at(key).at(i).at(1).get<double>());
      }
      return qbc::StateVector({2}, amps);
    };
    return BasisPair(state("phi0"), state("phi1"));
  }
  throw qbc::InvalidConfig("unknown basis spec: " + spec);
}

struct CommonOpts {
  std::uint64_t seed = 0;
  std::string output;
  std::string format = "structured-text";
  int threads = 1;
  int instances = 1;
  std::string alice_family = "rot:x,y,z:16";
  std::string bob_family = "rot:x,y,z:16";
  std::string basis = "computational";
  double tolerance = 1e-9;
  std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_families = true) {
  cmd->add_option("--seed", o.seed, "Master seed")->envname("QBC_SEED");
  cmd->add_option("-o,--output", o.output, "Write the document to this path");
  cmd->add_option("--format", o.format, "structured-text or csv");
  cmd->add_option("--threads", o.threads, "Worker threads (results are identical for any count)")
      ->check(CLI::PositiveNumber);
  if (with_families) {
    cmd->add_option("-m,--instances", o.instances, "Parallel qubit commitments")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--alice-family", o.alice_family, "Alice transform family spec");
    cmd->add_option("--bob-family", o.bob_family, "Bob transform family spec");
    cmd->add_option("--basis", o.basis, "computational or file:<path>");
    cmd->add_option("--tolerance", o.tolerance, "Reveal unitarity tolerance");
    cmd->add_option("--config", o.config_path,
                    "JSON experiment config; explicit flags override its fields");
  }
}

ProtocolParams params_from_opts(const CommonOpts& o) {
  return ProtocolParams(parse_basis(o.basis), parse_family(o.alice_family),
                        parse_family(o.bob_family), o.instances, o.tolerance);
}

// Count for options that may not exist on this subcommand.
std::size_t opt_count(const CLI::App* cmd, const std::string& name) {
  const CLI::Option* opt = cmd->get_option_no_throw(name);
  return opt ? opt->count() : 0;
}

// Start from the config file when given, then lay explicitly-passed flags on
// top and force the command's kind.
ExperimentConfig resolve_config(const CLI::App* cmd, const CommonOpts& o,
                                ExperimentKind kind, AttackStrategy strategy,
                                std::int64_t trials,
                                std::optional<qbc::SweepAxis> axis = std::nullopt) {
  if (o.config_path.empty()) {
    return ExperimentConfig(kind, params_from_opts(o), std::move(strategy), trials,
                            o.seed, std::move(axis));
  }
  ExperimentConfig base = qbc::config_from_text(read_file(o.config_path));
  if (base.kind != kind) {
    throw qbc::InvalidConfig("config kind '" + qbc::experiment_kind_name(base.kind) +
                             "' does not match this command");
  }
  ProtocolParams params(
      opt_count(cmd, "--basis") ? parse_basis(o.basis) : base.params.basis,
      opt_count(cmd, "--alice-family") ? parse_family(o.alice_family)
                                       : base.params.alice_family,
      opt_count(cmd, "--bob-family") ? parse_family(o.bob_family) : base.params.bob_family,
      opt_count(cmd, "--instances") ? o.instances : base.params.instances,
      opt_count(cmd, "--tolerance") ? o.tolerance : base.params.tolerance);
  const bool strategy_set =
      opt_count(cmd, "--strategy") || opt_count(cmd, "--assumed-bob-family");
  if (strategy_set && strategy.kind == qbc::StrategyKind::EprModelAttack &&
      !opt_count(cmd, "--assumed-bob-family")) {
    strategy.assumed_bob_family = params.bob_family;
  }
  const bool trials_set = opt_count(cmd, "--trials") || opt_count(cmd, "--samples");
  return ExperimentConfig(kind, std::move(params),
                          strategy_set ? std::move(strategy) : base.strategy,
                          trials_set ? trials : base.trials,
                          opt_count(cmd, "--seed") ? o.seed : base.master_seed,
                          axis.has_value() && (opt_count(cmd, "--values") ||
                                               opt_count(cmd, "--axis"))
                              ? std::move(axis)
                              : base.sweep_axis);
}

void emit(const std::string& doc, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << doc;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out.good()) throw qbc::InvalidConfig("cannot write file: " + output_path);
  out << doc;
}

void echo_config(const ExperimentConfig& config) {
  std::cerr << qbc::config_to_text(config) << '\n';
}

AttackStrategy strategy_from_opts(const std::string& name,
                                  const std::string& assumed_spec,
                                  const std::string& bob_spec) {
  AttackStrategy s;
  s.kind = qbc::strategy_from_name(name);
  if (s.kind == qbc::StrategyKind::EprModelAttack) {
    s.assumed_bob_family = parse_family(assumed_spec.empty() ? bob_spec : assumed_spec);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bit-commitment protocol simulator and security-game harness"};
  app.require_subcommand(1);

  CommonOpts honest_opts, bind_opts, hide_opts, epr_opts, sweep_opts;
  int honest_bit = 0;
  std::int64_t bind_trials = 10000, hide_samples = 10000, sweep_trials = 10000;
  std::string bind_strategy = "honest", sweep_strategy = "random-substitution";
  std::string bind_assumed, epr_assumed, sweep_assumed;
  std::string sweep_axis_name = "m";
  std::vector<std::int64_t> sweep_values = {1, 2, 3, 4};

  CLI::App* honest = app.add_subcommand("honest", "Run one honest commit/open exchange");
  add_common(honest, honest_opts);
  honest->add_option("--bit", honest_bit, "Bit to commit")->check(CLI::Range(0, 1));

  CLI::App* bind = app.add_subcommand("bind", "Estimate the binding game success rate");
  add_common(bind, bind_opts);
  bind->add_option("--strategy", bind_strategy, "honest|random|oracle|epr");
  bind->add_option("--assumed-bob-family", bind_assumed,
                   "Assumed Bob family for the epr strategy");
  bind->add_option("--trials", bind_trials, "Game trials")->check(CLI::PositiveNumber);

  CLI::App* hide = app.add_subcommand("hide", "Estimate Bob's pre-opening distinguishability");
  add_common(hide, hide_opts);
  hide->add_option("--samples", hide_samples, "Samples for continuous families")
      ->check(CLI::PositiveNumber);

  CLI::App* epr = app.add_subcommand("epr", "Entanglement-attack model demo");
  add_common(epr, epr_opts);
  epr->add_option("--assumed-bob-family", epr_assumed,
                  "Bob family the attacker assumes (defaults to the true one)");

  CLI::App* sweep = app.add_subcommand("sweep", "Run the binding game along a parameter axis");
  add_common(sweep, sweep_opts);
  sweep->add_option("--strategy", sweep_strategy, "honest|random|oracle|epr");
  sweep->add_option("--assumed-bob-family", sweep_assumed,
                    "Assumed Bob family for the epr strategy");
  sweep->add_option("--trials", sweep_trials, "Game trials per point")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--axis", sweep_axis_name, "m, trials, or grid-n");
  sweep->add_option("--values", sweep_values, "Axis values")->delimiter(',');

  try {
    app.parse(argc, argv);

    if (honest->parsed()) {
      const ProtocolParams params = params_from_opts(honest_opts);
      nlohmann::json echo{{"command", "honest"},
                          {"bit", honest_bit},
                          {"master_seed", honest_opts.seed},
                          {"params", nlohmann::json::parse(qbc::params_to_text(params))}};
      std::cerr << echo.dump() << '\n';
      if (honest_opts.format != "structured-text") {
        throw qbc::InvalidConfig("honest transcripts are structured-text only");
      }
      qbc::RandomStream rng(honest_opts.seed);
      emit(qbc::transcript_to_jsonl(qbc::run_honest(params, honest_bit, rng)),
           honest_opts.output);
    } else if (bind->parsed()) {
      const ExperimentConfig config = resolve_config(
          bind, bind_opts, ExperimentKind::Binding,
          strategy_from_opts(bind_strategy, bind_assumed, bind_opts.bob_family),
          bind_trials);
      echo_config(config);
      const qbc::ExperimentResult r = qbc::run_binding_experiment(config, bind_opts.threads);
      emit(qbc::serialize_result(r, qbc::format_from_name(bind_opts.format)),
           bind_opts.output);
    } else if (hide->parsed()) {
      const ExperimentConfig config =
          resolve_config(hide, hide_opts, ExperimentKind::Hiding,
                         AttackStrategy::honest(), hide_samples);
      echo_config(config);
      const qbc::ExperimentResult r =
          qbc::estimate_hiding(config.params, config.trials, config.master_seed);
      emit(qbc::serialize_result(r, qbc::format_from_name(hide_opts.format)),
           hide_opts.output);
    } else if (epr->parsed()) {
      const ExperimentConfig config = resolve_config(
          epr, epr_opts, ExperimentKind::EprDemo,
          strategy_from_opts("epr", epr_assumed, epr_opts.bob_family), 1);
      echo_config(config);
      const qbc::ExperimentResult r = qbc::run_experiment(config, epr_opts.threads);
      emit(qbc::serialize_result(r, qbc::format_from_name(epr_opts.format)),
           epr_opts.output);
    } else if (sweep->parsed()) {
      const ExperimentConfig config = resolve_config(
          sweep, sweep_opts, ExperimentKind::Sweep,
          strategy_from_opts(sweep_strategy, sweep_assumed, sweep_opts.bob_family),
          sweep_trials, qbc::SweepAxis{sweep_axis_name, sweep_values});
      echo_config(config);
      const std::vector<qbc::ExperimentResult> results =
          qbc::run_sweep(config, sweep_opts.threads);
      emit(qbc::serialize_results(results, qbc::format_from_name(sweep_opts.format)),
           sweep_opts.output);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      return app.exit(e);
    }
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qbc::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
