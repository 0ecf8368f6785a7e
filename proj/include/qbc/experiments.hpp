#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qbc/adversary.hpp"
#include "qbc/protocol.hpp"

namespace qbc {

enum class ExperimentKind { Binding, Hiding, EprDemo, Sweep };

std::string experiment_kind_name(ExperimentKind kind);
ExperimentKind experiment_kind_from_name(const std::string& name);

// Sweep parameter: name is one of "m", "trials", "grid-n".
struct SweepAxis {
  std::string name;
  std::vector<std::int64_t> values;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Binding;
  ProtocolParams params;
  AttackStrategy strategy;
  std::int64_t trials = 10000;
  std::uint64_t master_seed = 0;
  std::optional<SweepAxis> sweep_axis;

  ExperimentConfig(ExperimentKind kind_, ProtocolParams params_, AttackStrategy strategy_,
                   std::int64_t trials_, std::uint64_t master_seed_,
                   std::optional<SweepAxis> sweep_axis_ = std::nullopt);
};

struct ExperimentResult {
  std::int64_t successes = 0;
  std::int64_t trials = 0;
  double estimate = 0.0;
  std::pair<double, double> wilson_interval_95{0.0, 0.0};
  std::map<std::string, double> scalar_metrics;
  std::optional<ExperimentConfig> config_echo;  // set by every runner
  std::string engine_version;
};

// 95% Wilson score interval for successes/trials.
std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t trials);

// Best distinguishing probability given a trace distance.
double helstrom_bound(double trace_dist);

// The binding game: per trial Alice commits a bit, a uniform challenge bit
// is drawn, and when the challenge differs from the commitment the strategy
// forges the opening. A trial succeeds iff Bob accepts the challenge bit.
// Trials use seeds derived from (master_seed, trial index), so any thread
// count yields identical results.
ExperimentResult run_binding_experiment(const ExperimentConfig& config, int threads = 1);

// Bob's distinguishability of the two commitments before opening: for each
// candidate U_B (all members when enumerable, a fixed number of draws when
// continuous) average his post-commit views over Alice's family and report
// the worst-case trace distance and the induced guessing bound.
ExperimentResult estimate_hiding(const ProtocolParams& params, std::int64_t samples,
                                 std::uint64_t master_seed);

// Entanglement-attack demo: build the superposition pair from the true
// families, construct the switch from the assumed Bob family, and report
// {hiding_td, residual, attack_success}.
ExperimentResult run_epr_demo(const UnitaryFamily& alice_family,
                              const UnitaryFamily& bob_family,
                              const UnitaryFamily& assumed_bob_family,
                              const BasisPair& basis, std::uint64_t master_seed);

// Runs the binding game once per axis value with per-point derived seeds.
std::vector<ExperimentResult> run_sweep(const ExperimentConfig& config, int threads = 1);

// Dispatch on config.kind (not Sweep).
ExperimentResult run_experiment(const ExperimentConfig& config, int threads = 1);

}  // namespace qbc
