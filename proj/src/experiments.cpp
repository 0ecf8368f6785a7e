#include "qbc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "qbc/density.hpp"
#include "qbc/epr.hpp"
#include "qbc/errors.hpp"
#include "qbc/version.hpp"

namespace qbc {

namespace {

// Candidate count for a non-enumerable Bob family in the hiding estimate.
constexpr int kContinuousBobCandidates = 16;

void run_indexed(std::int64_t n, int threads, const std::function<void(std::int64_t)>& fn) {
  if (threads <= 1 || n < 2) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::int64_t chunk = (n + threads - 1) / threads;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    const std::int64_t lo = t * chunk;
    const std::int64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::int64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

bool run_binding_trial(const ProtocolParams& params, const AttackStrategy& strategy,
                       RandomStream& rng) {
  auto [bob_secret, offer] = bob_commit_offer(params, rng);
  const int commit_bit = rng.bit();
  auto [alice_secret, commit] = alice_commit(commit_bit, std::move(offer), params, rng);
  const int challenge = rng.bit();

  Reveal reveal;
  if (challenge == commit_bit || strategy.kind == StrategyKind::Honest) {
    reveal = alice_open(alice_secret);
  } else {
    reveal.announced_bit = challenge;
    reveal.transforms.reserve(params.instances);
    for (int i = 0; i < params.instances; ++i) {
      const ForgedReveal forged =
          strategy.kind == StrategyKind::OracleSubstitution
              ? forge_substitution_oracle(alice_secret.transforms[i],
                                          bob_secret.transforms[i], params.basis)
              : forge_substitution_random(alice_secret.transforms[i], rng);
      reveal.transforms.push_back(forged.composed.entries);
    }
  }
  const Verdict verdict = bob_verify(bob_secret, commit, reveal, params, rng);
  return verdict.accepted && verdict.opened_bit == challenge;
}

ExperimentResult make_result(ExperimentConfig echo, std::int64_t successes,
                             std::int64_t trials, double estimate,
                             std::pair<double, double> interval,
                             std::map<std::string, double> metrics) {
  ExperimentResult r;
  r.successes = successes;
  r.trials = trials;
  r.estimate = estimate;
  r.wilson_interval_95 = interval;
  r.scalar_metrics = std::move(metrics);
  r.config_echo = std::move(echo);
  r.engine_version = kEngineVersion;
  return r;
}

}  // namespace

std::string experiment_kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Binding: return "binding";
    case ExperimentKind::Hiding: return "hiding";
    case ExperimentKind::EprDemo: return "epr-demo";
    case ExperimentKind::Sweep: return "sweep";
  }
  throw std::logic_error("unreachable");
}

ExperimentKind experiment_kind_from_name(const std::string& name) {
  if (name == "binding") return ExperimentKind::Binding;
  if (name == "hiding") return ExperimentKind::Hiding;
  if (name == "epr-demo") return ExperimentKind::EprDemo;
  if (name == "sweep") return ExperimentKind::Sweep;
  throw InvalidConfig("unknown experiment kind: " + name);
}

ExperimentConfig::ExperimentConfig(ExperimentKind kind_, ProtocolParams params_,
                                   AttackStrategy strategy_, std::int64_t trials_,
                                   std::uint64_t master_seed_,
                                   std::optional<SweepAxis> sweep_axis_)
    : kind(kind_),
      params(std::move(params_)),
      strategy(std::move(strategy_)),
      trials(trials_),
      master_seed(master_seed_),
      sweep_axis(std::move(sweep_axis_)) {
  if (trials < 1) throw InvalidConfig("trial count must be >= 1");
  if ((kind == ExperimentKind::Sweep) != sweep_axis.has_value()) {
    throw InvalidConfig("sweep_axis must be present exactly for sweep configs");
  }
}

std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t trials) {
  const double z = 1.959963984540054;  // 97.5th normal quantile
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // Containment of the point estimate holds in exact arithmetic; clamp out
  // floating-point slack at the boundaries.
  const double lo = std::min(std::max(center - half, 0.0), p);
  const double hi = std::max(std::min(center + half, 1.0), p);
  return {lo, hi};
}

double helstrom_bound(double trace_dist) { return 0.5 + 0.5 * trace_dist; }

ExperimentResult run_binding_experiment(const ExperimentConfig& config, int threads) {
  if (config.kind != ExperimentKind::Binding) {
    throw InvalidConfig("run_binding_experiment needs a binding config");
  }

  std::map<std::string, double> metrics;
  double epr_flip_all = 0.0;
  if (config.strategy.kind == StrategyKind::EprModelAttack) {
    if (!config.strategy.assumed_bob_family.has_value()) {
      throw InvalidConfig("epr-model strategy needs an assumed Bob family");
    }
    // Abstract-model attack: the per-instance switch succeeds with the
    // fidelity of the assumed-family switch on the true-family pair, and all
    // m instances must switch.
    const EprStatePair true_pair = epr_build_states(
        config.params.alice_family, config.params.bob_family, config.params.basis);
    const EprStatePair assumed_pair = epr_build_states(
        config.params.alice_family, *config.strategy.assumed_bob_family,
        config.params.basis);
    auto [v, residual] = epr_construct_v(assumed_pair);
    const double flip = epr_attack_success(true_pair, v);
    epr_flip_all = std::pow(flip, config.params.instances);
    metrics["attack_success"] = flip;
    metrics["residual"] = residual;
    metrics["hiding_td"] = epr_check_hiding(true_pair);
  }

  std::vector<std::uint8_t> wins(config.trials, 0);
  const ProtocolParams& params = config.params;
  const AttackStrategy& strategy = config.strategy;
  run_indexed(config.trials, threads, [&](std::int64_t i) {
    RandomStream rng(derive_seed(config.master_seed, static_cast<std::uint64_t>(i)));
    if (strategy.kind == StrategyKind::EprModelAttack) {
      const int challenge = rng.bit();
      wins[i] = (challenge == 0 || rng.uniform() < epr_flip_all) ? 1 : 0;
    } else {
      wins[i] = run_binding_trial(params, strategy, rng) ? 1 : 0;
    }
  });

  std::int64_t successes = 0;
  for (std::uint8_t w : wins) successes += w;
  const double estimate = static_cast<double>(successes) / config.trials;
  return make_result(config, successes, config.trials, estimate,
                     wilson_interval(successes, config.trials), std::move(metrics));
}

ExperimentResult estimate_hiding(const ProtocolParams& params, std::int64_t samples,
                                 std::uint64_t master_seed) {
  if (samples < 1) throw InvalidConfig("sample count must be >= 1");
  RandomStream rng(derive_seed(master_seed, 0));

  std::vector<UnitaryMatrix> bob_candidates;
  if (params.bob_family.enumerable()) {
    for (std::size_t i = 0; i < params.bob_family.size(); ++i) {
      bob_candidates.push_back(params.bob_family.member(i));
    }
  } else {
    for (int i = 0; i < kContinuousBobCandidates; ++i) {
      bob_candidates.push_back(params.bob_family.sample(rng));
    }
  }

  double worst_td = 0.0;
  for (const UnitaryMatrix& u_b : bob_candidates) {
    Eigen::Matrix2cd rho[2] = {Eigen::Matrix2cd::Zero(), Eigen::Matrix2cd::Zero()};
    const Eigen::Vector2cd seeded[2] = {u_b.entries * params.basis.phi0.amps,
                                        u_b.entries * params.basis.phi1.amps};
    if (params.alice_family.enumerable()) {
      const std::size_t n = params.alice_family.size();
      for (std::size_t i = 0; i < n; ++i) {
        const Eigen::Matrix2cd u_a = params.alice_family.member(i).entries;
        for (int b = 0; b < 2; ++b) {
          const Eigen::Vector2cd view = u_a * seeded[b];
          rho[b] += view * view.adjoint() / static_cast<double>(n);
        }
      }
    } else {
      for (std::int64_t i = 0; i < samples; ++i) {
        const Eigen::Matrix2cd u_a = params.alice_family.sample(rng).entries;
        for (int b = 0; b < 2; ++b) {
          const Eigen::Vector2cd view = u_a * seeded[b];
          rho[b] += view * view.adjoint() / static_cast<double>(samples);
        }
      }
    }
    worst_td = std::max(
        worst_td, trace_distance(DensityMatrix(rho[0]), DensityMatrix(rho[1])));
  }

  ExperimentConfig echo(ExperimentKind::Hiding, params, AttackStrategy::honest(),
                        samples, master_seed);
  return make_result(std::move(echo), 0, samples, worst_td, {worst_td, worst_td},
                     {{"helstrom_bound", helstrom_bound(worst_td)},
                      {"trace_distance", worst_td}});
}

ExperimentResult run_epr_demo(const UnitaryFamily& alice_family,
                              const UnitaryFamily& bob_family,
                              const UnitaryFamily& assumed_bob_family,
                              const BasisPair& basis, std::uint64_t master_seed) {
  const EprStatePair true_pair = epr_build_states(alice_family, bob_family, basis);
  const EprStatePair assumed_pair = epr_build_states(alice_family, assumed_bob_family, basis);
  auto [v, residual] = epr_construct_v(assumed_pair);
  const double success = epr_attack_success(true_pair, v);
  const double hiding_td = epr_check_hiding(true_pair);

  ExperimentConfig echo(ExperimentKind::EprDemo,
                        ProtocolParams(basis, alice_family, bob_family),
                        AttackStrategy::epr_model(assumed_bob_family), 1, master_seed);
  return make_result(std::move(echo), 0, 1, success, {success, success},
                     {{"attack_success", success},
                      {"hiding_td", hiding_td},
                      {"residual", residual}});
}

std::vector<ExperimentResult> run_sweep(const ExperimentConfig& config, int threads) {
  if (config.kind != ExperimentKind::Sweep || !config.sweep_axis.has_value()) {
    throw InvalidConfig("run_sweep needs a sweep config with an axis");
  }
  const SweepAxis& axis = *config.sweep_axis;
  if (axis.values.empty()) throw InvalidConfig("sweep axis needs at least one value");

  std::vector<ExperimentResult> results;
  results.reserve(axis.values.size());
  for (std::size_t idx = 0; idx < axis.values.size(); ++idx) {
    const std::int64_t value = axis.values[idx];
    if (value < 1) throw InvalidConfig("sweep axis values must be >= 1");

    ExperimentConfig point = config;
    point.kind = ExperimentKind::Binding;
    point.sweep_axis.reset();
    point.master_seed = derive_seed(config.master_seed, idx);
    if (axis.name == "m") {
      point.params.instances = static_cast<int>(value);
    } else if (axis.name == "trials") {
      point.trials = value;
    } else if (axis.name == "grid-n") {
      if (point.params.alice_family.kind() != FamilyKind::RotationGrid ||
          point.params.bob_family.kind() != FamilyKind::RotationGrid) {
        throw InvalidConfig("grid-n sweeps need rotation-grid families");
      }
      point.params.alice_family = UnitaryFamily::rotation_grid(
          point.params.alice_family.axes(), static_cast<int>(value));
      point.params.bob_family = UnitaryFamily::rotation_grid(
          point.params.bob_family.axes(), static_cast<int>(value));
    } else {
      throw InvalidConfig("unknown sweep axis: " + axis.name);
    }
    results.push_back(run_binding_experiment(point, threads));
  }
  return results;
}

ExperimentResult run_experiment(const ExperimentConfig& config, int threads) {
  switch (config.kind) {
    case ExperimentKind::Binding:
      return run_binding_experiment(config, threads);
    case ExperimentKind::Hiding:
      return estimate_hiding(config.params, config.trials, config.master_seed);
    case ExperimentKind::EprDemo: {
      const UnitaryFamily assumed = config.strategy.assumed_bob_family.has_value()
                                        ? *config.strategy.assumed_bob_family
                                        : config.params.bob_family;
      return run_epr_demo(config.params.alice_family, config.params.bob_family, assumed,
                          config.params.basis, config.master_seed);
    }
    case ExperimentKind::Sweep:
      throw InvalidConfig("sweep configs run through run_sweep");
  }
  throw std::logic_error("unreachable");
}

}  // namespace qbc
