#include "qbc/result_io.hpp"

#include <cstdio>
#include <set>
#include <stdexcept>

#include "qbc/errors.hpp"
#include "json_util.hpp"

namespace qbc {

namespace {

using detail::json;

std::string axes_string(const std::vector<Axis>& axes) {
  std::string s;
  for (Axis a : axes) s += axis_letter(a);
  return s;
}

std::vector<Axis> axes_from_string(const std::string& s) {
  std::vector<Axis> axes;
  for (char c : s) {
    if (c == ',') continue;
    axes.push_back(axis_from_letter(c));
  }
  return axes;
}

json family_to_json(const UnitaryFamily& f) {
  switch (f.kind()) {
    case FamilyKind::RotationGrid:
      return json{{"kind", "rotation-grid"},
                  {"axes", axes_string(f.axes())},
                  {"grid_size", f.grid_size()}};
    case FamilyKind::ExplicitList: {
      json members = json::array();
      for (const auto& m : f.members()) members.push_back(detail::cmatrix_to_json(m.entries));
      return json{{"kind", "explicit-list"}, {"members", members}};
    }
    case FamilyKind::HaarContinuous:
      return json{{"kind", "haar-continuous"}};
  }
  throw std::logic_error("unreachable");
}

UnitaryFamily family_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rotation-grid") {
    return UnitaryFamily::rotation_grid(axes_from_string(j.at("axes").get<std::string>()),
                                        j.at("grid_size").get<int>());
  }
  if (kind == "explicit-list") {
    std::vector<UnitaryMatrix> members;
    for (const auto& m : j.at("members")) {
      members.emplace_back(detail::cmatrix_from_json(m, 2, 2));
    }
    return UnitaryFamily::explicit_list(std::move(members));
  }
  if (kind == "haar-continuous") return UnitaryFamily::haar_continuous();
  throw InvalidConfig("unknown family kind: " + kind);
}

json strategy_to_json(const AttackStrategy& s) {
  json j{{"kind", strategy_name(s.kind)}};
  if (s.assumed_bob_family.has_value()) {
    j["assumed_bob_family"] = family_to_json(*s.assumed_bob_family);
  }
  return j;
}

AttackStrategy strategy_from_json(const json& j) {
  AttackStrategy s;
  s.kind = strategy_from_name(j.at("kind").get<std::string>());
  if (j.contains("assumed_bob_family")) {
    s.assumed_bob_family = family_from_json(j.at("assumed_bob_family"));
  }
  return s;
}

json params_to_json(const ProtocolParams& p) {
  return json{{"basis", json{{"phi0", detail::cvector_to_json(p.basis.phi0.amps)},
                             {"phi1", detail::cvector_to_json(p.basis.phi1.amps)}}},
              {"alice_family", family_to_json(p.alice_family)},
              {"bob_family", family_to_json(p.bob_family)},
              {"instances", p.instances},
              {"tolerance", p.tolerance}};
}

ProtocolParams params_from_json(const json& j) {
  const json& basis = j.at("basis");
  return ProtocolParams(
      BasisPair(StateVector({2}, detail::cvector_from_json(basis.at("phi0"))),
                StateVector({2}, detail::cvector_from_json(basis.at("phi1")))),
      family_from_json(j.at("alice_family")), family_from_json(j.at("bob_family")),
      j.at("instances").get<int>(), j.at("tolerance").get<double>());
}

json config_to_json(const ExperimentConfig& c) {
  json j{{"kind", experiment_kind_name(c.kind)},
         {"params", params_to_json(c.params)},
         {"strategy", strategy_to_json(c.strategy)},
         {"trials", c.trials},
         {"master_seed", c.master_seed}};
  if (c.sweep_axis.has_value()) {
    j["sweep_axis"] = json{{"name", c.sweep_axis->name}, {"values", c.sweep_axis->values}};
  }
  return j;
}

ExperimentConfig config_from_json(const json& j) {
  std::optional<SweepAxis> axis;
  if (j.contains("sweep_axis")) {
    axis = SweepAxis{j.at("sweep_axis").at("name").get<std::string>(),
                     j.at("sweep_axis").at("values").get<std::vector<std::int64_t>>()};
  }
  return ExperimentConfig(experiment_kind_from_name(j.at("kind").get<std::string>()),
                          params_from_json(j.at("params")),
                          strategy_from_json(j.at("strategy")),
                          j.at("trials").get<std::int64_t>(),
                          j.at("master_seed").get<std::uint64_t>(), std::move(axis));
}

json result_to_json(const ExperimentResult& r) {
  json j{{"successes", r.successes},
         {"trials", r.trials},
         {"estimate", r.estimate},
         {"wilson_interval_95",
          json::array({r.wilson_interval_95.first, r.wilson_interval_95.second})},
         {"scalar_metrics", r.scalar_metrics},
         {"engine_version", r.engine_version}};
  if (r.config_echo.has_value()) j["config_echo"] = config_to_json(*r.config_echo);
  return j;
}

ExperimentResult result_from_json(const json& j) {
  ExperimentResult r;
  r.successes = j.at("successes").get<std::int64_t>();
  r.trials = j.at("trials").get<std::int64_t>();
  r.estimate = j.at("estimate").get<double>();
  r.wilson_interval_95 = {j.at("wilson_interval_95").at(0).get<double>(),
                          j.at("wilson_interval_95").at(1).get<double>()};
  r.scalar_metrics = j.at("scalar_metrics").get<std::map<std::string, double>>();
  r.engine_version = j.at("engine_version").get<std::string>();
  if (j.contains("config_echo")) r.config_echo = config_from_json(j.at("config_echo"));
  return r;
}

std::string full_precision(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_document(const std::vector<ExperimentResult>& results) {
  std::set<std::string> keys;
  for (const auto& r : results) {
    for (const auto& [k, v] : r.scalar_metrics) keys.insert(k);
  }
  std::string out = "kind,strategy,m,trials,estimate,ci_lo,ci_hi";
  for (const auto& k : keys) out += "," + k;
  out += '\n';
  for (const auto& r : results) {
    const bool has_echo = r.config_echo.has_value();
    out += has_echo ? experiment_kind_name(r.config_echo->kind) : "";
    out += ',';
    out += has_echo ? strategy_name(r.config_echo->strategy.kind) : "";
    out += ',';
    out += has_echo ? std::to_string(r.config_echo->params.instances) : "";
    out += ',' + std::to_string(r.trials);
    out += ',' + full_precision(r.estimate);
    out += ',' + full_precision(r.wilson_interval_95.first);
    out += ',' + full_precision(r.wilson_interval_95.second);
    for (const auto& k : keys) {
      out += ',';
      const auto it = r.scalar_metrics.find(k);
      if (it != r.scalar_metrics.end()) out += full_precision(it->second);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

ResultFormat format_from_name(const std::string& name) {
  if (name == "structured-text" || name == "json") return ResultFormat::StructuredText;
  if (name == "csv") return ResultFormat::Csv;
  throw InvalidConfig("unknown output format: " + name);
}

std::string config_to_text(const ExperimentConfig& config) {
  return config_to_json(config).dump();
}

std::string params_to_text(const ProtocolParams& params) {
  return params_to_json(params).dump();
}

ExperimentConfig config_from_text(const std::string& text) {
  return config_from_json(json::parse(text));
}

std::string serialize_result(const ExperimentResult& result, ResultFormat format) {
  return serialize_results(std::vector<ExperimentResult>{result}, format);
}

std::string serialize_results(const std::vector<ExperimentResult>& results,
                              ResultFormat format) {
  if (format == ResultFormat::Csv) return csv_document(results);
  std::string out;
  for (const auto& r : results) {
    out += result_to_json(r).dump();
    out += '\n';
  }
  return out;
}

ExperimentResult result_from_text(const std::string& text) {
  return result_from_json(json::parse(text));
}

}  // namespace qbc
