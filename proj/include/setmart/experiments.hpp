#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setmart/io.hpp"
#include "setmart/process.hpp"
#include "setmart/represent.hpp"

namespace setmart {

enum class ExitCode : int { kSuccess = 0, kOperational = 1, kAnalytical = 2 };

struct ExperimentConfig {
  int depth = 8;
  double horizon = 1.0;
  std::string example = "interval";
  int lambda_grid = 3;
  int ball_grid = 16;
  double tol = 1e-9;
  std::string out_dir;
  std::uint64_t seed = 0;
  /// Integrands of the examples: one value means constant, otherwise one
  /// value per non-terminal node in flat order.
  std::vector<double> u = {1.0};
  std::vector<double> v = {2.0};
};

/// Throws ConfigError on invalid settings.
void validate(const ExperimentConfig& cfg);

/// Overlays the keys present in a JSON config onto `base`.
ExperimentConfig config_from_json(const io::Json& j, ExperimentConfig base = {});
io::Json to_json(const ExperimentConfig& cfg);

/// Scalar integrand from a constant or a per-node table.
Integrand scalar_integrand(int depth, const std::vector<double>& values);

struct ExampleRun {
  SetProcess process;
  ClassifyReport classification;
  HypothesisReport hypothesis;
  std::optional<Reconstruction> reconstruction;
  std::string failure;
  io::Json report;
  ExitCode exit_code = ExitCode::kSuccess;
};

/// Lambda-mixtures of two integrals: F_t = hull{l f_t + (1 - l) g_t}.
ExampleRun run_example_interval(const ExperimentConfig& cfg);

/// Scaled ball: F_t = hull{eta_t b : b in grid}, eta = int u dB.
ExampleRun run_example_ball(const ExperimentConfig& cfg);

/// Rational points of the closed unit disk: three quarters on the circle,
/// the rest on the circle of radius 1/2.
std::vector<Point> ball_grid(int count);

/// Upper bound on sup_{x in unit disk} min_b |x - b|, from a projected
/// sampling lattice of spacing `spacing` plus its covering slack.
double covering_radius(const std::vector<Point>& grid, double spacing = 1.0 / 256.0);

struct CommandResult {
  io::Json report;
  ExitCode exit_code = ExitCode::kSuccess;
  std::optional<IntegrandFamily> family;
};

/// Classification plus degeneracy and Steiner diagnostics for martingales.
CommandResult run_check(const SetProcess& f, double tol);

/// Picks the representation matching the initial value and verdict.
CommandResult run_represent(const SetProcess& f, double tol);

/// Writes process.json, family.json, report.json and intervals.csv (d = 1)
/// into `dir` (created if needed).
void write_example_outputs(const ExampleRun& run, const std::string& dir);

std::string interval_csv(const SetProcess& f);

}  // namespace setmart
