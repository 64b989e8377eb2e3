#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include "ksync/certificate.hpp"
#include "ksync/dynamics.hpp"
#include "ksync/equilibria.hpp"
#include "ksync/graph.hpp"
#include "ksync/landscape.hpp"

namespace ksync {

// Edge-list text format: first line "n <vertex count>", then one "u v" line
// per edge, 1-indexed. Phase files carry one angle (radians) per line. All
// JSON is emitted with fixed key order and floats at 17 significant digits,
// so byte-identical inputs produce byte-identical outputs.

/// Shortest exact decimal form used for every float we emit ("%.17g").
std::string format_double(double x);

Graph read_graph(const std::filesystem::path& path);
void write_graph(const Graph& g, const std::filesystem::path& path);

PhaseConfig read_phase_config(const std::filesystem::path& path);
void write_phase_config(const PhaseRef& theta, const std::filesystem::path& path);

void write_trajectory_csv(const Trajectory& traj, std::ostream& out);
void write_trajectory_csv(const Trajectory& traj, const std::filesystem::path& path);

std::string to_json(const LandscapeReport& report);
std::string to_json(const EnsembleReport& report);
std::string to_json(const EquilibriumCatalog& catalog);
std::string to_json(const Certificate& cert);
std::string to_json(const VerificationReport& report);
std::string to_json(const AuditReport& report);

}  // namespace ksync
