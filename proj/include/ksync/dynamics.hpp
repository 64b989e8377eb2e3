#pragma once

#include <cstdint>
#include <vector>

#include "ksync/landscape.hpp"

namespace ksync {

struct IntegrationParams {
  double dt = 0.01;             // fixed step; guarded to <= 0.1
  double t_max = 1000.0;        // t_max/dt guarded to <= 1e8
  double stop_grad_norm = 1e-8;
  int record_every = 1;
};

enum class Termination { GradientVanished, TimeExhausted, NonFiniteState };
const char* to_string(Termination t);

struct Trajectory {
  std::vector<double> times;        // strictly increasing, starts at 0
  std::vector<PhaseConfig> states;  // same length as times
  Termination termination = Termination::TimeExhausted;
};

/// One step of the classical 4-stage scheme on d(theta)/dt = -grad E.
PhaseConfig rk4_step(const Graph& g, const PhaseRef& theta, double dt);

/// Fixed-step descent until the gradient norm drops below stop_grad_norm or
/// t_max is reached. Records every record_every-th state plus the initial and
/// final ones. Throws NonFiniteState if the state blows up (dt too large).
Trajectory integrate(const Graph& g, const PhaseRef& theta0,
                     const IntegrationParams& params);

/// i.i.d. uniform angles on (-pi, pi], a pure function of (n, seed).
PhaseConfig random_config(int n, uint64_t seed);

struct TrialRecord {
  uint64_t seed = 0;
  Termination termination = Termination::TimeExhausted;
  double final_diameter = 0.0;  // NaN when the trial blew up
  double final_energy = 0.0;    // NaN when the trial blew up
};

struct EnsembleReport {
  int trials = 0;
  int synchronized_count = 0;
  uint64_t seed = 0;
  std::vector<TrialRecord> per_trial;
};

/// Runs `trials` independent trajectories from random initial conditions.
/// Trial t is seeded from (master_seed, t), so the report is bit-identical
/// across reruns and across any execution schedule; a trial counts as
/// synchronized iff it terminated GradientVanished with circular diameter
/// below sync_tol. threads = 0 picks the hardware concurrency.
EnsembleReport ensemble(const Graph& g, int trials, uint64_t master_seed,
                        const IntegrationParams& params = IntegrationParams{},
                        double sync_tol = 1e-6, int threads = 0);

}  // namespace ksync
