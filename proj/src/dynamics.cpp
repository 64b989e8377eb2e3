#include "ksync/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "ksync/rng.hpp"

namespace ksync {

namespace {

void require_dimension(const Graph& g, const PhaseRef& theta) {
  if (theta.size() != g.vertex_count()) {
    throw DomainError(ErrorCode::DimensionMismatch,
                      "config size does not match vertex count");
  }
}

// Right-hand side of the flow: the negated energy gradient.
Eigen::VectorXd vector_field(const Graph& g, const PhaseRef& theta) {
  Eigen::VectorXd f = Eigen::VectorXd::Zero(theta.size());
  for (int u = 0; u < g.vertex_count(); ++u) {
    double s = 0.0;
    for (int v : g.neighbors(u)) s += std::sin(theta[v] - theta[u]);
    f[u] = s;
  }
  return f;
}

PhaseConfig rk4_step_with_k1(const Graph& g, const PhaseRef& theta, double dt,
                             const Eigen::VectorXd& k1) {
  Eigen::VectorXd k2 = vector_field(g, theta + 0.5 * dt * k1);
  Eigen::VectorXd k3 = vector_field(g, theta + 0.5 * dt * k2);
  Eigen::VectorXd k4 = vector_field(g, theta + dt * k3);
  return theta + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void validate(const IntegrationParams& p) {
  if (!(p.dt > 0.0)) {
    throw DomainError(ErrorCode::InvalidParameters, "dt must be positive");
  }
  if (p.dt > 0.1) {
    throw DomainError(ErrorCode::InvalidParameters, "dt capped at 0.1");
  }
  if (p.t_max / p.dt > 1e8) {
    throw DomainError(ErrorCode::InvalidParameters, "t_max/dt exceeds 1e8 steps");
  }
  if (p.record_every < 1) {
    throw DomainError(ErrorCode::InvalidParameters, "record_every must be >= 1");
  }
}

struct FinalState {
  PhaseConfig theta;
  Termination termination;
};

// Recorder receives (t, state) for the initial state, every record_every-th
// step, and the terminal state.
template <typename Recorder>
FinalState integrate_core(const Graph& g, const PhaseRef& theta0,
                          const IntegrationParams& p, Recorder&& record) {
  require_dimension(g, theta0);
  validate(p);
  if (!theta0.allFinite()) {
    throw DomainError(ErrorCode::NonFiniteState, "initial state not finite");
  }

  PhaseConfig theta = theta0;
  record(0.0, theta);
  long last_recorded = 0;
  for (long step = 0;; ++step) {
    double t = step * p.dt;
    Eigen::VectorXd k1 = vector_field(g, theta);
    if (k1.norm() < p.stop_grad_norm) {
      if (step != last_recorded) record(t, theta);
      return {std::move(theta), Termination::GradientVanished};
    }
    if (t >= p.t_max) {
      if (step != last_recorded) record(t, theta);
      return {std::move(theta), Termination::TimeExhausted};
    }
    theta = rk4_step_with_k1(g, theta, p.dt, k1);
    if (!theta.allFinite()) {
      throw DomainError(ErrorCode::NonFiniteState,
                        "state blew up at t=" + std::to_string(t) +
                            "; reduce dt");
    }
    if ((step + 1) % p.record_every == 0) {
      record((step + 1) * p.dt, theta);
      last_recorded = step + 1;
    }
  }
}

}  // namespace

const char* to_string(Termination t) {
  switch (t) {
    case Termination::GradientVanished: return "GradientVanished";
    case Termination::TimeExhausted: return "TimeExhausted";
    case Termination::NonFiniteState: return "NonFiniteState";
  }
  return "?";
}

PhaseConfig rk4_step(const Graph& g, const PhaseRef& theta, double dt) {
  require_dimension(g, theta);
  if (!(dt > 0.0)) {
    throw DomainError(ErrorCode::InvalidParameters, "dt must be positive");
  }
  return rk4_step_with_k1(g, theta, dt, vector_field(g, theta));
}

Trajectory integrate(const Graph& g, const PhaseRef& theta0,
                     const IntegrationParams& params) {
  Trajectory traj;
  auto final_state = integrate_core(
      g, theta0, params, [&traj](double t, const PhaseConfig& state) {
        traj.times.push_back(t);
        traj.states.push_back(state);
      });
  traj.termination = final_state.termination;
  return traj;
}

PhaseConfig random_config(int n, uint64_t seed) {
  if (n < 1) {
    throw DomainError(ErrorCode::InvalidParameters, "need at least one vertex");
  }
  PhaseConfig theta(n);
  for (int i = 0; i < n; ++i) {
    // pi - 2*pi*u lies in (-pi, pi] for u in [0, 1)
    theta[i] = std::numbers::pi * (1.0 - 2.0 * uniform01(seed, i));
  }
  return theta;
}

EnsembleReport ensemble(const Graph& g, int trials, uint64_t master_seed,
                        const IntegrationParams& params, double sync_tol,
                        int threads) {
  if (trials < 1) {
    throw DomainError(ErrorCode::InvalidParameters, "need at least one trial");
  }
  validate(params);

  EnsembleReport report;
  report.trials = trials;
  report.seed = master_seed;
  report.per_trial.resize(static_cast<std::size_t>(trials));

  auto run_trial = [&](int t) {
    TrialRecord rec;
    rec.seed = derive_seed(master_seed, static_cast<uint64_t>(t));
    try {
      PhaseConfig theta0 = random_config(g.vertex_count(), rec.seed);
      auto fin = integrate_core(g, theta0, params, [](double, const PhaseConfig&) {});
      rec.termination = fin.termination;
      rec.final_diameter = circular_diameter(fin.theta);
      rec.final_energy = energy(g, fin.theta);
    } catch (const DomainError& e) {
      if (e.code() != ErrorCode::NonFiniteState) throw;
      rec.termination = Termination::NonFiniteState;
      rec.final_diameter = std::nan("");
      rec.final_energy = std::nan("");
    }
    report.per_trial[static_cast<std::size_t>(t)] = rec;
  };

  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, trials));
  if (workers == 1) {
    for (int t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        try {
          for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) {
            run_trial(t);
          }
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  for (const TrialRecord& rec : report.per_trial) {
    if (rec.termination == Termination::GradientVanished &&
        rec.final_diameter < sync_tol) {
      ++report.synchronized_count;
    }
  }
  return report;
}

}  // namespace ksync
