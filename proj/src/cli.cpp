#include "ksync/cli.hpp"

#include <CLI11.hpp>

#include "ksync/io.hpp"

namespace ksync {

namespace {

struct GraphSource {
  std::string code_text;
  std::string graph_path;

  void add_options(CLI::App* cmd, bool code_only = false) {
    auto* code_opt =
        cmd->add_option("--code", code_text, "construction code (0/1 string)");
    if (code_only) {
      code_opt->required();
      return;
    }
    auto* graph_opt =
        cmd->add_option("--graph", graph_path, "edge-list file");
    code_opt->excludes(graph_opt);
    graph_opt->excludes(code_opt);
  }

  bool provided() const { return !code_text.empty() || !graph_path.empty(); }

  Graph load() const {
    if (!code_text.empty()) {
      return build_threshold(ThresholdCode::parse(code_text));
    }
    return read_graph(graph_path);
  }

  std::string id() const { return code_text.empty() ? graph_path : code_text; }
};

double density(const Graph& g) {
  long pairs = static_cast<long>(g.vertex_count()) * (g.vertex_count() - 1) / 2;
  return pairs == 0 ? 0.0 : static_cast<double>(g.edge_count()) / pairs;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Kuramoto landscapes, certificates, and ensembles on threshold graphs"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "build a threshold graph from a code");
  std::string gen_code;
  std::string gen_out;
  gen->add_option("--code", gen_code, "construction code")->required();
  gen->add_option("--out", gen_out, "write edge list here");

  // recognize
  auto* recognize = app.add_subcommand("recognize", "recover a construction code");
  std::string recognize_path;
  recognize->add_option("--graph", recognize_path, "edge-list file")->required();

  // landscape
  auto* landscape_cmd = app.add_subcommand("landscape", "classify a configuration");
  GraphSource landscape_src;
  landscape_src.add_options(landscape_cmd);
  std::string landscape_theta;
  Tolerances tol;
  landscape_cmd->add_option("--theta", landscape_theta, "phase file")->required();
  landscape_cmd->add_option("--grad-tol", tol.grad, "equilibrium gradient tolerance");
  landscape_cmd->add_option("--psd-tol", tol.psd, "eigenvalue zero tolerance");
  landscape_cmd->add_option("--sync-tol", tol.sync, "synchrony diameter tolerance");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "integrate the gradient flow");
  GraphSource simulate_src;
  simulate_src.add_options(simulate);
  std::string simulate_theta0;
  std::string simulate_out;
  IntegrationParams sim_params;
  simulate->add_option("--theta0", simulate_theta0, "initial phase file")->required();
  simulate->add_option("--dt", sim_params.dt, "fixed step size");
  simulate->add_option("--tmax", sim_params.t_max, "time horizon");
  simulate->add_option("--stop-grad", sim_params.stop_grad_norm,
                       "gradient norm stopping threshold");
  simulate->add_option("--record-every", sim_params.record_every,
                       "record every k-th step");
  simulate->add_option("--out", simulate_out, "trajectory CSV path")->required();

  // ensemble
  auto* ensemble_cmd = app.add_subcommand("ensemble", "random-start convergence sweep");
  GraphSource ensemble_src;
  ensemble_src.add_options(ensemble_cmd);
  int trials = 100;
  uint64_t master_seed = 0;
  double ensemble_sync_tol = 1e-6;
  int threads = 0;
  IntegrationParams ens_params;
  ensemble_cmd->add_option("--trials", trials, "number of trials");
  ensemble_cmd->add_option("--seed", master_seed, "master seed");
  ensemble_cmd->add_option("--dt", ens_params.dt, "fixed step size");
  ensemble_cmd->add_option("--tmax", ens_params.t_max, "time horizon");
  ensemble_cmd->add_option("--stop-grad", ens_params.stop_grad_norm,
                           "gradient norm stopping threshold");
  ensemble_cmd->add_option("--sync-tol", ensemble_sync_tol,
                           "diameter below which a trial counts synchronized");
  ensemble_cmd->add_option("--threads", threads, "worker threads (0 = auto)");

  // equilibria
  auto* equilibria_cmd = app.add_subcommand("equilibria", "multistart equilibrium catalog");
  GraphSource equilibria_src;
  equilibria_src.add_options(equilibria_cmd);
  int starts = 500;
  uint64_t eq_seed = 0;
  double eq_tol = 1e-10;
  int max_iter = 100;
  equilibria_cmd->add_option("--starts", starts, "random starts");
  equilibria_cmd->add_option("--seed", eq_seed, "master seed");
  equilibria_cmd->add_option("--tol", eq_tol, "gradient norm tolerance");
  equilibria_cmd->add_option("--max-iter", max_iter, "Newton iteration cap");

  // certify
  auto* certify_cmd = app.add_subcommand("certify", "emit and verify a synchronization certificate");
  std::string certify_code;
  certify_cmd->add_option("--code", certify_code, "construction code")->required();

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "audit a configuration against a certificate");
  std::string audit_code;
  std::string audit_theta;
  double audit_tol = 1e-6;
  audit_cmd->add_option("--code", audit_code, "construction code")->required();
  audit_cmd->add_option("--theta", audit_theta, "phase file")->required();
  audit_cmd->add_option("--tol", audit_tol, "phase equality tolerance");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ERR USAGE: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) {
      Graph g = build_threshold(ThresholdCode::parse(gen_code));
      if (!gen_out.empty()) write_graph(g, gen_out);
      out << "n=" << g.vertex_count() << " |E|=" << g.edge_count()
          << " density=" << format_double(density(g)) << "\n";
    } else if (recognize->parsed()) {
      ThresholdCode code;
      try {
        code = recognize_threshold(read_graph(recognize_path));
      } catch (const DomainError& e) {
        if (e.code() == ErrorCode::NotThreshold) out << "NOT_THRESHOLD\n";
        throw;
      }
      out << code.str() << "\n";
    } else if (landscape_cmd->parsed()) {
      if (!landscape_src.provided()) {
        err << "ERR USAGE: landscape needs --graph or --code\n";
        return 2;
      }
      Graph g = landscape_src.load();
      PhaseConfig theta = read_phase_config(landscape_theta);
      out << to_json(classify(g, theta, tol)) << "\n";
    } else if (simulate->parsed()) {
      if (!simulate_src.provided()) {
        err << "ERR USAGE: simulate needs --graph or --code\n";
        return 2;
      }
      Graph g = simulate_src.load();
      PhaseConfig theta0 = read_phase_config(simulate_theta0);
      Trajectory traj = integrate(g, theta0, sim_params);
      write_trajectory_csv(traj, std::filesystem::path(simulate_out));
      const PhaseConfig& last = traj.states.back();
      out << "termination=" << to_string(traj.termination)
          << " t=" << format_double(traj.times.back())
          << " diameter=" << format_double(circular_diameter(last))
          << " energy=" << format_double(energy(g, last)) << "\n";
    } else if (ensemble_cmd->parsed()) {
      if (!ensemble_src.provided()) {
        err << "ERR USAGE: ensemble needs --graph or --code\n";
        return 2;
      }
      Graph g = ensemble_src.load();
      out << to_json(ensemble(g, trials, master_seed, ens_params,
                              ensemble_sync_tol, threads))
          << "\n";
    } else if (equilibria_cmd->parsed()) {
      if (!equilibria_src.provided()) {
        err << "ERR USAGE: equilibria needs --graph or --code\n";
        return 2;
      }
      Graph g = equilibria_src.load();
      out << to_json(multistart_search(g, starts, eq_seed, eq_tol, max_iter,
                                       equilibria_src.id()))
          << "\n";
    } else if (certify_cmd->parsed()) {
      ThresholdCode code = ThresholdCode::parse(certify_code);
      Certificate cert = certify(code);
      VerificationReport verification =
          verify_certificate(build_threshold(code), cert);
      out << "{\"certificate\":" << to_json(cert)
          << ",\"verification\":" << to_json(verification) << "}\n";
    } else if (audit_cmd->parsed()) {
      ThresholdCode code = ThresholdCode::parse(audit_code);
      Graph g = build_threshold(code);
      Certificate cert = certify(code);
      PhaseConfig theta = read_phase_config(audit_theta);
      out << to_json(audit_config(g, cert, theta, audit_tol)) << "\n";
    }
  } catch (const DomainError& e) {
    err << "ERR " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ksync
