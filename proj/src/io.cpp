#include "ksync/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ksync {

namespace {

[[noreturn]] void malformed(const std::filesystem::path& path, int line,
                            const std::string& what) {
  throw DomainError(ErrorCode::MalformedFile,
                    path.string() + ":" + std::to_string(line) + ": " + what);
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw DomainError(ErrorCode::MalformedFile,
                      "cannot open " + path.string() + " for writing");
  }
  return out;
}

// Minimal JSON emitter with caller-controlled key order; floats go through
// format_double so identical values serialize identically.
class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  void begin_object() {
    comma();
    out_ += '{';
    first_ = true;
  }
  void end_object() {
    out_ += '}';
    first_ = false;
  }
  void begin_array() {
    comma();
    out_ += '[';
    first_ = true;
  }
  void end_array() {
    out_ += ']';
    first_ = false;
  }

  void key(const char* name) {
    comma();
    out_ += '"';
    out_ += name;
    out_ += "\":";
    first_ = true;  // suppress comma before the value
  }

  void value(double x) {
    comma();
    if (std::isnan(x)) {
      out_ += "null";
    } else {
      out_ += format_double(x);
    }
  }
  void value(long long x) {
    comma();
    out_ += std::to_string(x);
  }
  void value(unsigned long long x) {
    comma();
    out_ += std::to_string(x);
  }
  void value(bool b) {
    comma();
    out_ += b ? "true" : "false";
  }
  void value(const std::string& s) {
    comma();
    out_ += '"';
    out_ += s;  // emitted strings are identifiers; no escaping needed
    out_ += '"';
  }
  void null() {
    comma();
    out_ += "null";
  }

  void int_array(const std::vector<int>& values, int offset = 0) {
    begin_array();
    for (int v : values) value(static_cast<long long>(v + offset));
    end_array();
  }
  void double_array(const Eigen::VectorXd& values) {
    begin_array();
    for (Eigen::Index i = 0; i < values.size(); ++i) value(values[i]);
    end_array();
  }

 private:
  void comma() {
    if (!first_) out_ += ',';
    first_ = false;
  }

  std::string out_;
  bool first_ = true;
};

void emit_certificate(JsonWriter& w, const Certificate& cert) {
  w.begin_object();
  w.key("code");
  w.value(cert.code.str());
  w.key("steps");
  w.begin_array();
  for (const CertStep& step : cert.steps) {
    w.begin_object();
    w.key("kind");
    w.value(std::string(to_string(step.kind)));
    w.key("sets");
    w.begin_object();
    switch (step.kind) {
      case StepKind::BaseClosedTwins:
        w.key("twins");
        w.int_array(step.twins, 1);
        break;
      case StepKind::TwinAttachment:
        w.key("attached");
        w.int_array(step.attached, 1);
        w.key("target");
        w.int_array(step.target, 1);
        break;
      case StepKind::PendantExtension:
        w.key("pendant");
        w.int_array(step.pendant, 1);
        w.key("core");
        w.int_array(step.core, 1);
        w.key("extension");
        w.int_array(step.extension, 1);
        w.key("external");
        w.int_array(step.external, 1);
        break;
    }
    w.end_object();
    w.key("synced_after");
    w.int_array(step.synced_after, 1);
    w.end_object();
  }
  w.end_array();
  w.end_object();
}

}  // namespace

std::string format_double(double x) {
  if (x == 0.0) return "0";  // avoid "-0"
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Graph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError(ErrorCode::MalformedFile, "cannot open " + path.string());
  }
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line)) malformed(path, 1, "missing header");
  ++line_no;
  std::istringstream header(line);
  std::string tag;
  int n = 0;
  if (!(header >> tag >> n) || tag != "n" || n < 1) {
    malformed(path, line_no, "header must be \"n <vertex count>\"");
  }
  std::string trailing;
  if (header >> trailing) malformed(path, line_no, "trailing tokens in header");

  Graph g(n);
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    int u = 0, v = 0;
    if (!(row >> u >> v)) malformed(path, line_no, "expected \"u v\"");
    if (row >> trailing) malformed(path, line_no, "trailing tokens after edge");
    if (u < 1 || v < 1 || u > n || v > n) {
      malformed(path, line_no, "vertex out of range (vertices are 1-indexed)");
    }
    if (u == v) malformed(path, line_no, "self-loop");
    if (g.adjacent(u - 1, v - 1)) malformed(path, line_no, "duplicate edge");
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) {
    out << u + 1 << " " << v + 1 << "\n";
  }
}

PhaseConfig read_phase_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError(ErrorCode::MalformedFile, "cannot open " + path.string());
  }
  std::vector<double> angles;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    double a = 0.0;
    std::string trailing;
    if (!(row >> a)) malformed(path, line_no, "expected one angle in radians");
    if (row >> trailing) malformed(path, line_no, "trailing tokens after angle");
    angles.push_back(a);
  }
  if (angles.empty()) malformed(path, 1, "no angles in file");
  return Eigen::Map<PhaseConfig>(angles.data(),
                                 static_cast<Eigen::Index>(angles.size()));
}

void write_phase_config(const PhaseRef& theta, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    out << format_double(theta[i]) << "\n";
  }
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  const Eigen::Index n = traj.states.empty() ? 0 : traj.states.front().size();
  out << "t";
  for (Eigen::Index i = 0; i < n; ++i) out << ",theta_" << i + 1;
  out << "\n";
  for (std::size_t row = 0; row < traj.times.size(); ++row) {
    out << format_double(traj.times[row]);
    for (Eigen::Index i = 0; i < n; ++i) {
      out << "," << format_double(traj.states[row][i]);
    }
    out << "\n";
  }
}

void write_trajectory_csv(const Trajectory& traj,
                          const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  write_trajectory_csv(traj, out);
}

std::string to_json(const LandscapeReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("energy");
  w.value(report.energy);
  w.key("gradient_norm");
  w.value(report.gradient_norm);
  w.key("mu");
  w.double_array(report.mu);
  w.key("min_eig");
  w.value(report.min_hessian_eigenvalue);
  w.key("class");
  w.value(std::string(to_string(report.classification)));
  w.key("witness");
  if (report.witness) {
    w.double_array(*report.witness);
  } else {
    w.null();
  }
  w.end_object();
  return w.take();
}

std::string to_json(const EnsembleReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("trials");
  w.value(static_cast<long long>(report.trials));
  w.key("synchronized_count");
  w.value(static_cast<long long>(report.synchronized_count));
  w.key("seed");
  w.value(static_cast<unsigned long long>(report.seed));
  w.key("per_trial");
  w.begin_array();
  for (const TrialRecord& rec : report.per_trial) {
    w.begin_object();
    w.key("seed");
    w.value(static_cast<unsigned long long>(rec.seed));
    w.key("termination");
    w.value(std::string(to_string(rec.termination)));
    w.key("final_diameter");
    w.value(rec.final_diameter);
    w.key("final_energy");
    w.value(rec.final_energy);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.take();
}

std::string to_json(const EquilibriumCatalog& catalog) {
  JsonWriter w;
  w.begin_object();
  w.key("graph");
  w.value(catalog.graph_id);
  w.key("starts");
  w.value(static_cast<long long>(catalog.starts));
  w.key("seed");
  w.value(static_cast<unsigned long long>(catalog.seed));
  w.key("failures");
  w.value(static_cast<long long>(catalog.failures));
  w.key("equilibria");
  w.begin_array();
  for (const Equilibrium& eq : catalog.equilibria) {
    w.begin_object();
    w.key("angles");
    w.double_array(eq.config);
    w.key("class");
    w.value(std::string(to_string(eq.classification)));
    w.key("residual");
    w.value(eq.residual);
    w.key("basin_hits");
    w.value(static_cast<long long>(eq.basin_hits));
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.take();
}

std::string to_json(const Certificate& cert) {
  JsonWriter w;
  emit_certificate(w, cert);
  return w.take();
}

std::string to_json(const VerificationReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("pass");
  w.value(report.pass);
  w.key("monotone");
  w.value(report.monotone);
  w.key("complete_cover");
  w.value(report.complete_cover);
  w.key("steps");
  w.begin_array();
  for (const StepCheck& step : report.steps) {
    w.begin_object();
    w.key("pass");
    w.value(step.pass);
    w.key("reason");
    w.value(step.reason);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.take();
}

std::string to_json(const AuditReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("pass");
  w.value(report.pass);
  w.key("steps");
  w.begin_array();
  for (const AuditStep& step : report.steps) {
    w.begin_object();
    w.key("pass");
    w.value(step.pass);
    w.key("max_deviation");
    w.value(step.max_deviation);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.take();
}

}  // namespace ksync
