#include "ksync/certificate.hpp"

#include <algorithm>

namespace ksync {

namespace {

// Sorted-vector set helpers; vertex sets stay small at desk scale.

bool contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

bool subset_of(const std::vector<int>& inner, const std::vector<int>& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> tmp;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(tmp));
  return tmp.empty();
}

bool in_range(const std::vector<int>& set, int n) {
  return std::all_of(set.begin(), set.end(),
                     [n](int v) { return v >= 0 && v < n; });
}

std::vector<int> gather(const std::vector<std::vector<int>>& blocks, int first,
                        int last) {
  std::vector<int> out;
  for (int i = first; i <= last; ++i) {
    out.insert(out.end(), blocks[i].begin(), blocks[i].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

StepCheck fail(const std::string& reason) { return {false, reason}; }

StepCheck check_structure(const Graph& g, const CertStep& step,
                          const std::vector<int>& synced_before) {
  const int n = g.vertex_count();
  std::vector<int> newly;

  switch (step.kind) {
    case StepKind::BaseClosedTwins: {
      if (!in_range(step.twins, n)) return fail("VertexOutOfRange");
      if (step.twins.empty()) return fail("EmptySet");
      auto reference = g.closed_neighborhood(step.twins.front());
      for (int v : step.twins) {
        if (g.closed_neighborhood(v) != reference) return fail("TwinsNotClosed");
      }
      newly = step.twins;
      break;
    }
    case StepKind::TwinAttachment: {
      if (!in_range(step.attached, n) || !in_range(step.target, n)) {
        return fail("VertexOutOfRange");
      }
      if (step.attached.empty()) return fail("EmptySet");
      if (!subset_of(step.target, synced_before)) return fail("TargetNotSynced");
      for (int a : step.attached) {
        if (!subset_of(g.neighbors(a), step.target)) {
          return fail("AttachedNeighborhoodNotInTarget");
        }
      }
      newly = step.attached;
      break;
    }
    case StepKind::PendantExtension: {
      if (!in_range(step.pendant, n) || !in_range(step.core, n) ||
          !in_range(step.extension, n) || !in_range(step.external, n)) {
        return fail("VertexOutOfRange");
      }
      if (step.extension.empty()) return fail("EmptySet");
      if (!disjoint(step.pendant, step.core) ||
          !disjoint(step.pendant, step.extension) ||
          !disjoint(step.pendant, step.external) ||
          !disjoint(step.core, step.extension) ||
          !disjoint(step.core, step.external) ||
          !disjoint(step.extension, step.external)) {
        return fail("SetsOverlap");
      }
      for (int v : step.pendant) {
        if (!subset_of(g.neighbors(v), step.core)) {
          return fail("PendantNeighborhoodNotInCore");
        }
      }
      std::vector<int> clique = set_union(step.core, step.extension);
      for (std::size_t i = 0; i < clique.size(); ++i) {
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
          if (!g.adjacent(clique[i], clique[j])) return fail("CliqueMissingEdge");
        }
      }
      std::vector<int> allowed =
          set_union(set_union(clique, step.pendant), step.external);
      for (int v : clique) {
        for (int u : step.external) {
          if (!g.adjacent(v, u)) return fail("ExternalMismatch");
        }
        for (int u : g.neighbors(v)) {
          if (!contains(allowed, u)) return fail("ExternalMismatch");
        }
      }
      std::vector<int> hypothesis = set_union(step.pendant, step.core);
      if (!subset_of(hypothesis, synced_before)) {
        return fail("PendantCoreNotSynced");
      }
      newly = step.extension;
      break;
    }
  }

  std::vector<int> expected = set_union(synced_before, newly);
  if (step.synced_after != expected) return fail("SyncedAfterMismatch");
  if (expected.size() <= synced_before.size()) return fail("NoProgress");
  return {true, ""};
}

}  // namespace

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::BaseClosedTwins: return "BaseClosedTwins";
    case StepKind::TwinAttachment: return "TwinAttachment";
    case StepKind::PendantExtension: return "PendantExtension";
  }
  return "?";
}

Certificate certify(const ThresholdCode& code) {
  if (code.vertex_count() < 2) {
    throw DomainError(ErrorCode::EmptyGraph,
                      "certificates need at least two vertices");
  }
  if (!code.connected()) {
    throw DomainError(ErrorCode::Disconnected,
                      "only connected codes admit certificates");
  }

  BlockStructure blocks = block_decomposition(code);
  const auto& iso = blocks.isolated_blocks;    // I_1..I_k
  const auto& dom = blocks.dominating_blocks;  // U_1..U_k
  const int k = blocks.block_count();

  Certificate cert;
  cert.code = code;
  std::vector<int> synced;

  auto push_base = [&](const std::vector<int>& twins) {
    CertStep step;
    step.kind = StepKind::BaseClosedTwins;
    step.twins = twins;
    synced = set_union(synced, twins);
    step.synced_after = synced;
    cert.steps.push_back(std::move(step));
  };
  auto push_attach = [&](const std::vector<int>& attached,
                         const std::vector<int>& target) {
    CertStep step;
    step.kind = StepKind::TwinAttachment;
    step.attached = attached;
    step.target = target;
    synced = set_union(synced, attached);
    step.synced_after = synced;
    cert.steps.push_back(std::move(step));
  };

  // Last dominating block first, then walk the construction backwards: each
  // isolated block attaches to the dominating blocks above it, and a pendant
  // extension pulls in the next dominating block below.
  push_base(dom[k - 1]);
  for (int m = 1; m <= k - 1; ++m) {
    push_attach(iso[k - m], gather(dom, k - m, k - 1));

    CertStep step;
    step.kind = StepKind::PendantExtension;
    step.pendant = gather(iso, k - m, k - 1);
    step.core = gather(dom, k - m, k - 1);
    step.extension = dom[k - m - 1];
    step.external = set_union(gather(iso, 0, k - m - 1),
                              k - m - 2 >= 0 ? gather(dom, 0, k - m - 2)
                                             : std::vector<int>{});
    synced = set_union(synced, step.extension);
    step.synced_after = synced;
    cert.steps.push_back(std::move(step));
  }
  push_attach(iso[0], gather(dom, 0, k - 1));

  return cert;
}

StepCheck check_step_detail(const Graph& g, const CertStep& step,
                            const std::vector<int>& synced_before) {
  return check_structure(g, step, synced_before);
}

bool check_step(const Graph& g, const CertStep& step,
                const std::vector<int>& synced_before) {
  return check_structure(g, step, synced_before).pass;
}

VerificationReport verify_certificate(const Graph& g, const Certificate& cert) {
  if (g.vertex_count() != cert.code.vertex_count()) {
    throw DomainError(ErrorCode::GraphMismatch,
                      "graph has " + std::to_string(g.vertex_count()) +
                          " vertices, code describes " +
                          std::to_string(cert.code.vertex_count()));
  }

  VerificationReport report;
  report.monotone = true;
  std::vector<int> synced;
  for (const CertStep& step : cert.steps) {
    report.steps.push_back(check_step_detail(g, step, synced));
    if (!subset_of(synced, step.synced_after) ||
        step.synced_after.size() <= synced.size()) {
      report.monotone = false;
    }
    synced = step.synced_after;
  }

  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
  report.complete_cover = synced == all;
  if (!report.complete_cover && !report.steps.empty() &&
      report.steps.back().pass) {
    report.steps.back() = fail("IncompleteCover");
  }

  report.pass = report.monotone && report.complete_cover &&
                std::all_of(report.steps.begin(), report.steps.end(),
                            [](const StepCheck& s) { return s.pass; });
  return report;
}

AuditReport audit_config(const Graph& g, const Certificate& cert,
                         const PhaseRef& theta, double tol) {
  if (g.vertex_count() != cert.code.vertex_count()) {
    throw DomainError(ErrorCode::GraphMismatch,
                      "graph and certificate vertex counts differ");
  }
  LandscapeReport landscape = classify(g, theta);
  if (landscape.classification == ConfigClass::NotEquilibrium) {
    throw DomainError(ErrorCode::NotEquilibrium,
                      "configuration is not an equilibrium (gradient norm " +
                          std::to_string(landscape.gradient_norm) + ")");
  }

  AuditReport report;
  report.pass = true;
  for (const CertStep& step : cert.steps) {
    AuditStep audit;
    double diameter = 0.0;
    for (std::size_t i = 0; i < step.synced_after.size(); ++i) {
      for (std::size_t j = i + 1; j < step.synced_after.size(); ++j) {
        diameter = std::max(diameter,
                            circular_distance(theta[step.synced_after[i]],
                                              theta[step.synced_after[j]]));
      }
    }
    audit.max_deviation = diameter;
    audit.pass = diameter < tol;
    report.pass = report.pass && audit.pass;
    report.steps.push_back(audit);
  }
  return report;
}

}  // namespace ksync
