#pragma once

#include <string>
#include <vector>

#include "ksync/graph.hpp"
#include "ksync/landscape.hpp"

namespace ksync {

/// One application of a local synchronization rule. Which set fields are in
/// use depends on the kind:
///   BaseClosedTwins   twins                       (pairwise N[i] = N[j])
///   TwinAttachment    attached, target            (N(a) <= target, target synced)
///   PendantExtension  pendant, core, extension, external
/// Every step carries the synced set it claims to reach.
enum class StepKind { BaseClosedTwins, TwinAttachment, PendantExtension };
const char* to_string(StepKind k);

struct CertStep {
  StepKind kind = StepKind::BaseClosedTwins;
  std::vector<int> twins;
  std::vector<int> attached;
  std::vector<int> target;
  std::vector<int> pendant;    // synced vertices whose neighborhoods sit in core
  std::vector<int> core;       // synced part of the clique
  std::vector<int> extension;  // clique part the step proves synchronous
  std::vector<int> external;   // common neighborhood outside the structure
  std::vector<int> synced_after;
};

struct Certificate {
  ThresholdCode code;
  std::vector<CertStep> steps;
};

struct StepCheck {
  bool pass = false;
  std::string reason;  // empty when pass
};

struct VerificationReport {
  std::vector<StepCheck> steps;
  bool monotone = false;        // synced sets strictly grow
  bool complete_cover = false;  // final synced set is all of V
  bool pass = false;
};

struct AuditStep {
  bool pass = false;
  double max_deviation = 0.0;  // circular diameter over the synced-after set
};

struct AuditReport {
  std::vector<AuditStep> steps;
  bool pass = false;
};

/// Builds the blockwise induction certificate for a connected code: the last
/// dominating block synchronizes as closed twins, then isolated blocks attach
/// and pendant extensions pull in each earlier dominating block, and finally
/// the leading isolated block attaches. Throws Disconnected / EmptyGraph.
Certificate certify(const ThresholdCode& code);

/// Pure graph-theoretic check of one step's preconditions against g and the
/// set synchronized so far; no angles involved.
bool check_step(const Graph& g, const CertStep& step,
                const std::vector<int>& synced_before);

/// check_step with a failure reason.
StepCheck check_step_detail(const Graph& g, const CertStep& step,
                            const std::vector<int>& synced_before);

/// Runs check_step sequentially, threading synced sets; passes iff every step
/// checks out, growth is strictly monotone, and the final set covers V.
/// Throws GraphMismatch when g's vertex count differs from the code's.
VerificationReport verify_certificate(const Graph& g, const Certificate& cert);

/// Checks each step's claimed phase equalities against a configuration: the
/// synced-after set must have circular diameter below tol. Requires theta to
/// be an equilibrium (throws NotEquilibrium otherwise, GraphMismatch on size
/// mismatch). On a non-synchronous configuration the first failing step
/// localizes where the propagation breaks.
AuditReport audit_config(const Graph& g, const Certificate& cert,
                         const PhaseRef& theta, double tol);

}  // namespace ksync
