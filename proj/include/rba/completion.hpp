#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rba/compositions.hpp"

namespace rba {

enum class CompletionStatus { saturated_up_to_bound, budget_exhausted };

std::string to_string(CompletionStatus s);

struct CompletionBounds {
  std::size_t degree_bound = 0;
  std::size_t probe_bound = 0;
  std::size_t max_new_rules = 0;
};

/// A rule adjoined during completion, with enough provenance to replay it:
/// rule = normalizer · reduce(source.h) — every step names a context applied
/// to a rule already in the system, so the adjunction stays inside the ideal.
struct AdjoinedRule {
  std::string label;
  Poly rule;
  Ambiguity source;
  std::vector<TraceStep> reduction;
  Scalar normalizer;
};

struct InterreduceEvent {
  std::string label;
  Poly before;
  Poly after;  // zero when the rule was dropped
  std::vector<TraceStep> trace;
  bool dropped = false;
};

struct CompletionResult {
  RuleSystem system;
  CompletionStatus status = CompletionStatus::saturated_up_to_bound;
  CompletionBounds bounds;
  std::size_t sweeps = 0;
  std::size_t ambiguities_examined = 0;
  std::size_t skipped_over_degree = 0;  // ambient word above the degree bound
  std::vector<AdjoinedRule> adjoined;
  std::vector<InterreduceEvent> interreductions;
};

/// Bounded Shirshov completion: sweep the ambiguity enumeration, reduce each
/// composition modulo the current rules, adjoin nonzero normal forms (monic,
/// ordered by ambient word ascending), inter-reduce, and repeat until a sweep
/// adjoins nothing (saturated) or max_new_rules is hit (budget exhausted).
/// Ambiguities whose ambient word exceeds degree_bound are skipped and
/// counted, so saturation is always a claim up to the bound.
CompletionResult shirshov_complete(const RuleSystem& R, std::size_t degree_bound,
                                   std::size_t probe_bound, std::size_t max_new_rules);

/// Normalize a system: no rule's leading word reducible by another rule,
/// every tail fully reduced, duplicates dropped; the ideal is unchanged and
/// each change is traced into *log when given.
RuleSystem interreduce(const RuleSystem& S, std::vector<InterreduceEvent>* log = nullptr);

/// Human-readable run summary: status, counts, adjoined rules and
/// inter-reduction events.
std::string completion_to_text(const CompletionResult& r);

/// Checkpoint: the completed system plus bounds and status, reloadable to
/// resume with larger budgets.
std::string completion_to_json(const CompletionResult& r);

struct CompletionCheckpoint {
  RuleSystem system;
  CompletionBounds bounds;
  CompletionStatus status = CompletionStatus::saturated_up_to_bound;
};

CompletionCheckpoint completion_from_json(const std::string& text);

}  // namespace rba
