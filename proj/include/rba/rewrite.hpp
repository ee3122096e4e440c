#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rba/poly.hpp"

namespace rba {

/// One explicit rewrite rule: a monic polynomial whose leading word rewrites
/// to (leading − poly).
struct Rule {
  Poly poly;
  std::string label;

  const Word& leading() const { return poly.leading_word(); }
};

/// A rule system: explicit monic rules in a fixed order, an ambient weight,
/// and optionally the intensional monomial family of bracket-saturated words
/// (every matched monomial rewrites to 0). Immutable once built; sharing a
/// system across threads is safe.
struct RuleSystem {
  std::uint32_t alphabet_size = 0;
  Scalar lambda = 0;
  std::vector<Rule> rules;
  bool has_f3 = false;

  /// Normalizes p monic and appends it. Throws std::invalid_argument on zero.
  void add_rule(Poly p, std::string label = "");
};

/// True iff u contains, at no nesting depth, a contiguous
/// letter·P(letter) or P(letter)·letter pair — the leading-word shapes of the
/// enveloping relations. Words passing this are written Phi1 throughout.
bool in_phi1(const Word& u);

/// Membership in the monomial family F3: every top-level bracket body must be
/// Phi1 and not a single letter, and a bracket-free word needs >= 2 letters.
bool in_f3(const Word& u);

/// A rewrite site: which rule (schema matches use rule_index = -1), the hole
/// context, and the matched occurrence of the rule's leading word.
struct Redex {
  int rule_index;
  StarWord context;
  Word matched;
};

/// First redex of u under the deterministic scan: outermost nesting level
/// first, leftmost start first, explicit rules (in system order) before the
/// schema, schema matches shortest-first. Only contexts passing
/// is_normal_sword fire. nullopt iff u is irreducible.
std::optional<Redex> find_redex(const Word& u, const RuleSystem& S);

/// All redexes of u in the same deterministic order find_redex uses.
std::vector<Redex> all_redexes(const Word& u, const RuleSystem& S);

bool is_irreducible(const Word& u, const RuleSystem& S);

/// One reduction step record: enough to replay the step
/// (delta = coeff · context|_rule) and to audit the bound on the rewritten
/// monomial. before/after snapshots are captured only on request.
struct TraceStep {
  std::string rule_label;
  Poly rule;
  StarWord context;
  Word rewritten;
  Scalar coeff;
  std::optional<Poly> before, after;
};

struct Reduction {
  Poly poly;
  std::vector<TraceStep> trace;
};

/// Normal form of f modulo S: repeatedly rewrite the compare-greatest
/// reducible monomial until every monomial is irreducible. The sequence of
/// rewritten monomials is strictly decreasing, so this terminates.
Reduction reduce(const Poly& f, const RuleSystem& S, bool record_states = false);

/// f minus the sum of all trace deltas; equals the reduction result if the
/// trace is sound.
Poly replay_trace(const Poly& f, const std::vector<TraceStep>& trace, const Scalar& lambda);

/// Normal form computed with a seeded random choice of reducible monomial and
/// redex at every step. Agreement with reduce() is the confluence check.
Reduction reduce_random(const Poly& f, const RuleSystem& S, std::uint64_t seed);

std::string rule_system_to_json(const RuleSystem& S);
RuleSystem rule_system_from_json(const std::string& text);

}  // namespace rba
