#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rba/rewrite.hpp"

namespace rba {

enum class AmbiguityKind { right_mult, left_mult, intersection, inclusion };

std::string to_string(AmbiguityKind k);

/// One composition between two rules (or a rule and a probe): the ambient word
/// w where their reductions collide, and the difference polynomial h.
struct Ambiguity {
  AmbiguityKind kind;
  Rule f;
  std::optional<Rule> g;  // absent for the multiplication kinds
  Word w;
  Poly h;
  std::string detail;  // how the collision sits (overlap segment, context, probe)
};

/// Proper overlaps w = f̄·a = b·ḡ (a, b nonempty) at the top level, subject to
/// the strict degree condition deg(w) < deg(f̄) + deg(ḡ) and to f·a, b·g being
/// normal s-words; h = f·a − b·g.
std::vector<Ambiguity> intersection_compositions(const Rule& f, const Rule& g,
                                                 const Scalar& lambda);

/// Occurrences of ḡ inside f̄ at any depth with u|_g normal; h = f − u|_g.
/// The identity-context self-pair (f = g spliced into a bare hole) is skipped.
std::vector<Ambiguity> inclusion_compositions(const Rule& f, const Rule& g,
                                              const Scalar& lambda);

/// h = f·P(u) for each probe u when f̄ ends in a bracket (right_mult), and
/// h = P(u)·f when f̄ begins with one (left_mult); w is the leading word of
/// the product of f̄ with the bracketed probe.
std::vector<Ambiguity> multiplication_compositions(const Rule& f,
                                                   const std::vector<Word>& probes,
                                                   const Scalar& lambda);

/// h reduces to 0 and no step rewrites at a monomial ≥ w (intersection,
/// inclusion) resp. > w (multiplication kinds).
bool is_trivial(const Ambiguity& a, const RuleSystem& S);

/// Invoke fn on every ambiguity of the bounded enumeration: all compositions
/// among the explicit rules, overlaps against schema-matched monomials of
/// total degree ≤ degree_bound (schema-schema pairs sampled up to a small
/// cap, where h vanishes identically), and multiplication compositions with
/// pattern-irreducible probes up to probe_bound.
void for_each_ambiguity(const RuleSystem& S, std::size_t degree_bound,
                        std::size_t probe_bound, const std::function<void(Ambiguity)>& fn);

struct AmbiguityFailure {
  Ambiguity ambiguity;
  Poly normal_form;              // nonzero remainder (or zero if only the bound broke)
  std::vector<TraceStep> trace;  // the reduction that was attempted
  bool bound_violated = false;   // some step rewrote at/above the ceiling
};

struct FamilyStats {
  std::size_t count = 0;
  std::optional<Ambiguity> first;
};

struct GsbReport {
  std::uint32_t alphabet_size = 0;
  Scalar lambda = 0;
  std::size_t degree_bound = 0;
  std::size_t probe_bound = 0;
  std::size_t schema_pair_cap = 0;  // degree cap for schema-schema overlap sampling
  std::size_t total = 0;            // ambiguities examined
  std::vector<std::string> notes;
  std::map<std::string, FamilyStats> families;
  std::vector<AmbiguityFailure> failures;  // sorted by (w, kind, participants)
  bool gsb_up_to_bound() const { return failures.empty(); }
};

/// Bounded Gröbner–Shirshov verification: every composition among the explicit
/// rules, overlaps against schema-matched monomials of total degree ≤
/// degree_bound, and multiplication compositions with probes from
/// enumerate_words(·, probe_bound) restricted to the irreducible-pattern set.
GsbReport check_gsb(const RuleSystem& S, std::size_t degree_bound, std::size_t probe_bound);

std::string report_to_text(const GsbReport& r);
std::string report_to_json(const GsbReport& r);

}  // namespace rba
