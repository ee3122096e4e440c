#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rba/completion.hpp"

namespace rba {

/// Coordinates of an algebra element in the distinguished basis x_1..x_dim.
using Coords = std::vector<Scalar>;

/// A finite-dimensional dendriform dialgebra given by structure constants:
/// x_i ≺ x_j = Σ_k prec(i,j,k)·x_k and x_i ≻ x_j = Σ_k succ(i,j,k)·x_k.
/// Both tables are stored flattened with entry (i,j,k) at ((i·dim)+j)·dim+k,
/// all indices 0-based; display is 1-based everywhere.
struct DendriformAlgebra {
  std::string name;  // identifier used in reports; may be empty
  std::uint32_t dim = 0;
  std::vector<Scalar> prec, succ;

  static DendriformAlgebra zeros(std::uint32_t dim, std::string name = "");

  const Scalar& prec_at(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return prec[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
  Scalar& prec_at(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    return prec[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
  const Scalar& succ_at(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return succ[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }
  Scalar& succ_at(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    return succ[(static_cast<std::size_t>(i) * dim + j) * dim + k];
  }

  Coords basis(std::uint32_t i) const;

  /// Bilinear table application a ≺ b resp. a ≻ b on coordinate vectors.
  Coords prec_of(const Coords& a, const Coords& b) const;
  Coords succ_of(const Coords& a, const Coords& b) const;
};

/// Both tables must hold exactly dim³ entries with dim ≥ 1 (throws
/// std::invalid_argument otherwise). Every table consumer checks this first.
void validate_shape(const DendriformAlgebra& D);

struct AxiomViolation {
  int axiom = 0;                      // 1, 2 or 3, as listed on AxiomReport
  std::uint32_t i = 0, j = 0, k = 0;  // 0-based basis triple (a, b, c)
  Coords lhs, rhs;                    // both sides in basis coordinates
};

/// The three defining identities, evaluated on every basis triple:
///   1. (a ≺ b) ≺ c = a ≺ (b ≺ c + b ≻ c)
///   2. (a ≻ b) ≺ c = a ≻ (b ≺ c)
///   3. (a ≺ b + a ≻ b) ≻ c = a ≻ (b ≻ c)
struct AxiomReport {
  std::string algebra;
  std::uint32_t dim = 0;
  std::size_t triples = 0;  // dim³ basis triples, each against all 3 axioms
  std::vector<AxiomViolation> violations;
  bool pass() const { return violations.empty(); }
};

AxiomReport check_axioms(const DendriformAlgebra& D);

std::string axioms_to_text(const AxiomReport& r);
std::string axioms_to_json(const AxiomReport& r);

/// The defining relations of the enveloping Rota-Baxter algebra of weight
/// lambda, as oriented monic rules:
///   F1[i,j] = x_i P(x_j) + lambda·x_i x_j − Σ_k prec(i,j,k) x_k
///   F2[i,j] = P(x_i) x_j − Σ_k succ(i,j,k) x_k
/// all F1 rules first, row-major. The intended leading words x_i P(x_j) and
/// P(x_i) x_j are verified to dominate the tails under compare; a relation
/// that cannot be oriented that way throws std::invalid_argument, as does a
/// D that fails check_axioms.
RuleSystem enveloping_relations(const DendriformAlgebra& D, const Scalar& lambda);

/// enveloping_relations(D, 0) together with the bracket-saturated monomial
/// schema: the explicit rewriting system whose irreducible words are the
/// monomial basis of the weight-0 enveloping algebra.
RuleSystem full_gsb(const DendriformAlgebra& D);

/// Closure tables of the operations induced on reduced representatives,
/// a ≺ b := reduce(a·P(b), S) and a ≻ b := reduce(P(a)·b, S), over a sample.
struct InducedTables {
  std::vector<Poly> sample;
  std::vector<std::vector<Poly>> prec, succ;  // [a][b], aligned with sample
};

/// Requires S.lambda == 0 (throws std::invalid_argument otherwise).
InducedTables rb_induced_dendriform(const std::vector<Poly>& sample, const RuleSystem& S);

struct HomomorphismFailure {
  std::string expression;  // witness, e.g. "((x1 ≺ x2) ≻ x3)"
  Poly rb_value;           // evaluation through reduce in the enveloping algebra
  Poly expected;           // structure-constant evaluation mapped onto generators
};

struct EmbeddingReport {
  std::string algebra;
  std::uint32_t dim = 0;
  std::size_t depth_bound = 0, degree_bound = 0, probe_bound = 0;
  AxiomReport axioms;
  bool proceeded = false;  // false when the axiom pre-check already failed
  bool x_in_irr = false;   // generators irreducible and pairwise distinct
  std::size_t hom_checks = 0;  // operation applications compared
  std::size_t hom_values = 0;  // distinct reduced representatives reached
  std::vector<HomomorphismFailure> homomorphism_failures;
  GsbReport gsb;
  CompletionStatus completion_status = CompletionStatus::budget_exhausted;
  std::size_t completion_adjoined = 0;
  std::size_t completion_words = 0;  // words enumerated for the agreement check
  bool completion_agreement = false;
  std::vector<std::string> completion_mismatches;  // irreducible under S, reducible after completion
  bool verdict() const {
    return proceeded && axioms.pass() && x_in_irr && homomorphism_failures.empty() &&
           gsb.gsb_up_to_bound() && completion_agreement;
  }
};

/// Bounded certification that D embeds into its weight-0 enveloping
/// Rota-Baxter algebra: (a) the explicit rule system is a Gröbner–Shirshov
/// basis up to the bounds, (b) generator words stay irreducible and pairwise
/// distinct, (c) the operations induced on reduced representatives reproduce
/// the structure constants for every dendriform expression of operation
/// depth ≤ depth_bound, and (d) completing the explicit relations alone
/// leaves every irreducible word of the full system irreducible within
/// degree_bound, so the generators survive into a linear basis. A failed
/// axiom pre-check is reported, never thrown, and skips (a)–(d).
EmbeddingReport verify_embedding(const DendriformAlgebra& D, std::size_t depth_bound,
                                 std::size_t degree_bound, std::size_t probe_bound);

std::string embedding_to_text(const EmbeddingReport& r);
std::string embedding_to_json(const EmbeddingReport& r);

/// Serialized form: {"name": optional, "dim": n, "prec": n×n×n array of
/// rational strings, "succ": same}. Parsing validates shape and rationals;
/// malformed input throws std::invalid_argument.
std::string dendriform_to_json(const DendriformAlgebra& D);
DendriformAlgebra dendriform_from_json(const std::string& text);

/// Read and parse an algebra file; a missing "name" defaults to the file
/// stem. Throws std::invalid_argument on unreadable or malformed input.
DendriformAlgebra load_dendriform_file(const std::string& path);

}  // namespace rba
