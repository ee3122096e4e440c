#include "rba/dendriform.hpp"

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <utility>

#include "rba/text.hpp"

namespace rba {

namespace {

Poly phi(const Coords& c) {
  Poly f;
  for (std::uint32_t k = 0; k < c.size(); ++k) f.add_term(Word::letter(k), c[k]);
  return f;
}

std::string coords_to_string(const Coords& c) { return to_string(phi(c)); }

std::string triple_to_string(const AxiomViolation& v) {
  return "(x" + std::to_string(v.i + 1) + ", x" + std::to_string(v.j + 1) + ", x" +
         std::to_string(v.k + 1) + ")";
}

Coords add(Coords a, const Coords& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

// Completion inside verify_embedding only certifies the inclusion of
// irreducible sets, so a fixed generous rule budget suffices at desk scale.
constexpr std::size_t kEmbedCompletionBudget = 200;

}  // namespace

DendriformAlgebra DendriformAlgebra::zeros(std::uint32_t dim, std::string name) {
  DendriformAlgebra D;
  D.name = std::move(name);
  D.dim = dim;
  const std::size_t n = static_cast<std::size_t>(dim) * dim * dim;
  D.prec.assign(n, Scalar(0));
  D.succ.assign(n, Scalar(0));
  return D;
}

Coords DendriformAlgebra::basis(std::uint32_t i) const {
  Coords c(dim, Scalar(0));
  c.at(i) = 1;
  return c;
}

Coords DendriformAlgebra::prec_of(const Coords& a, const Coords& b) const {
  Coords r(dim, Scalar(0));
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      const Scalar c = a[i] * b[j];
      for (std::uint32_t k = 0; k < dim; ++k) r[k] += c * prec_at(i, j, k);
    }
  }
  return r;
}

Coords DendriformAlgebra::succ_of(const Coords& a, const Coords& b) const {
  Coords r(dim, Scalar(0));
  for (std::uint32_t i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < dim; ++j) {
      if (b[j] == 0) continue;
      const Scalar c = a[i] * b[j];
      for (std::uint32_t k = 0; k < dim; ++k) r[k] += c * succ_at(i, j, k);
    }
  }
  return r;
}

void validate_shape(const DendriformAlgebra& D) {
  if (D.dim == 0) throw std::invalid_argument("dendriform algebra needs dim >= 1");
  const std::size_t n = static_cast<std::size_t>(D.dim) * D.dim * D.dim;
  if (D.prec.size() != n || D.succ.size() != n)
    throw std::invalid_argument("malformed structure-constant tables: expected " +
                                std::to_string(n) + " entries, got " +
                                std::to_string(D.prec.size()) + " (prec) and " +
                                std::to_string(D.succ.size()) + " (succ)");
}

AxiomReport check_axioms(const DendriformAlgebra& D) {
  validate_shape(D);
  AxiomReport r;
  r.algebra = D.name;
  r.dim = D.dim;
  for (std::uint32_t i = 0; i < D.dim; ++i) {
    const Coords a = D.basis(i);
    for (std::uint32_t j = 0; j < D.dim; ++j) {
      const Coords b = D.basis(j);
      for (std::uint32_t k = 0; k < D.dim; ++k) {
        const Coords c = D.basis(k);
        ++r.triples;
        auto report = [&](int axiom, Coords lhs, Coords rhs) {
          if (lhs != rhs)
            r.violations.push_back({axiom, i, j, k, std::move(lhs), std::move(rhs)});
        };
        report(1, D.prec_of(D.prec_of(a, b), c),
               D.prec_of(a, add(D.prec_of(b, c), D.succ_of(b, c))));
        report(2, D.prec_of(D.succ_of(a, b), c), D.succ_of(a, D.prec_of(b, c)));
        report(3, D.succ_of(add(D.prec_of(a, b), D.succ_of(a, b)), c),
               D.succ_of(a, D.succ_of(b, c)));
      }
    }
  }
  return r;
}

std::string axioms_to_text(const AxiomReport& r) {
  std::string out = "Dendriform axiom check: " + (r.algebra.empty() ? "unnamed" : r.algebra) +
                    " (dim " + std::to_string(r.dim) + ")\n";
  out += "triples checked: " + std::to_string(r.triples) + "\n";
  for (const AxiomViolation& v : r.violations)
    out += "axiom " + std::to_string(v.axiom) + " at " + triple_to_string(v) +
           ": lhs = " + coords_to_string(v.lhs) + ", rhs = " + coords_to_string(v.rhs) + "\n";
  out += r.pass() ? "verdict: axioms hold\n"
                  : "verdict: " + std::to_string(r.violations.size()) + " violation(s)\n";
  return out;
}

std::string axioms_to_json(const AxiomReport& r) {
  nlohmann::ordered_json j;
  j["kind"] = "axiom-check";
  j["algebra"] = r.algebra;
  j["dim"] = r.dim;
  j["triples"] = r.triples;
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (const AxiomViolation& v : r.violations) {
    nlohmann::ordered_json e;
    e["axiom"] = v.axiom;
    e["triple"] = {v.i + 1, v.j + 1, v.k + 1};
    nlohmann::ordered_json lhs = nlohmann::ordered_json::array();
    for (const Scalar& s : v.lhs) lhs.push_back(to_string(s));
    nlohmann::ordered_json rhs = nlohmann::ordered_json::array();
    for (const Scalar& s : v.rhs) rhs.push_back(to_string(s));
    e["lhs"] = std::move(lhs);
    e["rhs"] = std::move(rhs);
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  j["verdict"] = r.pass() ? "axioms-hold" : "axioms-violated";
  return j.dump(2) + "\n";
}

RuleSystem enveloping_relations(const DendriformAlgebra& D, const Scalar& lambda) {
  AxiomReport ax = check_axioms(D);
  if (!ax.pass())
    throw std::invalid_argument("not a dendriform dialgebra: " +
                                std::to_string(ax.violations.size()) + " axiom violation(s)");
  RuleSystem S;
  S.alphabet_size = D.dim;
  S.lambda = lambda;
  auto orient = [](Poly rel, const Word& intended, const std::string& label) {
    if (rel.is_zero() || !(rel.leading_word() == intended))
      throw std::invalid_argument("cannot orient relation " + label + ": " +
                                  to_string(intended) + " is not its leading word");
    return rel;
  };
  for (std::uint32_t i = 0; i < D.dim; ++i)
    for (std::uint32_t j = 0; j < D.dim; ++j) {
      const Word lead({Prime::letter(i), Prime::bracket(Word::letter(j))});
      Poly rel(lead);
      rel += lambda * Poly(Word({Prime::letter(i), Prime::letter(j)}));
      for (std::uint32_t k = 0; k < D.dim; ++k)
        rel.add_term(Word::letter(k), -D.prec_at(i, j, k));
      const std::string label =
          "F1[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
      S.add_rule(orient(std::move(rel), lead, label), label);
    }
  for (std::uint32_t i = 0; i < D.dim; ++i)
    for (std::uint32_t j = 0; j < D.dim; ++j) {
      const Word lead({Prime::bracket(Word::letter(i)), Prime::letter(j)});
      Poly rel(lead);
      for (std::uint32_t k = 0; k < D.dim; ++k)
        rel.add_term(Word::letter(k), -D.succ_at(i, j, k));
      const std::string label =
          "F2[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
      S.add_rule(orient(std::move(rel), lead, label), label);
    }
  return S;
}

RuleSystem full_gsb(const DendriformAlgebra& D) {
  RuleSystem S = enveloping_relations(D, 0);
  S.has_f3 = true;
  return S;
}

InducedTables rb_induced_dendriform(const std::vector<Poly>& sample, const RuleSystem& S) {
  if (S.lambda != 0)
    throw std::invalid_argument("induced dendriform operations need a weight-0 system");
  InducedTables T;
  T.sample = sample;
  const std::size_t n = sample.size();
  T.prec.assign(n, std::vector<Poly>(n));
  T.succ.assign(n, std::vector<Poly>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      T.prec[a][b] = reduce(multiply(sample[a], apply_P(sample[b]), 0), S).poly;
      T.succ[a][b] = reduce(multiply(apply_P(sample[a]), sample[b], 0), S).poly;
    }
  return T;
}

EmbeddingReport verify_embedding(const DendriformAlgebra& D, std::size_t depth_bound,
                                 std::size_t degree_bound, std::size_t probe_bound) {
  EmbeddingReport r;
  r.algebra = D.name.empty() ? "unnamed" : D.name;
  r.dim = D.dim;
  r.depth_bound = depth_bound;
  r.degree_bound = degree_bound;
  r.probe_bound = probe_bound;
  r.axioms = check_axioms(D);
  if (!r.axioms.pass()) return r;
  r.proceeded = true;

  const RuleSystem S = full_gsb(D);

  // (b) generators survive as distinct irreducible words.
  r.x_in_irr = true;
  std::set<std::string> images;
  for (std::uint32_t i = 0; i < D.dim; ++i) {
    const Word xi = Word::letter(i);
    if (!is_irreducible(xi, S)) r.x_in_irr = false;
    images.insert(to_string(xi));
  }
  if (images.size() != D.dim) r.x_in_irr = false;

  // (c) the operations induced on reduced representatives reproduce the
  // structure constants for every expression of operation depth <= bound.
  // Expressions are explored by value: two expressions whose subterms agree
  // on both sides evaluate identically, so each distinct pair of reduced
  // representatives is combined once.
  std::vector<Poly> rbs;
  std::vector<Coords> dcs;
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < D.dim; ++i) {
    rbs.push_back(Poly(Word::letter(i)));
    dcs.push_back(D.basis(i));
    names.push_back("x" + std::to_string(i + 1));
  }
  auto handle = [&](const Poly& rb, Coords dc, std::string expr) {
    ++r.hom_checks;
    const Poly expected = phi(dc);
    if (!(rb == expected)) r.homomorphism_failures.push_back({expr, rb, expected});
    for (std::size_t v = 0; v < rbs.size(); ++v)
      if (rbs[v] == rb && dcs[v] == dc) return;
    rbs.push_back(rb);
    dcs.push_back(std::move(dc));
    names.push_back(std::move(expr));
  };
  std::set<std::pair<std::size_t, std::size_t>> done;
  for (std::size_t level = 1; level <= depth_bound; ++level) {
    const std::size_t sz = rbs.size();
    const InducedTables T = rb_induced_dendriform(rbs, S);
    for (std::size_t a = 0; a < sz; ++a)
      for (std::size_t b = 0; b < sz; ++b) {
        if (!done.emplace(a, b).second) continue;
        handle(T.prec[a][b], D.prec_of(dcs[a], dcs[b]),
               "(" + names[a] + " ≺ " + names[b] + ")");
        handle(T.succ[a][b], D.succ_of(dcs[a], dcs[b]),
               "(" + names[a] + " ≻ " + names[b] + ")");
      }
  }
  r.hom_values = rbs.size();

  // (a) bounded Gröbner–Shirshov verification of the full system.
  r.gsb = check_gsb(S, degree_bound, probe_bound);

  // (d) completing the explicit relations alone must leave every word that
  // the full system keeps irreducible untouched within the bound; together
  // with (b) this pins the generators inside a linear basis.
  const CompletionResult comp = shirshov_complete(enveloping_relations(D, 0), degree_bound,
                                                  probe_bound, kEmbedCompletionBudget);
  r.completion_status = comp.status;
  r.completion_adjoined = comp.adjoined.size();
  bool inclusion = true;
  for (const Word& u : enumerate_words(D.dim, static_cast<std::uint32_t>(degree_bound))) {
    ++r.completion_words;
    if (is_irreducible(u, S) && !is_irreducible(u, comp.system)) {
      inclusion = false;
      r.completion_mismatches.push_back(to_string(u));
    }
  }
  r.completion_agreement = inclusion && r.x_in_irr;
  return r;
}

std::string embedding_to_text(const EmbeddingReport& r) {
  std::string out = "Embedding verification: " + r.algebra + " (dim " + std::to_string(r.dim) +
                    ")\n";
  out += "bounds: expression depth " + std::to_string(r.depth_bound) + ", ambient degree " +
         std::to_string(r.degree_bound) + ", probe degree " + std::to_string(r.probe_bound) +
         "\n";
  if (!r.proceeded) {
    out += "axiom check: FAIL (" + std::to_string(r.axioms.violations.size()) +
           " violation(s))\n";
    for (const AxiomViolation& v : r.axioms.violations)
      out += "  axiom " + std::to_string(v.axiom) + " at " + triple_to_string(v) +
             ": lhs = " + coords_to_string(v.lhs) + ", rhs = " + coords_to_string(v.rhs) +
             "\n";
    out += "remaining checks skipped (not a dendriform dialgebra)\n";
    out += "verdict: not verified\n";
    return out;
  }
  out += "axiom check: pass (" + std::to_string(r.axioms.triples) +
         (r.axioms.triples == 1 ? " triple)\n" : " triples)\n");
  out += std::string("generators irreducible and pairwise distinct: ") +
         (r.x_in_irr ? "yes" : "NO") + "\n";
  if (r.homomorphism_failures.empty()) {
    out += "homomorphism check: pass (" + std::to_string(r.hom_checks) +
           " operation checks, " + std::to_string(r.hom_values) + " reduced values)\n";
  } else {
    out += "homomorphism check: FAIL (" + std::to_string(r.homomorphism_failures.size()) +
           " mismatch(es) out of " + std::to_string(r.hom_checks) + " checks)\n";
    for (const HomomorphismFailure& f : r.homomorphism_failures)
      out += "  " + f.expression + ": reduced to " + to_string(f.rb_value) + ", expected " +
             to_string(f.expected) + "\n";
  }
  out += "Gröbner–Shirshov check: ";
  out += r.gsb.gsb_up_to_bound()
             ? "pass (" + std::to_string(r.gsb.total) + " ambiguities examined)\n"
             : "FAIL (" + std::to_string(r.gsb.failures.size()) +
                   " nontrivial composition(s))\n";
  out += "completion agreement: ";
  if (r.completion_agreement) {
    out += "yes (" + to_string(r.completion_status) + ", " +
           std::to_string(r.completion_adjoined) + " adjoined, " +
           std::to_string(r.completion_words) + " words compared)\n";
  } else {
    out += "NO (" + to_string(r.completion_status) + ", " +
           std::to_string(r.completion_mismatches.size()) + " mismatch(es))\n";
    std::size_t shown = 0;
    for (const std::string& w : r.completion_mismatches) {
      if (++shown > 10) {
        out += "  ... and " + std::to_string(r.completion_mismatches.size() - 10) + " more\n";
        break;
      }
      out += "  irreducible under the full system, reducible after completion: " + w + "\n";
    }
  }
  out += r.verdict() ? "verdict: embedding verified at bound\n" : "verdict: not verified\n";
  return out;
}

std::string embedding_to_json(const EmbeddingReport& r) {
  nlohmann::ordered_json j;
  j["kind"] = "embedding-verification";
  j["algebra"] = r.algebra;
  j["dim"] = r.dim;
  j["bounds"] = {{"depth", r.depth_bound}, {"degree", r.degree_bound}, {"probes", r.probe_bound}};
  j["axioms"] = nlohmann::ordered_json::parse(axioms_to_json(r.axioms));
  j["proceeded"] = r.proceeded;
  if (r.proceeded) {
    j["x_in_irr"] = r.x_in_irr;
    nlohmann::ordered_json hom;
    hom["checks"] = r.hom_checks;
    hom["values"] = r.hom_values;
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const HomomorphismFailure& f : r.homomorphism_failures)
      fails.push_back({{"expression", f.expression},
                       {"reduced", to_string(f.rb_value)},
                       {"expected", to_string(f.expected)}});
    hom["failures"] = std::move(fails);
    j["homomorphism"] = std::move(hom);
    j["gsb"] = nlohmann::ordered_json::parse(report_to_json(r.gsb));
    nlohmann::ordered_json comp;
    comp["status"] = to_string(r.completion_status);
    comp["adjoined"] = r.completion_adjoined;
    comp["words"] = r.completion_words;
    comp["agreement"] = r.completion_agreement;
    comp["mismatches"] = r.completion_mismatches;
    j["completion"] = std::move(comp);
  }
  j["verdict"] = r.verdict() ? "embedding-verified-at-bound" : "not-verified";
  return j.dump(2) + "\n";
}

std::string dendriform_to_json(const DendriformAlgebra& D) {
  validate_shape(D);
  nlohmann::ordered_json j;
  if (!D.name.empty()) j["name"] = D.name;
  j["dim"] = D.dim;
  auto table = [&](const std::vector<Scalar>& t) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::uint32_t i = 0; i < D.dim; ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::uint32_t j2 = 0; j2 < D.dim; ++j2) {
        nlohmann::ordered_json cell = nlohmann::ordered_json::array();
        for (std::uint32_t k = 0; k < D.dim; ++k)
          cell.push_back(to_string(t[(static_cast<std::size_t>(i) * D.dim + j2) * D.dim + k]));
        row.push_back(std::move(cell));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["prec"] = table(D.prec);
  j["succ"] = table(D.succ);
  return j.dump(2) + "\n";
}

DendriformAlgebra dendriform_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed algebra JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned())
    throw std::invalid_argument("algebra JSON needs an unsigned \"dim\"");
  DendriformAlgebra D;
  D.dim = j["dim"].get<std::uint32_t>();
  if (D.dim == 0) throw std::invalid_argument("dendriform algebra needs dim >= 1");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw std::invalid_argument("algebra \"name\" must be a string");
    D.name = j["name"].get<std::string>();
  }
  auto table = [&](const char* key) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("missing table \"") + key + "\"");
    const nlohmann::json& rows = j[key];
    std::vector<Scalar> t;
    t.reserve(static_cast<std::size_t>(D.dim) * D.dim * D.dim);
    if (!rows.is_array() || rows.size() != D.dim)
      throw std::invalid_argument(std::string("table \"") + key + "\" must be dim x dim x dim");
    for (const nlohmann::json& row : rows) {
      if (!row.is_array() || row.size() != D.dim)
        throw std::invalid_argument(std::string("table \"") + key + "\" must be dim x dim x dim");
      for (const nlohmann::json& cell : row) {
        if (!cell.is_array() || cell.size() != D.dim)
          throw std::invalid_argument(std::string("table \"") + key +
                                      "\" must be dim x dim x dim");
        for (const nlohmann::json& entry : cell) {
          if (!entry.is_string())
            throw std::invalid_argument("table entries must be rational strings");
          t.push_back(parse_scalar(entry.get<std::string>()));
        }
      }
    }
    return t;
  };
  D.prec = table("prec");
  D.succ = table("succ");
  validate_shape(D);
  return D;
}

DendriformAlgebra load_dendriform_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read algebra file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  DendriformAlgebra D = dendriform_from_json(ss.str());
  if (D.name.empty()) D.name = std::filesystem::path(path).stem().string();
  return D;
}

}  // namespace rba
