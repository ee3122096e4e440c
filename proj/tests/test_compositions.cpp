#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <nlohmann/json.hpp>

#include "rba/compositions.hpp"
#include "rba/text.hpp"

using namespace rba;

namespace {

Rule rule(const std::string& text, std::string label, const Scalar& lambda = 0) {
  Poly p = parse_poly(text, lambda);
  p *= Scalar(1) / p.leading_coeff();
  return Rule{std::move(p), std::move(label)};
}

// x1 P(x1) -> x1, P(x1) x1 -> 0 over one generator (the 1-dim table where the
// only nonzero product is the left one)
RuleSystem one_gen(bool with_schema) {
  RuleSystem S;
  S.alphabet_size = 1;
  S.add_rule(parse_poly("x1 P(x1) - x1", 0), "F1[1,1]");
  S.add_rule(parse_poly("P(x1) x1", 0), "F2[1,1]");
  S.has_f3 = with_schema;
  return S;
}

}  // namespace

TEST_CASE("intersection compositions find proper overlaps") {
  // bracket-segment overlap: w = x1 P(x2) x1
  Rule f = rule("x1 P(x2) - x1", "F1[1,2]");
  Rule g = rule("P(x2) x1 - x2", "F2[2,1]");
  auto as = intersection_compositions(f, g, 0);
  REQUIRE(as.size() == 1);
  CHECK(as[0].kind == AmbiguityKind::intersection);
  CHECK(to_string(as[0].w) == "x1 P(x2) x1");
  CHECK(to_string(as[0].h) == "x1 x2 - x1 x1");
  CHECK(as[0].detail == "overlap P(x2)");

  // letter-segment overlap the other way round: w = P(x1) x2 P(x1)
  auto bs = intersection_compositions(rule("P(x1) x2 - x2", "F2[1,2]"),
                                      rule("x2 P(x1) - x1", "F1[2,1]"), 0);
  REQUIRE(bs.size() == 1);
  CHECK(to_string(bs[0].w) == "P(x1) x2 P(x1)");

  // no proper self-overlap of x1 P(x2)
  CHECK(intersection_compositions(f, f, 0).empty());

  // a monomial can overlap itself properly; both sides concatenate literally
  Rule m = rule("x1 x1", "M");
  auto ms = intersection_compositions(m, m, 0);
  REQUIRE(ms.size() == 1);
  CHECK(to_string(ms[0].w) == "x1 x1 x1");
  CHECK(ms[0].h.is_zero());
}

TEST_CASE("inclusion compositions") {
  // full overlap of distinct rules with the same leading word
  Rule f = rule("x1 P(x2) - x1", "A");
  Rule g = rule("x1 P(x2) - x2", "B");
  auto as = inclusion_compositions(f, g, 0);
  REQUIRE(as.size() == 1);
  CHECK(as[0].kind == AmbiguityKind::inclusion);
  CHECK(to_string(as[0].w) == "x1 P(x2)");
  CHECK(to_string(as[0].h) == "x2 - x1");

  // a rule inside itself at the identity context is not an ambiguity
  CHECK(inclusion_compositions(f, f, 0).empty());

  // occurrence under a bracket
  auto bs = inclusion_compositions(rule("P(x1 P(x2)) - x1", "A"),
                                   rule("x1 P(x2) - x1", "B"), 0);
  REQUIRE(bs.size() == 1);
  CHECK(to_string(bs[0].w) == "P(x1 P(x2))");
  CHECK(to_string(bs[0].h) == "P(x1) - x1");
  CHECK(bs[0].detail == "at P(@)");

  // against a materialized schema monomial: every occurrence reproduces the
  // whole leading word, so h is the (negated) tail each time
  Rule big = rule("x1 x1 P(x1 x1) x1 - x1", "R1");
  auto cs = inclusion_compositions(big, Rule{Poly(parse_word("x1 x1")), "F3"}, 0);
  REQUIRE(cs.size() == 2);
  CHECK(to_string(cs[0].h) == "-x1");
  CHECK(to_string(cs[1].h) == "-x1");
  CHECK(cs[0].detail == "at @ P(x1 x1) x1");
  CHECK(cs[1].detail == "at x1 x1 P(@) x1");
}

TEST_CASE("schema occurrences inside a word cover all depths and lengths") {
  RuleSystem schema_only;
  schema_only.alphabet_size = 1;
  schema_only.has_f3 = true;
  auto rs = all_redexes(parse_word("x1 x1 P(x1 x1) x1"), schema_only);
  // top level: (0,2) (0,3) (0,4) (1,2) (1,3) (2,1) (2,2); inside the bracket: (0,2)
  CHECK(rs.size() == 8);
  for (const Redex& r : rs) CHECK(r.rule_index == -1);
}

TEST_CASE("multiplication compositions") {
  Rule f = rule("x1 P(x1) - x1", "F1[1,1]");
  std::vector<Word> probes{parse_word("x1")};
  auto as = multiplication_compositions(f, probes, 0);
  REQUIRE(as.size() == 1);  // ends in a bracket, starts with a letter
  CHECK(as[0].kind == AmbiguityKind::right_mult);
  CHECK(to_string(as[0].h) == "x1 P(P(x1) x1) + x1 P(x1 P(x1)) - x1 P(x1)");
  CHECK(to_string(as[0].w) == "x1 P(P(x1) x1)");
  CHECK(as[0].detail == "probe P(x1)");
  CHECK_FALSE(as[0].g.has_value());

  // nonzero weight keeps the extra expansion term
  auto aw = multiplication_compositions(f, probes, 1);
  REQUIRE(aw.size() == 1);
  CHECK(to_string(aw[0].h) ==
        "x1 P(P(x1) x1) + x1 P(x1 P(x1)) + x1 P(x1 x1) - x1 P(x1)");

  // bracket-first rules produce left multiplications only
  auto bs = multiplication_compositions(rule("P(x1) x1", "F2[1,1]"), probes, 0);
  REQUIRE(bs.size() == 1);
  CHECK(bs[0].kind == AmbiguityKind::left_mult);
  CHECK(to_string(bs[0].h) == "P(P(x1) x1) x1 + P(x1 P(x1)) x1");

  // a single bracket is both bracket-first and bracket-last
  auto cs = multiplication_compositions(Rule{Poly(parse_word("P(x1 x1)")), "F3"}, probes, 0);
  CHECK(cs.size() == 2);

  // letters-only leading words admit no multiplication composition
  CHECK(multiplication_compositions(rule("x1 x1", "M"), probes, 0).empty());
}

TEST_CASE("triviality needs reduction to zero below the ambient word") {
  RuleSystem S = one_gen(true);
  const Poly h = parse_poly("x1 x1", 0);  // one schema deletion at site x1 x1

  Ambiguity strict{AmbiguityKind::intersection, S.rules[0], S.rules[1],
                   parse_word("x1 x1 x1"), h, ""};
  CHECK(is_trivial(strict, S));
  strict.w = parse_word("x1 x1");  // site == w is no longer strictly below
  CHECK_FALSE(is_trivial(strict, S));

  Ambiguity mult{AmbiguityKind::right_mult, S.rules[0], std::nullopt,
                 parse_word("x1 x1"), h, ""};
  CHECK(is_trivial(mult, S));  // multiplication kinds allow rewriting at w

  Ambiguity stuck{AmbiguityKind::intersection, S.rules[0], S.rules[1],
                  parse_word("P(x1 x1)"), parse_poly("x1", 0), ""};
  CHECK_FALSE(is_trivial(stuck, S));  // irreducible nonzero remainder
}

TEST_CASE("overlap of the two explicit families resolves only via the schema") {
  Rule f = rule("x1 P(x2) - x1", "F1[1,2]");
  Rule g = rule("P(x2) x1 - x2", "F2[2,1]");
  auto as = intersection_compositions(f, g, 0);
  REQUIRE(as.size() == 1);

  RuleSystem pair;
  pair.alphabet_size = 2;
  pair.add_rule(f.poly, f.label);
  pair.add_rule(g.poly, g.label);
  CHECK_FALSE(is_trivial(as[0], pair));

  RuleSystem full = pair;
  full.has_f3 = true;
  CHECK(is_trivial(as[0], full));

  // enlarging the system keeps it trivial
  full.add_rule(parse_poly("x2 P(x2) - x2", 0), "F1[2,2]");
  CHECK(is_trivial(as[0], full));
}

TEST_CASE("bounded basis check on the one-generator system") {
  RuleSystem S = one_gen(true);
  GsbReport rep = check_gsb(S, 5, 2);
  CHECK(rep.gsb_up_to_bound());
  CHECK(rep.failures.empty());
  CHECK(rep.total > 0);
  CHECK(rep.schema_pair_cap == 4);
  REQUIRE(rep.notes.size() == 3);

  // exactly the nine expected collision families, every one witnessed
  const std::vector<std::string> keys = {"F1 P(u)", "F1^F2", "F2^F1", "F2^F3",
                                         "F3 P(u)", "F3^F1", "F3^F3", "P(u) F2",
                                         "P(u) F3"};
  REQUIRE(rep.families.size() == keys.size());
  std::size_t i = 0;
  for (const auto& [key, fs] : rep.families) {
    CHECK(key == keys[i++]);
    CHECK(fs.count >= 1);
    CHECK(fs.first.has_value());
  }
  CHECK(to_string(rep.families.at("F1^F2").first->w) == "x1 P(x1) x1");
  CHECK(to_string(rep.families.at("F2^F1").first->w) == "P(x1) x1 P(x1)");

  // rule order does not affect the outcome
  RuleSystem R;
  R.alphabet_size = 1;
  R.add_rule(S.rules[1].poly, S.rules[1].label);
  R.add_rule(S.rules[0].poly, S.rules[0].label);
  R.has_f3 = true;
  GsbReport rep2 = check_gsb(R, 5, 2);
  CHECK(rep2.gsb_up_to_bound());
  CHECK(rep2.total == rep.total);
  for (const auto& [key, fs] : rep.families) CHECK(rep2.families.at(key).count == fs.count);

  // byte-identical reports run to run
  CHECK(report_to_json(check_gsb(S, 5, 2)) == report_to_json(rep));
}

TEST_CASE("dropping the schema is detected as nontrivial") {
  RuleSystem S = one_gen(false);
  GsbReport rep = check_gsb(S, 5, 2);
  CHECK_FALSE(rep.gsb_up_to_bound());
  REQUIRE(!rep.failures.empty());

  // the F1-F2 overlap leaves the schema word x1 x1 as an irreducible remainder
  auto it = std::find_if(rep.failures.begin(), rep.failures.end(), [](const AmbiguityFailure& fl) {
    return fl.ambiguity.kind == AmbiguityKind::intersection &&
           fl.ambiguity.f.label == "F1[1,1]";
  });
  REQUIRE(it != rep.failures.end());
  CHECK(to_string(it->normal_form) == "-x1 x1");
  CHECK_FALSE(it->bound_violated);

  // failures arrive sorted by ambient word
  for (std::size_t i = 0; i + 1 < rep.failures.size(); ++i)
    CHECK(compare(rep.failures[i].ambiguity.w, rep.failures[i + 1].ambiguity.w) !=
          std::strong_ordering::greater);

  // no schema families can appear without the schema
  for (const auto& [key, fs] : rep.families) {
    CHECK(key.find("F3") == std::string::npos);
    (void)fs;
  }
}

TEST_CASE("empty system is vacuously a basis") {
  RuleSystem S;
  S.alphabet_size = 2;
  GsbReport rep = check_gsb(S, 4, 2);
  CHECK(rep.gsb_up_to_bound());
  CHECK(rep.total == 0);
  CHECK(rep.families.empty());
}

TEST_CASE("reports render both formats") {
  GsbReport good = check_gsb(one_gen(true), 4, 2);
  const std::string text = report_to_text(good);
  CHECK(text.find("verdict: Gröbner–Shirshov basis up to bound") != std::string::npos);
  CHECK(text.find("F3^F3") != std::string::npos);
  auto j = nlohmann::json::parse(report_to_json(good));
  CHECK(j["verdict"] == "gsb-up-to-bound");
  CHECK(j["failures"].empty());
  CHECK(j["families"]["F1^F2"]["count"].get<std::size_t>() >= 1);
  CHECK(j["degree_bound"] == 4);

  GsbReport bad = check_gsb(one_gen(false), 4, 2);
  const std::string btext = report_to_text(bad);
  CHECK(btext.find("NOT confirmed") != std::string::npos);
  CHECK(btext.find("normal form =") != std::string::npos);
  auto bj = nlohmann::json::parse(report_to_json(bad));
  CHECK(bj["verdict"] == "nontrivial-compositions-found");
  REQUIRE(!bj["failures"].empty());
  CHECK(bj["failures"][0].contains("trace"));
}
