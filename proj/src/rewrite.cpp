#include "rba/rewrite.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "rba/text.hpp"

namespace rba {

void RuleSystem::add_rule(Poly p, std::string label) {
  if (p.is_zero()) throw std::invalid_argument("cannot add the zero rule");
  const Scalar& lc = p.leading_coeff();
  if (lc != 1) p *= Scalar(1) / lc;
  if (label.empty()) label = "R" + std::to_string(rules.size() + 1);
  rules.push_back(Rule{std::move(p), std::move(label)});
}

namespace {

bool is_f1_pair(const Prime& a, const Prime& b) {
  return a.is_letter() && b.is_bracket() && b.body().is_single_letter();
}
bool is_f2_pair(const Prime& a, const Prime& b) {
  return a.is_bracket() && a.body().is_single_letter() && b.is_letter();
}

}  // namespace

bool in_phi1(const Word& u) {
  const auto& ps = u.primes();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i + 1 < ps.size() && (is_f1_pair(ps[i], ps[i + 1]) || is_f2_pair(ps[i], ps[i + 1])))
      return false;
    if (ps[i].is_bracket() && !in_phi1(ps[i].body())) return false;
  }
  return true;
}

namespace {

/// Is a top-level bracket body admissible for the monomial family: Phi1 and
/// not a bare letter?
bool f3_body_ok(const Prime& p) {
  return p.is_bracket() && !p.body().is_single_letter() && in_phi1(p.body());
}

/// in_f3 on a contiguous prime range [first, last).
bool in_f3_range(std::vector<Prime>::const_iterator first,
                 std::vector<Prime>::const_iterator last) {
  std::size_t letters = 0, brackets = 0;
  for (auto it = first; it != last; ++it) {
    if (it->is_letter()) {
      ++letters;
    } else if (it->is_bracket()) {
      ++brackets;
      if (!f3_body_ok(*it)) return false;
    } else {
      return false;  // a hole never matches
    }
  }
  if (brackets == 0) return letters >= 2;
  return true;
}

}  // namespace

bool in_f3(const Word& u) { return in_f3_range(u.primes().begin(), u.primes().end()); }

namespace {

/// Rebuild u with the primes [start, start+len) of the level reached by
/// `path` replaced by one hole.
Word rebuild_with_hole(const Word& w, const std::vector<std::size_t>& path, std::size_t depth,
                       std::size_t start, std::size_t len) {
  const auto& ps = w.primes();
  std::vector<Prime> np;
  if (depth == path.size()) {
    np.assign(ps.begin(), ps.begin() + start);
    np.push_back(Prime::hole());
    np.insert(np.end(), ps.begin() + start + len, ps.end());
  } else {
    np = ps;
    np[path[depth]] =
        Prime::bracket(rebuild_with_hole(ps[path[depth]].body(), path, depth + 1, start, len));
  }
  return Word(std::move(np));
}

bool match_at(const std::vector<Prime>& ps, std::size_t i, const Word& t) {
  const auto& tp = t.primes();
  if (i + tp.size() > ps.size()) return false;
  return std::equal(tp.begin(), tp.end(), ps.begin() + i);
}

/// Shortest schema match starting at prime i of the level, if any. Because a
/// match is killed only by a bracket with inadmissible body inside the range,
/// the shortest match has length 1 (admissible bracket) or 2 (letter followed
/// by a letter or an admissible bracket); anything longer starts with a bad
/// prime and never matches at i.
std::optional<std::size_t> shortest_f3_at(const std::vector<Prime>& ps, std::size_t i) {
  if (ps[i].is_bracket()) {
    if (f3_body_ok(ps[i])) return 1;
    return std::nullopt;
  }
  if (!ps[i].is_letter() || i + 1 >= ps.size()) return std::nullopt;
  if (ps[i + 1].is_letter()) return 2;
  if (f3_body_ok(ps[i + 1])) return 2;
  return std::nullopt;
}

struct LevelRef {
  const Word* w;
  std::vector<std::size_t> path;
};

template <typename Visit>  // Visit: (const Word& level, const std::vector<std::size_t>& path)
void for_each_level(const Word& u, Visit visit) {
  std::vector<LevelRef> frontier{{&u, {}}};
  while (!frontier.empty()) {
    std::vector<LevelRef> next;
    for (const LevelRef& lv : frontier) {
      if (!visit(*lv.w, lv.path)) return;
      const auto& ps = lv.w->primes();
      for (std::size_t i = 0; i < ps.size(); ++i)
        if (ps[i].is_bracket()) {
          std::vector<std::size_t> p = lv.path;
          p.push_back(i);
          next.push_back({&ps[i].body(), std::move(p)});
        }
    }
    frontier = std::move(next);
  }
}

}  // namespace

std::optional<Redex> find_redex(const Word& u, const RuleSystem& S) {
  if (u.hole_count() != 0) throw std::invalid_argument("find_redex expects a hole-free word");
  std::optional<Redex> found;
  for_each_level(u, [&](const Word& lvl, const std::vector<std::size_t>& path) {
    const auto& ps = lvl.primes();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t r = 0; r < S.rules.size(); ++r) {
        const Word& t = S.rules[r].leading();
        if (!match_at(ps, i, t)) continue;
        StarWord q(rebuild_with_hole(u, path, 0, i, t.size()));
        if (!is_normal_sword(q, S.rules[r].poly, S.lambda)) continue;
        found = Redex{static_cast<int>(r), std::move(q), t};
        return false;
      }
      if (S.has_f3) {
        if (auto len = shortest_f3_at(ps, i)) {
          StarWord q(rebuild_with_hole(u, path, 0, i, *len));
          Word m(std::vector<Prime>(ps.begin() + i, ps.begin() + i + *len));
          assert(is_normal_sword(q, Poly(m), S.lambda));
          found = Redex{-1, std::move(q), std::move(m)};
          return false;
        }
      }
    }
    return true;
  });
  return found;
}

std::vector<Redex> all_redexes(const Word& u, const RuleSystem& S) {
  if (u.hole_count() != 0) throw std::invalid_argument("all_redexes expects a hole-free word");
  std::vector<Redex> out;
  for_each_level(u, [&](const Word& lvl, const std::vector<std::size_t>& path) {
    const auto& ps = lvl.primes();
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t r = 0; r < S.rules.size(); ++r) {
        const Word& t = S.rules[r].leading();
        if (!match_at(ps, i, t)) continue;
        StarWord q(rebuild_with_hole(u, path, 0, i, t.size()));
        if (!is_normal_sword(q, S.rules[r].poly, S.lambda)) continue;
        out.push_back(Redex{static_cast<int>(r), std::move(q), t});
      }
      if (S.has_f3) {
        // every schema match at this start, shortest first
        for (std::size_t len = 1; i + len <= ps.size(); ++len) {
          if (!in_f3_range(ps.begin() + i, ps.begin() + i + len)) continue;
          StarWord q(rebuild_with_hole(u, path, 0, i, len));
          Word m(std::vector<Prime>(ps.begin() + i, ps.begin() + i + len));
          out.push_back(Redex{-1, std::move(q), std::move(m)});
        }
      }
    }
    return true;
  });
  return out;
}

bool is_irreducible(const Word& u, const RuleSystem& S) { return !find_redex(u, S).has_value(); }

namespace {

TraceStep apply_redex(Poly& cur, const Redex& rx, const RuleSystem& S, bool record_states) {
  const Poly rule = rx.rule_index >= 0 ? S.rules[rx.rule_index].poly : Poly(rx.matched);
  const std::string label = rx.rule_index >= 0 ? S.rules[rx.rule_index].label : "F3";
  Poly delta = substitute_poly(rx.context, rule, S.lambda);
  const Word site = delta.leading_word();
  Scalar c = cur.coeff(site);
  assert(c != 0 && delta.leading_coeff() == 1);
  TraceStep st{label, rule, rx.context, site, c, std::nullopt, std::nullopt};
  if (record_states) st.before = cur;
  cur -= c * delta;
  if (record_states) st.after = cur;
  return st;
}

}  // namespace

Reduction reduce(const Poly& f, const RuleSystem& S, bool record_states) {
  Poly cur = f;
  std::vector<TraceStep> trace;
  std::set<Word, WordLess> known_irreducible;
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [m, c] : cur.terms()) {
      if (known_irreducible.count(m)) continue;
      auto rx = find_redex(m, S);
      if (!rx) {
        known_irreducible.insert(m);
        continue;
      }
      (void)c;
      trace.push_back(apply_redex(cur, *rx, S, record_states));
      progress = true;
      break;  // the term map changed; restart from the greatest monomial
    }
  }
  return {std::move(cur), std::move(trace)};
}

Poly replay_trace(const Poly& f, const std::vector<TraceStep>& trace, const Scalar& lambda) {
  Poly cur = f;
  for (const TraceStep& st : trace) cur -= st.coeff * substitute_poly(st.context, st.rule, lambda);
  return cur;
}

Reduction reduce_random(const Poly& f, const RuleSystem& S, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Poly cur = f;
  std::vector<TraceStep> trace;
  while (true) {
    // all (monomial, redex) pairs of the current polynomial
    std::vector<Redex> sites;
    for (const auto& [m, c] : cur.terms()) {
      (void)c;
      for (Redex& rx : all_redexes(m, S)) sites.push_back(std::move(rx));
    }
    if (sites.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
    trace.push_back(apply_redex(cur, sites[pick(rng)], S, false));
  }
  return {std::move(cur), std::move(trace)};
}

std::string rule_system_to_json(const RuleSystem& S) {
  nlohmann::ordered_json j;
  j["alphabet_size"] = S.alphabet_size;
  j["lambda"] = to_string(S.lambda);
  j["rules"] = nlohmann::ordered_json::array();
  for (const Rule& r : S.rules)
    j["rules"].push_back({{"label", r.label}, {"poly", to_string(r.poly)}});
  j["schemas"] = nlohmann::ordered_json::array();
  if (S.has_f3) j["schemas"].push_back("F3");
  return j.dump(2) + "\n";
}

RuleSystem rule_system_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad rule-system JSON: ") + e.what());
  }
  RuleSystem S;
  S.alphabet_size = j.at("alphabet_size").get<std::uint32_t>();
  S.lambda = parse_scalar(j.at("lambda").get<std::string>());
  for (const auto& r : j.at("rules")) {
    std::string label = r.contains("label") ? r.at("label").get<std::string>() : "";
    S.add_rule(parse_poly(r.at("poly").get<std::string>(), S.lambda, S.alphabet_size), label);
  }
  if (j.contains("schemas"))
    for (const auto& s : j.at("schemas")) {
      if (s.get<std::string>() != "F3")
        throw std::invalid_argument("unknown schema: " + s.get<std::string>());
      S.has_f3 = true;
    }
  return S;
}

}  // namespace rba
