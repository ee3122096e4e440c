#include "rba/completion.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "rba/text.hpp"

namespace rba {

std::string to_string(CompletionStatus s) {
  switch (s) {
    case CompletionStatus::saturated_up_to_bound: return "saturated_up_to_bound";
    case CompletionStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

RuleSystem interreduce(const RuleSystem& S, std::vector<InterreduceEvent>* log) {
  RuleSystem cur = S;
  bool changed = true;
  while (changed) {
    changed = false;
    // scan newest-first so duplicates collapse onto the earlier rule
    for (std::size_t i = cur.rules.size(); i-- > 0;) {
      RuleSystem others;
      others.alphabet_size = cur.alphabet_size;
      others.lambda = cur.lambda;
      others.has_f3 = cur.has_f3;
      for (std::size_t j = 0; j < cur.rules.size(); ++j)
        if (j != i) others.rules.push_back(cur.rules[j]);
      Reduction r = reduce(cur.rules[i].poly, others);
      if (r.poly == cur.rules[i].poly) continue;
      // event.after is the reduced polynomial before monic rescaling, so the
      // trace replays exactly
      if (log)
        log->push_back({cur.rules[i].label, cur.rules[i].poly, r.poly, r.trace,
                        r.poly.is_zero()});
      if (r.poly.is_zero()) {
        cur.rules.erase(cur.rules.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        cur.rules[i].poly = r.poly * (Scalar(1) / r.poly.leading_coeff());
      }
      changed = true;
      break;  // rescan from the top after any change
    }
  }
  return cur;
}

namespace {

std::string ambiguity_key(const Ambiguity& a) {
  std::string k = to_string(a.kind);
  k += '|';
  k += to_string(a.w);
  k += '|';
  k += to_string(a.h);
  k += '|';
  k += to_string(a.f.poly);
  if (a.g) {
    k += '|';
    k += to_string(a.g->poly);
  }
  return k;
}

bool ambiguity_before(const Ambiguity& x, const Ambiguity& y) {
  if (const auto c = compare(x.w, y.w); c != std::strong_ordering::equal)
    return c == std::strong_ordering::less;
  if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind);
  if (x.f.label != y.f.label) return x.f.label < y.f.label;
  const std::string& gx = x.g ? x.g->label : "";
  const std::string& gy = y.g ? y.g->label : "";
  return gx < gy;
}

}  // namespace

CompletionResult shirshov_complete(const RuleSystem& R, std::size_t degree_bound,
                                   std::size_t probe_bound, std::size_t max_new_rules) {
  CompletionResult res;
  res.bounds = {degree_bound, probe_bound, max_new_rules};
  res.system = R;

  std::set<std::string> seen;       // ambiguities already found trivial or adjoined
  std::set<std::string> seen_over;  // ambient word above the degree bound

  for (;;) {
    ++res.sweeps;
    std::vector<Ambiguity> news;
    for_each_ambiguity(res.system, degree_bound, probe_bound, [&](Ambiguity a) {
      const std::string key = ambiguity_key(a);
      if (a.w.deg().total > degree_bound) {
        if (seen_over.insert(key).second) ++res.skipped_over_degree;
        return;
      }
      if (!seen.insert(key).second) return;
      ++res.ambiguities_examined;
      if (!reduce(a.h, res.system).poly.is_zero()) news.push_back(std::move(a));
    });
    if (news.empty()) {
      res.status = CompletionStatus::saturated_up_to_bound;
      break;
    }
    std::sort(news.begin(), news.end(), ambiguity_before);

    bool exhausted = false;
    for (Ambiguity& a : news) {
      // earlier adjunctions in this sweep may already cover this one
      Reduction r = reduce(a.h, res.system);
      if (r.poly.is_zero()) continue;
      if (res.adjoined.size() >= max_new_rules) {
        exhausted = true;
        break;
      }
      const Scalar normalizer = Scalar(1) / r.poly.leading_coeff();
      Poly monic = r.poly * normalizer;
      const std::string label = "C" + std::to_string(res.adjoined.size() + 1);
      res.system.add_rule(monic, label);
      res.adjoined.push_back(
          {label, std::move(monic), std::move(a), std::move(r.trace), normalizer});
    }
    if (exhausted) {
      res.status = CompletionStatus::budget_exhausted;
      break;
    }
    const std::size_t logged = res.interreductions.size();
    RuleSystem tidied = interreduce(res.system, &res.interreductions);
    // if interreduction changed anything, triviality found against the old
    // rules is no longer a safe skip
    if (res.interreductions.size() != logged) seen.clear();
    res.system = std::move(tidied);
  }
  return res;
}

std::string completion_to_text(const CompletionResult& r) {
  std::ostringstream os;
  os << "Completion up to degree " << r.bounds.degree_bound << " (probes "
     << r.bounds.probe_bound << ", budget " << r.bounds.max_new_rules << ")\n";
  os << "status: " << to_string(r.status) << " after " << r.sweeps << " sweep(s), "
     << r.ambiguities_examined << " ambiguities examined, " << r.skipped_over_degree
     << " skipped over the degree bound\n";
  os << "rules: " << r.system.rules.size() << " explicit";
  if (r.system.has_f3) os << " plus the bracket-saturated schema";
  os << "\n";
  if (r.adjoined.empty()) {
    os << "adjoined: none\n";
  } else {
    os << "adjoined " << r.adjoined.size() << " rule(s):\n";
    for (const AdjoinedRule& a : r.adjoined)
      os << "  " << a.label << ": " << to_string(a.rule) << "  (from " << a.source.f.label
         << (a.source.g ? " and " + a.source.g->label : std::string())
         << ", w = " << to_string(a.source.w) << ")\n";
  }
  for (const InterreduceEvent& ev : r.interreductions) {
    os << "  interreduce " << ev.label << ": " << to_string(ev.before);
    if (ev.dropped)
      os << " dropped\n";
    else
      os << " -> " << to_string(ev.after) << "\n";
  }
  return os.str();
}

namespace {

nlohmann::ordered_json trace_to_json(const std::vector<TraceStep>& trace) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const TraceStep& st : trace)
    steps.push_back({{"rule", st.rule_label},
                     {"context", to_string(st.context)},
                     {"site", to_string(st.rewritten)},
                     {"coeff", to_string(st.coeff)}});
  return steps;
}

}  // namespace

std::string completion_to_json(const CompletionResult& r) {
  nlohmann::ordered_json j;
  j["kind"] = "completion-checkpoint";
  j["system"] = nlohmann::ordered_json::parse(rule_system_to_json(r.system));
  j["bounds"] = {{"degree_bound", r.bounds.degree_bound},
                 {"probe_bound", r.bounds.probe_bound},
                 {"max_new_rules", r.bounds.max_new_rules}};
  j["status"] = to_string(r.status);
  j["sweeps"] = r.sweeps;
  j["ambiguities_examined"] = r.ambiguities_examined;
  j["skipped_over_degree"] = r.skipped_over_degree;

  nlohmann::ordered_json adj = nlohmann::ordered_json::array();
  for (const AdjoinedRule& a : r.adjoined) {
    nlohmann::ordered_json e;
    e["label"] = a.label;
    e["rule"] = to_string(a.rule);
    nlohmann::ordered_json src;
    src["kind"] = to_string(a.source.kind);
    src["f"] = a.source.f.label;
    if (a.source.g) src["g"] = a.source.g->label;
    src["w"] = to_string(a.source.w);
    src["detail"] = a.source.detail;
    src["h"] = to_string(a.source.h);
    e["source"] = std::move(src);
    e["normalizer"] = to_string(a.normalizer);
    e["trace"] = trace_to_json(a.reduction);
    adj.push_back(std::move(e));
  }
  j["adjoined"] = std::move(adj);

  nlohmann::ordered_json inter = nlohmann::ordered_json::array();
  for (const InterreduceEvent& ev : r.interreductions)
    inter.push_back({{"label", ev.label},
                     {"before", to_string(ev.before)},
                     {"after", to_string(ev.after)},
                     {"dropped", ev.dropped},
                     {"trace", trace_to_json(ev.trace)}});
  j["interreductions"] = std::move(inter);
  return j.dump(2) + "\n";
}

CompletionCheckpoint completion_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad completion checkpoint: ") + e.what());
  }
  if (!j.is_object() || !j.contains("system") || !j.contains("bounds") ||
      !j.contains("status"))
    throw std::invalid_argument(
        "bad completion checkpoint: need system, bounds and status");
  CompletionCheckpoint cp;
  cp.system = rule_system_from_json(j.at("system").dump());
  const auto& b = j.at("bounds");
  cp.bounds.degree_bound = b.at("degree_bound").get<std::size_t>();
  cp.bounds.probe_bound = b.at("probe_bound").get<std::size_t>();
  cp.bounds.max_new_rules = b.at("max_new_rules").get<std::size_t>();
  const std::string status = j.at("status").get<std::string>();
  if (status == "saturated_up_to_bound")
    cp.status = CompletionStatus::saturated_up_to_bound;
  else if (status == "budget_exhausted")
    cp.status = CompletionStatus::budget_exhausted;
  else
    throw std::invalid_argument("bad completion checkpoint: unknown status " + status);
  return cp;
}

}  // namespace rba
