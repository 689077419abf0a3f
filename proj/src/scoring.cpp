#include "foca/scoring.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace foca::scoring {

using questionnaire::QuestionId;
using questionnaire::ValidationError;

namespace {

double logistic(double x) {
  // Evaluate the numerically stable branch so large |x| never overflows.
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

std::string format_mean(const Rational& r) {
  if (r.den() == 1) return r.to_string();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", r.to_double());
  return std::string(buf) + " (" + r.to_string() + ")";
}

}  // namespace

Rational GoalMeans::by_goal(int goal) const {
  switch (goal) {
    case 1: return cov_s;
    case 2: return cov_c;
    case 3: return cov_r;
    case 4: return cov_cp;
    case 5: return cov_h;
    default: throw std::out_of_range("goal must be 1..5");
  }
}

GoalMeans goal_means(const EvaluationSession& session) {
  std::array<std::vector<Rational>, questionnaire::kGoalCount> grades;
  for (QuestionId id : questionnaire::applicable_questions(session.ontology_type)) {
    auto it = session.answers.find(id);
    if (it == session.answers.end()) continue;
    grades[questionnaire::goal_of(id) - 1].push_back(it->second.grade);
  }
  GoalMeans means;
  means.cov_s = mean(grades[0]);
  means.cov_c = mean(grades[1]);
  means.cov_r = mean(grades[2]);
  means.cov_cp = mean(grades[3]);
  means.cov_h = mean(grades[4]);
  return means;
}

RoleSelector parse_roles(const std::string& text) {
  if (text == "all") return RoleSelector::all();
  if (text == "h") return RoleSelector::none();
  RoleSelector sel = RoleSelector::none();
  std::stringstream ss(text);
  std::string token;
  bool saw_any = false;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    saw_any = true;
    if (token == "sb") sel.sb = 1;
    else if (token == "co") sel.co = 1;
    else if (token == "re") sel.re = 1;
    else if (token == "cp") sel.cp = 1;
    else
      throw ValidationError("unknown role '" + token +
                            "' (expected all, h, or a subset of sb,co,re,cp)");
  }
  if (!saw_any) throw ValidationError("empty role selection");
  return sel;
}

std::string to_string(const RoleSelector& sel) {
  return "sb=" + std::to_string(sel.sb) + " co=" + std::to_string(sel.co) +
         " re=" + std::to_string(sel.re) + " cp=" + std::to_string(sel.cp);
}

Coefficients coefficients_from_json(const std::string& text,
                                    const std::string& source_name) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(source_name + ": invalid JSON: " + e.what());
  }
  if (!root.is_object())
    throw ValidationError(source_name + ": coefficient file must be an object");
  static const std::array<const char*, 7> kKeys = {
      "intercept", "cov_s", "cov_c", "cov_r", "cov_cp", "lexp", "nl"};
  std::array<double, 7> values{};
  for (std::size_t i = 0; i < kKeys.size(); ++i) {
    if (!root.contains(kKeys[i]) || !root[kKeys[i]].is_number())
      throw ValidationError(source_name +
                            ": coefficient overrides must supply all 7 numeric "
                            "values; missing or non-numeric '" +
                            kKeys[i] + "'");
    values[i] = root[kKeys[i]].get<double>();
  }
  for (const auto& [key, _] : root.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) throw ValidationError(source_name + ": unknown key '" + key + "'");
  }
  return Coefficients::from_array(values);
}

Coefficients read_coefficients_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open coefficient file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return coefficients_from_json(buffer.str(), path);
}

double linear_predictor(const GoalMeans& means, const RoleSelector& sel, int lexp,
                        int nl, const Coefficients& c) {
  return c.intercept + c.cov_s * means.cov_s.to_double() * sel.sb +
         c.cov_c * means.cov_c.to_double() * sel.co +
         c.cov_r * means.cov_r.to_double() * sel.re +
         c.cov_cp * means.cov_cp.to_double() * sel.cp + c.lexp * lexp + c.nl * nl;
}

QualityScore quality_from_means(const GoalMeans& means, const RoleSelector& sel,
                                int lexp, int nl, const Coefficients& c) {
  QualityScore score;
  score.terms = {c.intercept,
                 c.cov_s * means.cov_s.to_double() * sel.sb,
                 c.cov_c * means.cov_c.to_double() * sel.co,
                 c.cov_r * means.cov_r.to_double() * sel.re,
                 c.cov_cp * means.cov_cp.to_double() * sel.cp,
                 c.lexp * lexp,
                 c.nl * nl};
  score.linear_predictor = linear_predictor(means, sel, lexp, nl, c);
  score.value = logistic(score.linear_predictor);
  score.lexp_used = lexp;
  score.nl_used = nl;
  score.selector = sel;
  if (!sel.any())
    score.warnings.push_back(
        "no role selected (Human Expression reading): the score depends only "
        "on lexp and nl, not on any grade");
  return score;
}

QualityScore quality(const EvaluationSession& session, const RoleSelector& sel,
                     const Coefficients& c, NlPolicy policy) {
  const GoalMeans means = goal_means(session);
  const int nl = questionnaire::derive_nl(session, policy);
  QualityScore score = quality_from_means(means, sel, session.lexp, nl, c);

  std::array<int, questionnaire::kGoalCount> answered{};
  for (const auto& [id, _] : session.answers) ++answered[questionnaire::goal_of(id) - 1];
  const std::array<int, 4> role_flags = {sel.sb, sel.co, sel.re, sel.cp};
  for (int g = 0; g < 4; ++g)
    if (role_flags[g] && answered[g] == 0)
      score.warnings.push_back("goal " + std::to_string(g + 1) + " (" +
                               questionnaire::role_name(g + 1) +
                               ") has no answered questions; its mean enters "
                               "the formula as 0");
  return score;
}

QualityScore total_quality(const EvaluationSession& session, const Coefficients& c,
                           NlPolicy policy) {
  return quality(session, RoleSelector::all(), c, policy);
}

ScoreReport score_report(const EvaluationSession& session, const RoleSelector& sel,
                         const Coefficients& c, NlPolicy policy) {
  ScoreReport report;
  report.ontology_id = session.ontology_id;
  report.ontology_type = session.ontology_type;
  report.means = goal_means(session);
  report.score = quality(session, sel, c, policy);
  report.policy = policy;
  return report;
}

std::string format_score(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9f", value);
  return buf;
}

std::string render_text(const ScoreReport& report) {
  std::ostringstream out;
  out << "ontology: " << report.ontology_id << " ("
      << to_string(report.ontology_type) << ")\n";
  if (report.incomplete_input)
    out << "note: the answer file is marked incomplete\n";
  out << "goal means:\n";
  for (int g = 1; g <= questionnaire::kGoalCount; ++g) {
    char line[96];
    std::snprintf(line, sizeof(line), "  goal %d  %-24s %s\n", g,
                  questionnaire::role_name(g).c_str(),
                  format_mean(report.means.by_goal(g)).c_str());
    out << line;
  }
  out << "roles: " << to_string(report.score.selector) << "\n";
  out << "lexp: " << report.score.lexp_used << "  nl: " << report.score.nl_used
      << " (policy " << to_string(report.policy) << ")\n";
  out << "terms:";
  for (std::size_t i = 0; i < kTermLabels.size(); ++i) {
    char term[64];
    std::snprintf(term, sizeof(term), " %s=%g", kTermLabels[i],
                  report.score.terms[i]);
    out << term;
  }
  out << "\n";
  char lp[48];
  std::snprintf(lp, sizeof(lp), "%.6f", report.score.linear_predictor);
  out << "linear predictor: " << lp << "\n";
  out << "quality: " << format_score(report.score.value) << "\n";
  for (const auto& w : report.score.warnings) out << "warning: " << w << "\n";
  return out.str();
}

std::string render_json(const ScoreReport& report) {
  nlohmann::ordered_json root;
  root["report_type"] = "score";
  root["ontology_id"] = report.ontology_id;
  root["ontology_type"] = to_string(report.ontology_type);
  nlohmann::ordered_json means;
  for (int g = 1; g <= questionnaire::kGoalCount; ++g) {
    const Rational m = report.means.by_goal(g);
    means["goal" + std::to_string(g)] = {{"role", questionnaire::role_name(g)},
                                         {"value", m.to_double()},
                                         {"exact", m.to_string()}};
  }
  root["goal_means"] = means;
  root["roles"] = {{"sb", report.score.selector.sb},
                   {"co", report.score.selector.co},
                   {"re", report.score.selector.re},
                   {"cp", report.score.selector.cp}};
  root["lexp"] = report.score.lexp_used;
  root["nl"] = report.score.nl_used;
  root["nl_policy"] = to_string(report.policy);
  nlohmann::ordered_json terms;
  for (std::size_t i = 0; i < kTermLabels.size(); ++i)
    terms[kTermLabels[i]] = report.score.terms[i];
  root["terms"] = terms;
  root["linear_predictor"] = report.score.linear_predictor;
  root["quality"] = report.score.value;
  root["quality_9dp"] = format_score(report.score.value);
  root["warnings"] = report.score.warnings;
  root["incomplete_input"] = report.incomplete_input;
  return root.dump(2) + "\n";
}

}  // namespace foca::scoring
