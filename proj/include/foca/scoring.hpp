#pragma once

#include <array>
#include <string>
#include <vector>

#include "foca/questionnaire.hpp"
#include "foca/rational.hpp"

namespace foca::scoring {

using questionnaire::EvaluationSession;
using questionnaire::NlPolicy;
using questionnaire::OntologyType;

/// Per-goal arithmetic means of the answered grades (exact rationals).
/// Goal 2 averages the two applicable questions for the session's type; a
/// goal with no answers contributes 0. cov_h is reported but carries no
/// coefficient in the quality formula.
struct GoalMeans {
  Rational cov_s;   ///< goal 1, Substitute
  Rational cov_c;   ///< goal 2, Ontological Commitments
  Rational cov_r;   ///< goal 3, Intelligent Reasoning
  Rational cov_cp;  ///< goal 4, Efficient Computation
  Rational cov_h;   ///< goal 5, Human Expression (no formula term)

  Rational by_goal(int goal) const;
};

GoalMeans goal_means(const EvaluationSession& session);

/// Which roles enter the score. All ones = total quality; partial quality
/// keeps a subset; all zeros is the Human Expression reading, where the
/// score no longer depends on any grade.
struct RoleSelector {
  int sb = 1;
  int co = 1;
  int re = 1;
  int cp = 1;

  static RoleSelector all() { return {1, 1, 1, 1}; }
  static RoleSelector none() { return {0, 0, 0, 0}; }
  bool is_total() const { return sb && co && re && cp; }
  bool any() const { return sb || co || re || cp; }
};

/// Accepts "all", "h" (Human Expression, selects nothing) or a
/// comma-separated subset of sb,co,re,cp. Throws ValidationError otherwise.
RoleSelector parse_roles(const std::string& text);
std::string to_string(const RoleSelector& sel);

/// The 7 fitted weights of the linear predictor. b7 is the effective weight
/// of the binary nullity flag.
struct Coefficients {
  double intercept = -0.44;
  double cov_s = 0.03;
  double cov_c = 0.02;
  double cov_r = 0.01;
  double cov_cp = 0.02;
  double lexp = -0.66;
  double nl = -2.5;

  static Coefficients defaults() { return {}; }
  std::array<double, 7> as_array() const {
    return {intercept, cov_s, cov_c, cov_r, cov_cp, lexp, nl};
  }
  static Coefficients from_array(const std::array<double, 7>& b) {
    return {b[0], b[1], b[2], b[3], b[4], b[5], b[6]};
  }
};

/// Labels for the 7 linear-predictor terms, in coefficient order.
inline constexpr std::array<const char*, 7> kTermLabels = {
    "const", "cov_s*sb", "cov_c*co", "cov_r*re", "cov_cp*cp", "lexp", "nl"};

/// Loads a full 7-coefficient override from JSON ({"intercept": ...,
/// "cov_s": ..., ..., "nl": ...}); partial overrides are rejected.
Coefficients coefficients_from_json(const std::string& text,
                                    const std::string& source_name = "<string>");
Coefficients read_coefficients_file(const std::string& path);

double linear_predictor(const GoalMeans& means, const RoleSelector& sel, int lexp,
                        int nl, const Coefficients& c);

/// The quality score: logistic of the linear predictor, with the per-term
/// decomposition kept for reporting.
struct QualityScore {
  double value = 0.0;
  double linear_predictor = 0.0;
  std::array<double, 7> terms{};  ///< contributions in kTermLabels order
  int lexp_used = 0;
  int nl_used = 0;
  RoleSelector selector;
  std::vector<std::string> warnings;
};

QualityScore quality_from_means(const GoalMeans& means, const RoleSelector& sel,
                                int lexp, int nl,
                                const Coefficients& c = Coefficients::defaults());

QualityScore quality(const EvaluationSession& session, const RoleSelector& sel,
                     const Coefficients& c = Coefficients::defaults(),
                     NlPolicy policy = NlPolicy::Strict);

/// Total quality: every role selected.
QualityScore total_quality(const EvaluationSession& session,
                           const Coefficients& c = Coefficients::defaults(),
                           NlPolicy policy = NlPolicy::Strict);

/// Everything the score command prints.
struct ScoreReport {
  std::string ontology_id;
  OntologyType ontology_type = OntologyType::DomainOrTask;
  GoalMeans means;
  QualityScore score;
  NlPolicy policy = NlPolicy::Strict;
  bool incomplete_input = false;
};

ScoreReport score_report(const EvaluationSession& session, const RoleSelector& sel,
                         const Coefficients& c = Coefficients::defaults(),
                         NlPolicy policy = NlPolicy::Strict);

/// Scores are printed to 9 decimal places.
std::string format_score(double value);

std::string render_text(const ScoreReport& report);
std::string render_json(const ScoreReport& report);

}  // namespace foca::scoring
