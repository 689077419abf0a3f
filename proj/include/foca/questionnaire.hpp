#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "foca/rational.hpp"

namespace foca::questionnaire {

/// The two ontology kinds the questionnaire distinguishes. Top-level
/// ontologies are out of scope: the questions cannot judge that level of
/// abstraction, so no variant exists for them.
enum class OntologyType {
  DomainOrTask,  ///< "type1": generic domain or generic task vocabulary
  Application,   ///< "type2": concepts tied to one very specific domain
};

std::string to_string(OntologyType type);                       // "type1" / "type2"
OntologyType ontology_type_from_string(const std::string& s);   // throws ValidationError

enum class QuestionId { Q1, Q2, Q3, Q4, Q5, Q6, Q7, Q8, Q9, Q10, Q11, Q12, Q13 };

inline constexpr std::array<QuestionId, 13> kAllQuestions = {
    QuestionId::Q1,  QuestionId::Q2,  QuestionId::Q3, QuestionId::Q4, QuestionId::Q5,
    QuestionId::Q6,  QuestionId::Q7,  QuestionId::Q8, QuestionId::Q9, QuestionId::Q10,
    QuestionId::Q11, QuestionId::Q12, QuestionId::Q13};

inline constexpr int kGoalCount = 5;

std::string to_string(QuestionId id);  // "Q1".."Q13"
std::optional<QuestionId> question_from_string(const std::string& s);

/// Goal (1..5) owning the question: 1={Q1..Q3}, 2={Q4..Q6}, 3={Q7,Q8},
/// 4={Q9,Q10}, 5={Q11..Q13}.
int goal_of(QuestionId id);

/// Knowledge-representation role evaluated by a goal: Substitute,
/// Ontological Commitments, Intelligent Reasoning, Efficient Computation,
/// Human Expression.
std::string role_name(int goal);

/// The goal statement shown when browsing the catalog.
std::string goal_statement(int goal);

enum class Metric {
  Completeness,
  Adaptability,
  Conciseness,
  Consistency,
  ComputationalEfficiency,
  Clarity,
};

std::string to_string(Metric metric);

enum class Applicability {
  Both,
  DomainOrTaskOnly,  ///< Q5
  ApplicationOnly,   ///< Q4
};

/// One catalog entry: the question, its grading rubric, and where it sits in
/// the goal/metric structure.
struct QuestionSpec {
  QuestionId id;
  int goal;
  Metric metric;
  std::string text;
  std::string how_to_verify;
  std::vector<std::string> sub_questions;  ///< 3 for Q1, 2 for Q11, empty otherwise
  std::vector<int> allowed_grades;         ///< legal leaf grades, ascending
  Applicability applicability = Applicability::Both;

  bool has_sub_questions() const { return !sub_questions.empty(); }
  bool applies_to(OntologyType type) const;
};

/// The 13 question specs in stable order Q1..Q13.
const std::vector<QuestionSpec>& catalog();
const QuestionSpec& spec_for(QuestionId id);

/// The 12 questions an evaluator answers for the given type: Q4 is skipped
/// for domain/task ontologies, Q5 for application ontologies.
std::vector<QuestionId> applicable_questions(OntologyType type);

/// Advisory classification from a free-text description. The evaluator's
/// declared type always wins; this only suggests.
struct TypeHint {
  OntologyType suggested = OntologyType::DomainOrTask;
  bool low_confidence = false;
  std::string rationale;
};

TypeHint classify_hint(const std::string& description);

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A grade outside the question's allowed set.
struct IllegalGradeError : ValidationError {
  using ValidationError::ValidationError;
};

/// Sub-grade list of the wrong length, or a list given to a leaf question.
struct WrongArityError : ValidationError {
  using ValidationError::ValidationError;
};

/// Q4 graded on a type-1 session or Q5 on a type-2 session.
struct NotApplicableError : ValidationError {
  using ValidationError::ValidationError;
};

/// Attempt to grade Q2 away from 0 while Q1 = 0 holds it locked.
struct Q2LockedError : ValidationError {
  using ValidationError::ValidationError;
};

/// Either a single leaf grade or the full sub-grade list for Q1/Q11.
using AnswerInput = std::variant<int, std::vector<int>>;

/// Validates the input against the spec and aggregates it to a grade.
/// Sub-grade lists must match the sub-question count exactly and draw from
/// {25,50,75,100}; the aggregate is their mean. Q1 and Q11 also accept the
/// single leaf 0, meaning the graded artifact (competency document,
/// documentation) does not exist.
Rational grade_question(const QuestionSpec& spec, const AnswerInput& input);

struct GradedAnswer {
  AnswerInput input;
  Rational grade;
};

/// One evaluator's pass over one ontology.
struct EvaluationSession {
  std::string ontology_id;
  OntologyType ontology_type = OntologyType::DomainOrTask;
  int lexp = 0;  ///< 1 when the evaluator has vast experience in ontologies
  std::map<QuestionId, GradedAnswer> answers;
  std::map<QuestionId, std::string> notes;

  /// Q2 is locked to 0 while Q1 carries grade 0 (competencies absent).
  bool q2_locked() const;
};

/// Returns a copy of the session with the answer recorded. Overwriting an
/// earlier answer is allowed. Grading Q1 = 0 forces Q2 to 0; overwriting Q1
/// away from 0 clears the forced 0 so Q2 can be graded on its own terms.
EvaluationSession record_answer(EvaluationSession session, QuestionId id,
                                const AnswerInput& input);

/// How the nullity flag reads "some goal was impossible to answer fully".
enum class NlPolicy {
  Strict,     ///< any unanswered applicable question sets Nl = 1 (default)
  GoalEmpty,  ///< Nl = 1 only when some goal has no answers at all
};

std::string to_string(NlPolicy policy);
NlPolicy nl_policy_from_string(const std::string& s);

int derive_nl(const EvaluationSession& session, NlPolicy policy = NlPolicy::Strict);

}  // namespace foca::questionnaire
