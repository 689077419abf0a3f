#include "foca/questionnaire.hpp"

#include <algorithm>
#include <cctype>

namespace foca::questionnaire {

namespace {

const std::vector<int> kFullScale = {0, 25, 50, 75, 100};
const std::vector<int> kSubScale = {25, 50, 75, 100};   // sub-grades never use 0
const std::vector<int> kBinaryScale = {0, 100};         // Q3 reuse check

std::vector<QuestionSpec> build_catalog() {
  std::vector<QuestionSpec> specs;
  specs.push_back({QuestionId::Q1, 1, Metric::Completeness,
                   "Were the competency questions defined?",
                   "Check whether the ontology's competencies are documented. If no "
                   "competency document exists, the grade is 0. Otherwise grade each "
                   "sub-question 25, 50, 75 or 100; the question grade is their mean.",
                   {"Does the document define the ontology objective?",
                    "Does the document define the ontology stakeholders?",
                    "Does the document define the use scenarios?"},
                   {0},
                   Applicability::Both});
  specs.push_back({QuestionId::Q2, 1, Metric::Completeness,
                   "Were the competency questions answered?",
                   "Gradeable only when competencies exist: a Q1 grade of 0 locks this "
                   "question to 0. Check whether the ontology responds to what the "
                   "competency document defines. Grades: 25, 50, 75, 100.",
                   {},
                   kSubScale,
                   Applicability::Both});
  specs.push_back({QuestionId::Q3, 1, Metric::Adaptability,
                   "Did the ontology reuse other ontologies?",
                   "Check whether the ontology reuses other ontologies. No reuse: 0. "
                   "Any reuse: 100.",
                   {},
                   kBinaryScale,
                   Applicability::Both});
  specs.push_back({QuestionId::Q4, 2, Metric::Conciseness,
                   "Did the ontology impose a minimal ontological commitment?",
                   "Application ontologies only. Check how much abstraction the ontology "
                   "uses to define its concepts: 0 when it buries the specific domain in "
                   "abstractions it does not need; otherwise 25 (very specific), "
                   "50 (moderate abstraction), 75 (many abstractions), "
                   "100 (full of abstractions).",
                   {},
                   kFullScale,
                   Applicability::ApplicationOnly});
  specs.push_back({QuestionId::Q5, 2, Metric::Conciseness,
                   "Did the ontology impose a maximum ontological commitment?",
                   "Domain or task ontologies only. Check whether primitive, abstract "
                   "concepts anchor the domain concepts. No abstractions: 0; otherwise "
                   "25 (very specific), 50 (moderate abstraction), 75 (many "
                   "abstractions), 100 (full of abstractions).",
                   {},
                   kFullScale,
                   Applicability::DomainOrTaskOnly});
  specs.push_back({QuestionId::Q6, 2, Metric::Consistency,
                   "Are the ontology properties coherent with the domain?",
                   "Check whether classes and properties are coherent with the modelled "
                   "domain. Full of incoherences: 0; some incoherences: 25, 50 or 75; "
                   "no incoherence: 100.",
                   {},
                   kFullScale,
                   Applicability::Both});
  specs.push_back({QuestionId::Q7, 3, Metric::Consistency,
                   "Are there contradictory axioms?",
                   "Check whether class or property characteristics (functional, "
                   "transitive, reflexive, ...) contradict the domain. Full of "
                   "contradictions: 0; some: 25, 50 or 75; none: 100.",
                   {},
                   kFullScale,
                   Applicability::Both});
  specs.push_back({QuestionId::Q8, 3, Metric::Conciseness,
                   "Are there redundant axioms?",
                   "Check for classes or properties that model the same thing with the "
                   "same meaning. Full of redundancies: 0; some: 25, 50 or 75; "
                   "none: 100.",
                   {},
                   kFullScale,
                   Applicability::Both});
  specs.push_back({QuestionId::Q9, 4, Metric::ComputationalEfficiency,
                   "Did the reasoner bring modelling errors?",
                   "Run a reasoner over the ontology and keep the records. Full of "
                   "errors, or the reasoner stops responding: 0; some errors: 25, 50 "
                   "or 75; no errors: 100.",
                   {},
                   kFullScale,
                   Applicability::Both});
  specs.push_back({QuestionId::Q10, 4, Metric::ComputationalEfficiency,
                   "Did the reasoner perform quickly?",
                   "Check the reasoner's speed. Reasoner stops: 0; some delay: 25, 50 "
                   "or 75; runs quickly: 100.",
                   {},
                   kFullScale,
                   Applicability::Both});
  specs.push_back({QuestionId::Q11, 5, Metric::Clarity,
                   "Is the documentation consistent with modelling?",
                   "Check whether documentation exists. None: grade 0. Otherwise grade "
                   "each sub-question 25, 50, 75 or 100; the question grade is their "
                   "mean.",
                   {"Are the written terms in the documentation the same as in the "
                    "modelling?",
                    "Does the documentation explain each term and justify each modelling "
                    "detail?"},
                   {0},
                   Applicability::Both});
  specs.push_back({QuestionId::Q12, 5, Metric::Clarity,
                   "Were the concepts well written?",
                   "Check whether classes and properties are written understandably and "
                   "correctly in one language. Hard to understand or full of poorly "
                   "written terms: 0; some errors or a mix of languages: 25, 50 or 75; "
                   "well written in a single language: 100.",
                   {},
                   kFullScale,
                   Applicability::Both});
  specs.push_back({QuestionId::Q13, 5, Metric::Clarity,
                   "Are there annotations in the ontology that show the definitions of "
                   "the concepts?",
                   "Check whether the existing annotations give the definitions of the "
                   "modelled concepts. No annotations: 0; some: 25, 50 or 75; all "
                   "concepts annotated: 100.",
                   {},
                   kFullScale,
                   Applicability::Both});
  return specs;
}

bool contains(const std::vector<int>& values, int v) {
  return std::find(values.begin(), values.end(), v) != values.end();
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

std::string lowercase(const std::string& s) {
  std::string out = s;
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string to_string(OntologyType type) {
  return type == OntologyType::DomainOrTask ? "type1" : "type2";
}

OntologyType ontology_type_from_string(const std::string& s) {
  if (s == "type1") return OntologyType::DomainOrTask;
  if (s == "type2") return OntologyType::Application;
  throw ValidationError("unknown ontology type '" + s + "' (expected type1 or type2)");
}

std::string to_string(QuestionId id) {
  return "Q" + std::to_string(static_cast<int>(id) + 1);
}

std::optional<QuestionId> question_from_string(const std::string& s) {
  for (QuestionId id : kAllQuestions)
    if (to_string(id) == s) return id;
  return std::nullopt;
}

int goal_of(QuestionId id) {
  switch (id) {
    case QuestionId::Q1:
    case QuestionId::Q2:
    case QuestionId::Q3:
      return 1;
    case QuestionId::Q4:
    case QuestionId::Q5:
    case QuestionId::Q6:
      return 2;
    case QuestionId::Q7:
    case QuestionId::Q8:
      return 3;
    case QuestionId::Q9:
    case QuestionId::Q10:
      return 4;
    default:
      return 5;
  }
}

std::string role_name(int goal) {
  switch (goal) {
    case 1: return "Substitute";
    case 2: return "Ontological Commitments";
    case 3: return "Intelligent Reasoning";
    case 4: return "Efficient Computation";
    case 5: return "Human Expression";
    default: throw std::out_of_range("goal must be 1..5");
  }
}

std::string goal_statement(int goal) {
  return "Check if the ontology complies with " + role_name(goal) + ".";
}

std::string to_string(Metric metric) {
  switch (metric) {
    case Metric::Completeness: return "Completeness";
    case Metric::Adaptability: return "Adaptability";
    case Metric::Conciseness: return "Conciseness";
    case Metric::Consistency: return "Consistency";
    case Metric::ComputationalEfficiency: return "Computational efficiency";
    case Metric::Clarity: return "Clarity";
  }
  return "?";
}

bool QuestionSpec::applies_to(OntologyType type) const {
  switch (applicability) {
    case Applicability::Both: return true;
    case Applicability::DomainOrTaskOnly: return type == OntologyType::DomainOrTask;
    case Applicability::ApplicationOnly: return type == OntologyType::Application;
  }
  return true;
}

const std::vector<QuestionSpec>& catalog() {
  static const std::vector<QuestionSpec> specs = build_catalog();
  return specs;
}

const QuestionSpec& spec_for(QuestionId id) {
  return catalog()[static_cast<std::size_t>(id)];
}

std::vector<QuestionId> applicable_questions(OntologyType type) {
  std::vector<QuestionId> out;
  for (const auto& spec : catalog())
    if (spec.applies_to(type)) out.push_back(spec.id);
  return out;
}

TypeHint classify_hint(const std::string& description) {
  if (description.empty())
    throw ValidationError("classify_hint requires a non-empty description");

  static const std::vector<std::string> kType1Cues = {
      "abstract", "primitive", "generic", "general", "knowledge area",
      "subject",  "domain of", "task"};
  static const std::vector<std::string> kType2Cues = {
      "specializ", "specialis", "instantiat", "specific", "particular",
      "application"};

  const std::string text = lowercase(description);
  int hits1 = 0, hits2 = 0;
  std::string matched1, matched2;
  for (const auto& cue : kType1Cues)
    if (text.find(cue) != std::string::npos) {
      ++hits1;
      if (matched1.empty()) matched1 = cue;
    }
  for (const auto& cue : kType2Cues)
    if (text.find(cue) != std::string::npos) {
      ++hits2;
      if (matched2.empty()) matched2 = cue;
    }

  static const std::string kRule =
      "Decision rule: an ontology modelling an abstract subject or knowledge "
      "area is type1 (domain or task); one that specializes or instantiates "
      "concepts for a particular domain is type2 (application). The declared "
      "type always overrides this suggestion.";

  TypeHint hint;
  if (hits1 == 0 && hits2 == 0) {
    hint.suggested = OntologyType::DomainOrTask;
    hint.low_confidence = true;
    hint.rationale = "No classification keyword matched; defaulting to type1 "
                     "with low confidence. " + kRule;
  } else if (hits2 > hits1) {
    hint.suggested = OntologyType::Application;
    hint.rationale = "Description suggests specialization for a particular "
                     "domain (matched '" + matched2 + "'). " + kRule;
  } else if (hits1 > hits2) {
    hint.suggested = OntologyType::DomainOrTask;
    hint.rationale = "Description suggests an abstract or generic subject "
                     "(matched '" + matched1 + "'). " + kRule;
  } else {
    hint.suggested = OntologyType::DomainOrTask;
    hint.low_confidence = true;
    hint.rationale = "Keyword evidence is balanced ('" + matched1 + "' vs '" +
                     matched2 + "'); defaulting to type1 with low confidence. " + kRule;
  }
  return hint;
}

Rational grade_question(const QuestionSpec& spec, const AnswerInput& input) {
  if (spec.has_sub_questions()) {
    if (const int* leaf = std::get_if<int>(&input)) {
      // Only the existence short-circuit is a legal leaf here.
      if (*leaf != 0)
        throw IllegalGradeError(to_string(spec.id) + ": leaf grade " +
                                std::to_string(*leaf) +
                                " not allowed; answer the " +
                                std::to_string(spec.sub_questions.size()) +
                                " sub-questions, or 0 if the graded artifact "
                                "does not exist");
      return Rational(0);
    }
    const auto& subs = std::get<std::vector<int>>(input);
    if (subs.size() != spec.sub_questions.size())
      throw WrongArityError(to_string(spec.id) + ": expected " +
                            std::to_string(spec.sub_questions.size()) +
                            " sub-grades, got " + std::to_string(subs.size()));
    std::vector<Rational> values;
    values.reserve(subs.size());
    for (int v : subs) {
      if (!contains(kSubScale, v))
        throw IllegalGradeError(to_string(spec.id) + ": sub-grade " +
                                std::to_string(v) + " outside {" +
                                join(kSubScale) + "}");
      values.emplace_back(v);
    }
    return mean(values);
  }

  if (std::holds_alternative<std::vector<int>>(input))
    throw WrongArityError(to_string(spec.id) +
                          ": expects a single grade, not a sub-grade list");
  const int leaf = std::get<int>(input);
  if (!contains(spec.allowed_grades, leaf))
    throw IllegalGradeError(to_string(spec.id) + ": grade " +
                            std::to_string(leaf) + " outside {" +
                            join(spec.allowed_grades) + "}");
  return Rational(leaf);
}

bool EvaluationSession::q2_locked() const {
  auto it = answers.find(QuestionId::Q1);
  return it != answers.end() && it->second.grade == Rational(0);
}

EvaluationSession record_answer(EvaluationSession session, QuestionId id,
                                const AnswerInput& input) {
  const QuestionSpec& spec = spec_for(id);
  if (!spec.applies_to(session.ontology_type))
    throw NotApplicableError(to_string(id) + " is not applicable to a " +
                             to_string(session.ontology_type) + " ontology");

  if (id == QuestionId::Q2 && session.q2_locked()) {
    const int* leaf = std::get_if<int>(&input);
    if (leaf == nullptr || *leaf != 0)
      throw Q2LockedError("Q2 is locked to 0 while Q1 is 0: the competencies "
                          "were not defined, so this question cannot be "
                          "evaluated");
    session.answers[QuestionId::Q2] = {0, Rational(0)};
    return session;
  }

  const bool was_locked = session.q2_locked();
  const Rational grade = grade_question(spec, input);
  session.answers[id] = {input, grade};

  if (id == QuestionId::Q1) {
    if (grade == Rational(0)) {
      session.answers[QuestionId::Q2] = {0, Rational(0)};
    } else if (was_locked) {
      // The forced Q2 = 0 loses its meaning once Q1 is regraded; clear it so
      // the evaluator answers Q2 afresh.
      session.answers.erase(QuestionId::Q2);
    }
  }
  return session;
}

std::string to_string(NlPolicy policy) {
  return policy == NlPolicy::Strict ? "strict" : "goal_empty";
}

NlPolicy nl_policy_from_string(const std::string& s) {
  if (s == "strict") return NlPolicy::Strict;
  if (s == "goal_empty") return NlPolicy::GoalEmpty;
  throw ValidationError("unknown nl policy '" + s +
                        "' (expected strict or goal_empty)");
}

int derive_nl(const EvaluationSession& session, NlPolicy policy) {
  const auto applicable = applicable_questions(session.ontology_type);
  if (policy == NlPolicy::Strict) {
    for (QuestionId id : applicable)
      if (!session.answers.count(id)) return 1;
    return 0;
  }
  std::array<int, kGoalCount> unanswered{}, total{};
  for (QuestionId id : applicable) {
    const int g = goal_of(id) - 1;
    ++total[g];
    if (!session.answers.count(id)) ++unanswered[g];
  }
  for (int g = 0; g < kGoalCount; ++g)
    if (total[g] > 0 && unanswered[g] == total[g]) return 1;
  return 0;
}

}  // namespace foca::questionnaire
