#pragma once

#include <string>

#include "foca/questionnaire.hpp"

namespace foca::questionnaire {

/// Malformed answer file: bad JSON, unknown keys, wrong value shapes, or a
/// session that violates applicability/locking rules (the offending question
/// is named in the message).
struct SchemaError : ValidationError {
  using ValidationError::ValidationError;
};

/// A session plus the file-level incomplete marker written when an
/// evaluation wizard run was aborted before all questions were seen.
struct AnswerDocument {
  EvaluationSession session;
  bool incomplete = false;
};

/// Interchange format:
///   {
///     "ontology_id": "...",
///     "ontology_type": "type1" | "type2",
///     "lexp": 0 | 1,
///     "answers": { "Q1": {"subs": [25,50,100]}, "Q4": {"grade": 25}, ... },
///     "notes": { "Q9": "..." },        // optional
///     "incomplete": true               // optional, default false
///   }
/// Unknown keys are rejected. Answers replay through record_answer in
/// catalog order, so every session invariant is enforced on load.
AnswerDocument parse_answer_json(const std::string& text,
                                 const std::string& source_name = "<string>");
AnswerDocument read_answer_file(const std::string& path);

std::string to_answer_json(const AnswerDocument& doc);
void write_answer_file(const AnswerDocument& doc, const std::string& path);

}  // namespace foca::questionnaire
