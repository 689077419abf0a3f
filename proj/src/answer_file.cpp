#include "foca/answer_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace foca::questionnaire {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& source, const std::string& message) {
  throw SchemaError(source + ": " + message);
}

int require_int(const ordered_json& j, const std::string& source,
                const std::string& what) {
  if (!j.is_number_integer())
    fail(source, what + " must be an integer");
  return j.get<int>();
}

}  // namespace

AnswerDocument parse_answer_json(const std::string& text,
                                 const std::string& source_name) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(source_name, std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) fail(source_name, "top level must be an object");

  static const std::set<std::string> kKnownKeys = {
      "ontology_id", "ontology_type", "lexp", "answers", "notes", "incomplete"};
  for (const auto& [key, _] : root.items())
    if (!kKnownKeys.count(key)) fail(source_name, "unknown key '" + key + "'");
  for (const char* required : {"ontology_id", "ontology_type", "lexp", "answers"})
    if (!root.contains(required))
      fail(source_name, std::string("missing key '") + required + "'");

  AnswerDocument doc;
  if (!root["ontology_id"].is_string())
    fail(source_name, "ontology_id must be a string");
  doc.session.ontology_id = root["ontology_id"].get<std::string>();

  if (!root["ontology_type"].is_string())
    fail(source_name, "ontology_type must be a string");
  try {
    doc.session.ontology_type =
        ontology_type_from_string(root["ontology_type"].get<std::string>());
  } catch (const ValidationError& e) {
    fail(source_name, e.what());
  }

  const int lexp = require_int(root["lexp"], source_name, "lexp");
  if (lexp != 0 && lexp != 1) fail(source_name, "lexp must be 0 or 1");
  doc.session.lexp = lexp;

  if (!root["answers"].is_object())
    fail(source_name, "answers must be an object");
  std::map<QuestionId, AnswerInput> inputs;
  for (const auto& [key, value] : root["answers"].items()) {
    const auto id = question_from_string(key);
    if (!id) fail(source_name, "answers: unknown question id '" + key + "'");
    if (!value.is_object())
      fail(source_name, "answers." + key + " must be an object");
    const bool has_grade = value.contains("grade");
    const bool has_subs = value.contains("subs");
    if (has_grade == has_subs)
      fail(source_name, "answers." + key +
                            " must carry exactly one of 'grade' or 'subs'");
    for (const auto& [k, _] : value.items())
      if (k != "grade" && k != "subs")
        fail(source_name, "answers." + key + ": unknown key '" + k + "'");
    if (has_grade) {
      inputs[*id] = require_int(value["grade"], source_name,
                                "answers." + key + ".grade");
    } else {
      if (!value["subs"].is_array())
        fail(source_name, "answers." + key + ".subs must be an array");
      std::vector<int> subs;
      for (const auto& s : value["subs"])
        subs.push_back(require_int(s, source_name, "answers." + key + ".subs[]"));
      inputs[*id] = subs;
    }
  }
  // Replay in catalog order so the Q1 = 0 lock is in place before Q2 loads.
  for (QuestionId id : kAllQuestions) {
    auto it = inputs.find(id);
    if (it == inputs.end()) continue;
    try {
      doc.session = record_answer(doc.session, id, it->second);
    } catch (const ValidationError& e) {
      fail(source_name, std::string("answers.") + to_string(id) + ": " + e.what());
    }
  }

  if (root.contains("notes")) {
    if (!root["notes"].is_object()) fail(source_name, "notes must be an object");
    for (const auto& [key, value] : root["notes"].items()) {
      const auto id = question_from_string(key);
      if (!id) fail(source_name, "notes: unknown question id '" + key + "'");
      if (!value.is_string())
        fail(source_name, "notes." + key + " must be a string");
      doc.session.notes[*id] = value.get<std::string>();
    }
  }

  if (root.contains("incomplete")) {
    if (!root["incomplete"].is_boolean())
      fail(source_name, "incomplete must be a boolean");
    doc.incomplete = root["incomplete"].get<bool>();
  }
  return doc;
}

AnswerDocument read_answer_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_answer_json(buffer.str(), path);
}

std::string to_answer_json(const AnswerDocument& doc) {
  ordered_json root;
  root["ontology_id"] = doc.session.ontology_id;
  root["ontology_type"] = to_string(doc.session.ontology_type);
  root["lexp"] = doc.session.lexp;
  ordered_json answers = ordered_json::object();
  for (QuestionId id : kAllQuestions) {
    auto it = doc.session.answers.find(id);
    if (it == doc.session.answers.end()) continue;
    ordered_json entry;
    if (const auto* subs = std::get_if<std::vector<int>>(&it->second.input))
      entry["subs"] = *subs;
    else
      entry["grade"] = std::get<int>(it->second.input);
    answers[to_string(id)] = entry;
  }
  root["answers"] = answers;
  if (!doc.session.notes.empty()) {
    ordered_json notes = ordered_json::object();
    for (QuestionId id : kAllQuestions) {
      auto it = doc.session.notes.find(id);
      if (it != doc.session.notes.end()) notes[to_string(id)] = it->second;
    }
    root["notes"] = notes;
  }
  if (doc.incomplete) root["incomplete"] = true;
  return root.dump(2) + "\n";
}

void write_answer_file(const AnswerDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SchemaError(path + ": cannot open file for writing");
  out << to_answer_json(doc);
}

}  // namespace foca::questionnaire
