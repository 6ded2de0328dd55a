#include "ptm/core/corpus_io.hpp"

#include <fstream>
#include <functional>

#include <json.hpp>

#include "ptm/util/error.hpp"

namespace ptm::core {

using json = nlohmann::ordered_json;

namespace {

void for_each_line(const std::filesystem::path& path,
                   const std::function<void(std::size_t, const json&)>& fn) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception& e) {
      throw parse_error(path.string() + ":" + std::to_string(line_no) +
                        ": malformed JSON line (" + e.what() + ")");
    }
    try {
      fn(line_no, obj);
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw parse_error(path.string() + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

std::string require_string(const json& obj, const char* field,
                           const std::filesystem::path& path, std::size_t line_no) {
  if (!obj.contains(field) || !obj[field].is_string())
    throw parse_error(path.string() + ":" + std::to_string(line_no) +
                      ": missing or non-string field \"" + field + "\"");
  return obj[field].get<std::string>();
}

std::vector<std::string> require_string_list(const json& obj, const char* field,
                                             const std::filesystem::path& path,
                                             std::size_t line_no) {
  if (!obj.contains(field) || !obj[field].is_array())
    throw parse_error(path.string() + ":" + std::to_string(line_no) +
                      ": missing or non-array field \"" + field + "\"");
  std::vector<std::string> out;
  for (const auto& item : obj[field]) {
    if (!item.is_string())
      throw parse_error(path.string() + ":" + std::to_string(line_no) +
                        ": non-string entry in \"" + field + "\"");
    out.push_back(item.get<std::string>());
  }
  return out;
}

json provenance_to_json(const Provenance& p) {
  json obj;
  if (p.is_original()) {
    obj["kind"] = "original";
  } else {
    obj["kind"] = "augmented";
    obj["source_criterion_id"] = p.source_criterion_id;
    obj["method_tag"] = p.method_tag;
  }
  return obj;
}

Provenance provenance_from_json(const json& obj, const std::filesystem::path& path,
                                std::size_t line_no) {
  std::string kind = require_string(obj, "kind", path, line_no);
  if (kind == "original") return Provenance::original();
  if (kind == "augmented")
    return Provenance::augmented(require_string(obj, "source_criterion_id", path, line_no),
                                 require_string(obj, "method_tag", path, line_no));
  throw parse_error(path.string() + ":" + std::to_string(line_no) +
                    ": unknown provenance kind token \"" + kind + "\"");
}

json criterion_to_json(const Criterion& c) {
  json obj;
  obj["criterion_id"] = c.criterion_id;
  obj["text"] = c.text;
  obj["provenance"] = provenance_to_json(c.provenance);
  return obj;
}

Criterion criterion_from_json(const json& obj, const std::string& trial_id,
                              CriterionKind kind, const std::filesystem::path& path,
                              std::size_t line_no) {
  Criterion c;
  c.criterion_id = require_string(obj, "criterion_id", path, line_no);
  c.trial_id = trial_id;
  c.kind = kind;
  c.text = require_string(obj, "text", path, line_no);
  if (obj.contains("provenance"))
    c.provenance = provenance_from_json(obj["provenance"], path, line_no);
  return c;
}

void write_lines(const std::filesystem::path& path, const std::vector<json>& lines) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw input_error("cannot write " + path.string());
  for (const auto& obj : lines) out << obj.dump() << "\n";
}

}  // namespace

std::vector<PatientRecord> load_patients(const std::filesystem::path& path) {
  std::vector<PatientRecord> out;
  for_each_line(path, [&](std::size_t line_no, const json& obj) {
    PatientRecord p;
    p.patient_id = require_string(obj, "patient_id", path, line_no);
    p.diagnoses = require_string_list(obj, "diagnoses", path, line_no);
    p.medications = require_string_list(obj, "medications", path, line_no);
    p.procedures = require_string_list(obj, "procedures", path, line_no);
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<Trial> load_trials(const std::filesystem::path& path) {
  std::vector<Trial> out;
  for_each_line(path, [&](std::size_t line_no, const json& obj) {
    Trial t;
    t.trial_id = require_string(obj, "trial_id", path, line_no);
    for (const char* section : {"inclusion", "exclusion"}) {
      if (!obj.contains(section) || !obj[section].is_array())
        throw parse_error(path.string() + ":" + std::to_string(line_no) +
                          ": missing or non-array field \"" + std::string(section) + "\"");
      CriterionKind kind = section == std::string("inclusion") ? CriterionKind::inclusion
                                                               : CriterionKind::exclusion;
      auto& list = kind == CriterionKind::inclusion ? t.inclusion : t.exclusion;
      for (const auto& item : obj[section])
        list.push_back(criterion_from_json(item, t.trial_id, kind, path, line_no));
    }
    out.push_back(std::move(t));
  });
  return out;
}

std::vector<PairExample> load_pairs(const std::filesystem::path& path) {
  std::vector<PairExample> out;
  for_each_line(path, [&](std::size_t line_no, const json& obj) {
    PairExample pr;
    pr.patient_id = require_string(obj, "patient_id", path, line_no);
    pr.criterion_id = require_string(obj, "criterion_id", path, line_no);
    const std::string token = require_string(obj, "label", path, line_no);
    try {
      pr.label = parse_match_label(token);
    } catch (const Error&) {
      throw parse_error(path.string() + ": unknown label token \"" + token +
                        "\" at line " + std::to_string(line_no));
    }
    if (obj.contains("split_tag") && !obj["split_tag"].is_null())
      pr.split_tag = obj["split_tag"].get<std::string>();
    if (obj.contains("origin_trial_id") && !obj["origin_trial_id"].is_null())
      pr.origin_trial_id = obj["origin_trial_id"].get<std::string>();
    out.push_back(std::move(pr));
  });
  return out;
}

void save_patients(const std::vector<PatientRecord>& patients,
                   const std::filesystem::path& path) {
  std::vector<json> lines;
  lines.reserve(patients.size());
  for (const auto& p : patients) {
    json obj;
    obj["patient_id"] = p.patient_id;
    obj["diagnoses"] = p.diagnoses;
    obj["medications"] = p.medications;
    obj["procedures"] = p.procedures;
    lines.push_back(std::move(obj));
  }
  write_lines(path, lines);
}

void save_trials(const std::vector<Trial>& trials, const std::filesystem::path& path) {
  std::vector<json> lines;
  lines.reserve(trials.size());
  for (const auto& t : trials) {
    json obj;
    obj["trial_id"] = t.trial_id;
    obj["inclusion"] = json::array();
    for (const auto& c : t.inclusion) obj["inclusion"].push_back(criterion_to_json(c));
    obj["exclusion"] = json::array();
    for (const auto& c : t.exclusion) obj["exclusion"].push_back(criterion_to_json(c));
    lines.push_back(std::move(obj));
  }
  write_lines(path, lines);
}

void save_pairs(const std::vector<PairExample>& pairs, const std::filesystem::path& path) {
  std::vector<json> lines;
  lines.reserve(pairs.size());
  for (const auto& pr : pairs) {
    json obj;
    obj["patient_id"] = pr.patient_id;
    obj["criterion_id"] = pr.criterion_id;
    obj["label"] = to_string(pr.label);
    obj["split_tag"] = pr.split_tag.has_value() ? json(*pr.split_tag) : json(nullptr);
    if (pr.origin_trial_id.has_value()) obj["origin_trial_id"] = *pr.origin_trial_id;
    lines.push_back(std::move(obj));
  }
  write_lines(path, lines);
}

Corpus load_corpus(const CorpusPaths& paths) {
  Corpus corpus;
  corpus.patients = load_patients(paths.patients);
  corpus.trials = load_trials(paths.trials);
  corpus.pairs = load_pairs(paths.pairs);
  return corpus;
}

void save_corpus(const Corpus& corpus, const CorpusPaths& paths) {
  save_patients(corpus.patients, paths.patients);
  save_trials(corpus.trials, paths.trials);
  save_pairs(corpus.pairs, paths.pairs);
}

}  // namespace ptm::core
