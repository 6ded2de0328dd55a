#include "ptm/core/types.hpp"

namespace ptm::core {

std::vector<std::string> PatientRecord::all_entries() const {
  std::vector<std::string> out;
  out.reserve(entry_count());
  out.insert(out.end(), diagnoses.begin(), diagnoses.end());
  out.insert(out.end(), medications.begin(), medications.end());
  out.insert(out.end(), procedures.begin(), procedures.end());
  return out;
}

const char* to_string(CriterionKind kind) {
  return kind == CriterionKind::inclusion ? "inclusion" : "exclusion";
}

CriterionKind parse_criterion_kind(const std::string& token) {
  if (token == "inclusion") return CriterionKind::inclusion;
  if (token == "exclusion") return CriterionKind::exclusion;
  throw parse_error("unknown criterion kind token \"" + token + "\"");
}

std::vector<const Criterion*> Trial::original_criteria() const {
  std::vector<const Criterion*> out;
  for (const auto& c : inclusion)
    if (c.provenance.is_original()) out.push_back(&c);
  for (const auto& c : exclusion)
    if (c.provenance.is_original()) out.push_back(&c);
  return out;
}

const Criterion* Trial::find_criterion(const std::string& criterion_id) const {
  for (const auto& c : inclusion)
    if (c.criterion_id == criterion_id) return &c;
  for (const auto& c : exclusion)
    if (c.criterion_id == criterion_id) return &c;
  return nullptr;
}

const char* to_string(MatchLabel label) {
  switch (label) {
    case MatchLabel::match: return "match";
    case MatchLabel::mismatch: return "mismatch";
    case MatchLabel::unknown: return "unknown";
  }
  return "unknown";
}

MatchLabel parse_match_label(const std::string& token) {
  if (token == "match") return MatchLabel::match;
  if (token == "mismatch") return MatchLabel::mismatch;
  if (token == "unknown") return MatchLabel::unknown;
  throw parse_error("unknown label token \"" + token + "\"");
}

const PatientRecord* Corpus::find_patient(const std::string& id) const {
  for (const auto& p : patients)
    if (p.patient_id == id) return &p;
  return nullptr;
}

const Trial* Corpus::find_trial(const std::string& id) const {
  for (const auto& t : trials)
    if (t.trial_id == id) return &t;
  return nullptr;
}

const Criterion* Corpus::find_criterion(const std::string& id) const {
  for (const auto& t : trials) {
    if (const Criterion* c = t.find_criterion(id)) return c;
  }
  return nullptr;
}

}  // namespace ptm::core
