#include "ptm/core/validate.hpp"

#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ptm/util/strings.hpp"

namespace ptm::core {

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.rule << " [" << v.entity_id << "]";
    if (!v.detail.empty()) os << ": " << v.detail;
    os << "\n";
  }
  return os.str();
}

namespace {

void check_patients(const std::vector<PatientRecord>& patients,
                    std::vector<Violation>& out) {
  std::unordered_set<std::string> seen;
  for (const auto& p : patients) {
    if (p.patient_id.empty()) {
      out.push_back({"empty patient id", "<anonymous>", ""});
      continue;
    }
    if (!seen.insert(p.patient_id).second)
      out.push_back({"duplicate patient id", p.patient_id, ""});
    for (const auto* list : {&p.diagnoses, &p.medications, &p.procedures}) {
      for (const auto& entry : *list) {
        if (util::normalize_ws(entry).empty()) {
          out.push_back({"empty patient entry", p.patient_id, ""});
          break;
        }
      }
    }
  }
}

void check_trials(const std::vector<Trial>& trials,
                  std::unordered_map<std::string, const Criterion*>& by_id,
                  std::vector<Violation>& out) {
  for (const auto& t : trials) {
    if (t.criteria_count() == 0)
      out.push_back({"empty trial", t.trial_id, "no inclusion or exclusion criteria"});
    auto check_list = [&](const std::vector<Criterion>& list, CriterionKind kind) {
      for (const auto& c : list) {
        if (c.criterion_id.empty()) {
          out.push_back({"empty criterion id", t.trial_id, ""});
          continue;
        }
        if (!by_id.emplace(c.criterion_id, &c).second)
          out.push_back({"duplicate criterion id", c.criterion_id, ""});
        if (util::normalize_ws(c.text).empty())
          out.push_back({"empty criterion text", c.criterion_id, ""});
        if (c.trial_id != t.trial_id)
          out.push_back({"criterion trial mismatch", c.criterion_id,
                         "carries trial_id " + c.trial_id + " inside trial " + t.trial_id});
        if (c.kind != kind)
          out.push_back({"criterion kind mismatch", c.criterion_id,
                         "listed under the wrong section"});
      }
    };
    check_list(t.inclusion, CriterionKind::inclusion);
    check_list(t.exclusion, CriterionKind::exclusion);
  }

  // Augmented criteria must point at an existing original of the same kind.
  for (const auto& t : trials) {
    for (const auto* list : {&t.inclusion, &t.exclusion}) {
      for (const auto& c : *list) {
        if (c.provenance.is_original()) continue;
        auto it = by_id.find(c.provenance.source_criterion_id);
        if (it == by_id.end()) {
          out.push_back({"dangling augmentation source", c.criterion_id,
                         "source " + c.provenance.source_criterion_id + " not found"});
        } else {
          const Criterion* src = it->second;
          if (!src->provenance.is_original())
            out.push_back({"augmentation source not original", c.criterion_id, ""});
          if (src->kind != c.kind)
            out.push_back({"augmentation kind mismatch", c.criterion_id, ""});
        }
      }
    }
  }
}

void check_pairs(const std::vector<PairExample>& pairs,
                 const std::unordered_set<std::string>& patient_ids,
                 const std::unordered_map<std::string, const Criterion*>& criteria,
                 std::vector<Violation>& out) {
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const auto& pr : pairs) {
    std::string pair_key = pr.patient_id + "/" + pr.criterion_id;
    if (!patient_ids.count(pr.patient_id))
      out.push_back({"dangling patient reference", pair_key, ""});
    auto cit = criteria.find(pr.criterion_id);
    if (cit == criteria.end()) {
      out.push_back({"dangling criterion reference", pair_key, ""});
      continue;
    }
    const Criterion* c = cit->second;
    const std::string origin = pr.origin_trial_id.value_or(c->trial_id);
    if (!seen.insert({pr.patient_id, pr.criterion_id, origin}).second)
      out.push_back({"duplicate pair", pair_key, "origin " + origin});
    if (pr.label == MatchLabel::unknown) {
      if (!pr.origin_trial_id.has_value())
        out.push_back({"unknown pair missing origin", pair_key, ""});
      else if (*pr.origin_trial_id == c->trial_id)
        out.push_back({"unknown pair same trial", pair_key,
                       "unknown label requires a criterion from another trial"});
    } else if (pr.origin_trial_id.has_value() && *pr.origin_trial_id != c->trial_id) {
      out.push_back({"labeled pair foreign origin", pair_key,
                     "match/mismatch pairs must originate from the criterion's own trial"});
    }
  }
}

}  // namespace

ValidationReport validate_corpus(const std::vector<PatientRecord>& patients,
                                 const std::vector<Trial>& trials,
                                 const std::vector<PairExample>& pairs) {
  ValidationReport report;
  check_patients(patients, report.violations);

  std::unordered_map<std::string, const Criterion*> criteria_by_id;
  check_trials(trials, criteria_by_id, report.violations);

  std::unordered_set<std::string> patient_ids;
  for (const auto& p : patients) patient_ids.insert(p.patient_id);
  check_pairs(pairs, patient_ids, criteria_by_id, report.violations);

  return report;
}

}  // namespace ptm::core
