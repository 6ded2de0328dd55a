#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptm/util/error.hpp"

namespace ptm::core {

/// One patient's claims history as free-text entries, grouped by category.
/// Entries are normalized strings; lists may be empty but never null.
struct PatientRecord {
  std::string patient_id;
  std::vector<std::string> diagnoses;
  std::vector<std::string> medications;
  std::vector<std::string> procedures;

  std::size_t entry_count() const {
    return diagnoses.size() + medications.size() + procedures.size();
  }

  /// Entries concatenated in category order: diagnoses, medications,
  /// procedures. This is the memory-slot order for the patient encoder.
  std::vector<std::string> all_entries() const;

  bool operator==(const PatientRecord&) const = default;
};

enum class CriterionKind { inclusion, exclusion };

const char* to_string(CriterionKind kind);
CriterionKind parse_criterion_kind(const std::string& token);

/// Where a criterion came from: written by the trial, or produced by an
/// augmenter from some original criterion.
struct Provenance {
  enum class Kind { original, augmented };
  Kind kind = Kind::original;
  std::string source_criterion_id;  // augmented only
  std::string method_tag;           // augmented only: llm | swap_word | ...

  static Provenance original() { return {}; }
  static Provenance augmented(std::string source_id, std::string method) {
    return {Kind::augmented, std::move(source_id), std::move(method)};
  }

  bool is_original() const { return kind == Kind::original; }
  bool operator==(const Provenance&) const = default;
};

/// A single eligibility statement. `text` is stored normalized.
struct Criterion {
  std::string criterion_id;
  std::string trial_id;
  CriterionKind kind = CriterionKind::inclusion;
  std::string text;
  Provenance provenance;

  bool operator==(const Criterion&) const = default;
};

struct Trial {
  std::string trial_id;
  std::vector<Criterion> inclusion;
  std::vector<Criterion> exclusion;

  std::size_t criteria_count() const { return inclusion.size() + exclusion.size(); }

  /// Original (non-augmented) criteria of both kinds, inclusion first.
  std::vector<const Criterion*> original_criteria() const;

  const Criterion* find_criterion(const std::string& criterion_id) const;

  bool operator==(const Trial&) const = default;
};

/// Three-class outcome of criteria-level matching. "match" means the
/// criterion's textual condition holds for the patient, for both kinds.
enum class MatchLabel { match, mismatch, unknown };

const char* to_string(MatchLabel label);

/// Strict parse; throws on any token that is not exactly the lowercase name.
MatchLabel parse_match_label(const std::string& token);

/// One labeled (patient, criterion) instance. `origin_trial_id` is the trial
/// group the pair was generated under; it differs from the criterion's own
/// trial exactly for unknown-labeled pairs, and it is part of pair identity
/// (the same criterion can appear once as gold within its own trial and once
/// as an injected unknown under another trial).
struct PairExample {
  std::string patient_id;
  std::string criterion_id;
  MatchLabel label = MatchLabel::mismatch;
  std::optional<std::string> split_tag;
  std::optional<std::string> origin_trial_id;

  bool operator==(const PairExample&) const = default;
};

struct Corpus {
  std::vector<PatientRecord> patients;
  std::vector<Trial> trials;
  std::vector<PairExample> pairs;

  const PatientRecord* find_patient(const std::string& id) const;
  const Trial* find_trial(const std::string& id) const;
  const Criterion* find_criterion(const std::string& id) const;

  bool operator==(const Corpus&) const = default;
};

}  // namespace ptm::core
