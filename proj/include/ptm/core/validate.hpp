#pragma once

#include <string>
#include <vector>

#include "ptm/core/types.hpp"

namespace ptm::core {

struct Violation {
  std::string rule;       // stable machine-readable rule name
  std::string entity_id;  // offending patient/criterion/trial/pair key
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks every corpus invariant and returns the violations found.
/// Violations are data, not exceptions; the input is never mutated and the
/// function is pure (same corpus, same report).
///
/// Rules emitted:
///   empty patient id / duplicate patient id / empty patient entry
///   empty criterion id / duplicate criterion id / empty criterion text
///   criterion trial mismatch / dangling augmentation source /
///   augmentation kind mismatch / empty trial
///   dangling patient reference / dangling criterion reference /
///   duplicate pair / unknown pair missing origin / unknown pair same trial /
///   labeled pair foreign origin
ValidationReport validate_corpus(const std::vector<PatientRecord>& patients,
                                 const std::vector<Trial>& trials,
                                 const std::vector<PairExample>& pairs);

inline ValidationReport validate_corpus(const Corpus& corpus) {
  return validate_corpus(corpus.patients, corpus.trials, corpus.pairs);
}

}  // namespace ptm::core
