#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ptm/core/types.hpp"

namespace ptm::core {

/// JSONL corpus files inside a directory. Canonical serialization: one
/// object per line, keys in schema order, no trailing whitespace, "\n"
/// line endings. save_corpus then load_corpus is identity on validated
/// corpora.
struct CorpusPaths {
  std::filesystem::path patients;
  std::filesystem::path trials;
  std::filesystem::path pairs;

  static CorpusPaths in_dir(const std::filesystem::path& dir) {
    return {dir / "patients.jsonl", dir / "trials.jsonl", dir / "pairs.jsonl"};
  }
};

std::vector<PatientRecord> load_patients(const std::filesystem::path& path);
std::vector<Trial> load_trials(const std::filesystem::path& path);
std::vector<PairExample> load_pairs(const std::filesystem::path& path);

void save_patients(const std::vector<PatientRecord>& patients,
                   const std::filesystem::path& path);
void save_trials(const std::vector<Trial>& trials,
                 const std::filesystem::path& path);
void save_pairs(const std::vector<PairExample>& pairs,
                const std::filesystem::path& path);

Corpus load_corpus(const CorpusPaths& paths);
void save_corpus(const Corpus& corpus, const CorpusPaths& paths);

inline Corpus load_corpus(const std::filesystem::path& dir) {
  return load_corpus(CorpusPaths::in_dir(dir));
}
inline void save_corpus(const Corpus& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  save_corpus(corpus, CorpusPaths::in_dir(dir));
}

}  // namespace ptm::core
