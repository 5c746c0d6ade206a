#pragma once

#include <map>
#include <string>
#include <vector>

#include "amptk/errors.hpp"
#include "amptk/types.hpp"

namespace amptk {

struct PeptideRecord {
  std::string id;
  std::string sequence;  // uppercase, canonical 20-letter alphabet
  int label = 0;         // 1 = active, 0 = inactive

  friend bool operator==(const PeptideRecord&, const PeptideRecord&) = default;
};

struct Dataset {
  std::string name;
  std::vector<PeptideRecord> records;
  long n_pos = 0;
  long n_neg = 0;
  std::vector<std::string> warnings;  // registry count mismatches and the like

  void recount();
};

// Expected sizes per dataset name. Names may carry several candidate rows
// (the published size table lists some datasets twice with different sizes);
// a loaded dataset matches if it agrees with any row.
struct DatasetRegistry {
  struct Sizes {
    long total = 0;
    long n_pos = 0;
    long n_neg = 0;
  };
  std::map<std::string, std::vector<Sizes>> entries;

  static DatasetRegistry builtin();
  const std::vector<Sizes>* find(const std::string& name) const;
};

// Uppercases and checks against the canonical alphabet. Throws
// ValidationError carrying the 0-based offending index.
std::string validate_sequence(const std::string& raw);

// FASTA with labels as a trailing `|0` / `|1` header token:  >id|label
std::vector<PeptideRecord> parse_fasta(const std::string& text);

// CSV with header `id,sequence,label`.
std::vector<PeptideRecord> parse_labeled_csv(const std::string& text);

std::string to_labeled_csv(const std::vector<PeptideRecord>& records);
std::string to_fasta(const std::vector<PeptideRecord>& records);

// Parses by file extension (.fasta/.fa/.faa vs .csv), recomputes class
// counts, and attaches a warning when a registered name disagrees on sizes.
Dataset load_dataset(const std::string& name, const std::string& path,
                     const DatasetRegistry& registry);

Dataset make_dataset(std::string name, std::vector<PeptideRecord> records);

}  // namespace amptk
