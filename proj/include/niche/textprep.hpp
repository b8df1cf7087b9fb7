#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace niche {

struct TokenizedDoc {
  std::string app_id;
  std::vector<std::string> tokens;  // lowercase stems, letters only
};

struct Exclusion {
  std::string app_id;
  std::string reason;  // "empty" | "non-english" | "too-short" | "too-long"
};

// Lowercase, strip punctuation and numerals, whitespace-split, Porter-stem.
// Rejects documents whose share of basic-Latin letters among all letter-like
// characters falls below 0.8 (reason "non-english"), and empty ones.
std::optional<TokenizedDoc> clean_description(const std::string& app_id,
                                              const std::string& text,
                                              std::vector<Exclusion>& exclusions);

struct CleanResult {
  std::vector<TokenizedDoc> docs;
  std::vector<Exclusion> exclusions;
};

CleanResult clean_corpus(const std::vector<std::pair<std::string, std::string>>& texts);

struct WordCountHistogram {
  std::size_t bin_width = 25;
  std::vector<std::size_t> counts;  // bin i covers [i*w, (i+1)*w)
};

WordCountHistogram word_count_histogram(const std::vector<TokenizedDoc>& docs,
                                        std::size_t bin_width = 25);

// Keep docs with min_words <= |tokens| <= max_words (bounds inclusive);
// dropped docs are appended to exclusions.
std::vector<TokenizedDoc> filter_by_length(const std::vector<TokenizedDoc>& docs,
                                           std::size_t min_words,
                                           std::size_t max_words,
                                           std::vector<Exclusion>& exclusions);

struct Vocabulary {
  std::vector<std::string> terms;         // lexicographic
  std::map<std::string, std::size_t> df;  // term -> documents containing it
  std::size_t n_docs = 0;

  std::size_t size() const { return terms.size(); }
};

Vocabulary build_vocabulary(const std::vector<TokenizedDoc>& docs);

// Keep terms with threshold_min <= df/N <= threshold_max; both boundaries
// inclusive.
Vocabulary prune_vocabulary(const Vocabulary& vocab, double threshold_min,
                            double threshold_max);

struct SweepRow {
  double threshold_min;
  double threshold_max;
  std::size_t columns;
};

std::vector<SweepRow> threshold_sweep(const Vocabulary& vocab,
                                      const std::vector<double>& min_grid,
                                      const std::vector<double>& max_grid);

}  // namespace niche
