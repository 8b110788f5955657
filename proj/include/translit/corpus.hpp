#ifndef TRANSLIT_CORPUS_HPP
#define TRANSLIT_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace translit {

struct NormConfig {
  bool lowercase = true;
  bool punctuation_to_underscore = true;
  bool strip_outer_whitespace = true;
};

enum class Split : uint8_t { train, tune, test };

struct PairCorpus {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string source_lang;
  std::string target_lang;
  std::vector<Split> split_tags; // one per pair; empty until split_corpus

  size_t size() const { return pairs.size(); }
};

struct Lexicon {
  std::vector<std::string> words; // frequency-descending
  std::string language;
};

struct RejectRecord {
  size_t line;        // 1-based input position
  std::string reason; // e.g. "empty side", "duplicate", "token count"
  std::string content;
};

struct CleanReport {
  size_t kept = 0;
  size_t dropped = 0;
  std::vector<RejectRecord> rejects;
};

// Lowercase, compose, map hyphen/period/comma to '_', collapse runs of '_'
// and strip them from the ends. Total and idempotent.
std::string normalize_text(const std::string& s, const NormConfig& cfg = {});

// Normalize every pair, drop pairs with an empty side or more than 3
// underscore/space-separated tokens per side, dedup exact normalized pairs
// (first occurrence wins).
PairCorpus clean_corpus(const std::vector<std::pair<std::string, std::string>>& raw,
                        const NormConfig& cfg, CleanReport* report = nullptr);

// Deterministic 80/10/10 assignment; same seed, same tags.
void split_corpus(PairCorpus& corpus, uint64_t seed);

// One word per line, descending frequency; '#' comments and blank lines
// skipped. Duplicate normalized words keep their first (most frequent) slot.
Lexicon load_lexicon(const std::string& path, const std::string& language = "",
                     const NormConfig& cfg = {});

// UTF-8 TSV `source<TAB>target`; '#' comment lines ignored. Malformed lines
// go to `report` when given, otherwise raise.
std::vector<std::pair<std::string, std::string>> load_pairs(const std::string& path,
                                                            CleanReport* report = nullptr);

} // namespace translit

#endif
