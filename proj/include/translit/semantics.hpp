#ifndef TRANSLIT_SEMANTICS_HPP
#define TRANSLIT_SEMANTICS_HPP

#include "translit/align.hpp"
#include "translit/corpus.hpp"
#include "translit/model.hpp"

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace translit {

class EmbeddingTable {
 public:
  std::string language;
  int dim = 0;

  void add(const std::string& word, std::vector<float> vec);
  bool contains(const std::string& word) const { return index_.count(word) != 0; }
  size_t size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }
  const float* vector_of(const std::string& word) const;

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, size_t> index_;
  std::vector<float> data_;
};

// Text format: first line `V D`, then `word v1 ... vD`.
EmbeddingTable load_embeddings(const std::string& path, const std::string& language = "");

struct TranslationDict {
  std::unordered_set<std::string> pairs; // "src\ttgt"
  bool has(const std::string& src, const std::string& tgt) const {
    return pairs.count(src + "\t" + tgt) != 0;
  }
};

TranslationDict load_dict(const std::string& path);

enum class FriendClass { TP, EP, B, N };
const char* to_string(FriendClass c);
FriendClass classify(bool has_translation, bool passes_embedding);

struct FriendRecord {
  std::string w_src, w_tgt;
  double lex_cost = 0.0;
  bool has_translation = false;
  bool passes_embedding = false;
  int link_count = 0;
  FriendClass cls = FriendClass::N;
};

// The n words nearest to w by Euclidean distance, w itself excluded; ties in
// distance break lexicographically. Throws if w is absent.
std::vector<std::string> nearest_neighbors(const EmbeddingTable& e, const std::string& w,
                                           size_t n = 300);

// Count dictionary links between the two neighborhoods; pass when the count
// reaches tau. Fails closed (false, 0) when either word lacks a vector.
std::pair<bool, int> embedding_test(const std::string& w1, const std::string& w2,
                                    const EmbeddingTable& e1, const EmbeddingTable& e2,
                                    const TranslationDict& dict, size_t n = 300, int tau = 3);

struct ScanConfig {
  double d_max = 2.0;        // cohort A: alignment cost <= d_max
  size_t next_cohort = 10000; // cohort B: next pairs by ascending cost
  size_t min_len = 5;        // minimum word length per side (characters)
  size_t nn = 300;
  int tau = 3;
};

struct CohortSummary {
  size_t size_a = 0, size_b = 0;
  double translation_fraction_a = 0.0, translation_fraction_b = 0.0;
  // Same fractions after dropping records below the cohort's median link count.
  double pruned_fraction_a = 0.0, pruned_fraction_b = 0.0;
};

struct ScanResult {
  std::vector<FriendRecord> records; // cohort A then cohort B, ascending cost
  CohortSummary summary;
};

ScanResult scan_friends(const TransliterationModel& m, const Lexicon& lex_src,
                        const Lexicon& lex_tgt, const TranslationDict& dict,
                        const EmbeddingTable& e_src, const EmbeddingTable& e_tgt,
                        const ScanConfig& cfg = {});

struct ClassCounts {
  size_t tp = 0, ep = 0, b = 0, n = 0;
  size_t total() const { return tp + ep + b + n; }
  double quality_ratio() const { return b + tp == 0 ? 0.0 : static_cast<double>(b) / (b + tp); }
};

ClassCounts classify_counts(const std::vector<FriendRecord>& records);
void write_class_counts_csv(const ClassCounts& c, const std::string& path);

// Predict "true friend" iff the record passed either semantic test; score
// against disjoint gold sets of pair keys "src\ttgt". Gold-true pairs with no
// record count as misses.
std::pair<double, double> eval_gold(const std::vector<FriendRecord>& records,
                                    const std::unordered_set<std::string>& gold_true,
                                    const std::unordered_set<std::string>& gold_false);

void write_friends_tsv(const std::vector<FriendRecord>& records, const std::string& path);

} // namespace translit

#endif
