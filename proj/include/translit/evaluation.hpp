#ifndef TRANSLIT_EVALUATION_HPP
#define TRANSLIT_EVALUATION_HPP

#include "translit/corpus.hpp"
#include "translit/generation.hpp"
#include "translit/model.hpp"

#include <string>
#include <vector>

namespace translit {

// Unit-cost edit distance (insert/delete/substitute) <= 1.
bool levenshtein1(const std::string& hyp, const std::string& ref);

// Gold appears among the first k candidate texts (exact match).
bool topk_hit(const std::vector<Candidate>& cands, const std::string& gold, size_t k);

struct Report {
  std::vector<std::pair<size_t, double>> topk_pct; // (k, percentage)
  double lev1_pct = 0.0;
  size_t items = 0;
};

// Generate candidates for every test pair and score Top-k per k plus the
// Levenshtein-1 rate of the rank-1 candidate.
Report evaluate(const TransliterationModel& m, const PairCorpus& test,
                const std::vector<size_t>& k_list = {1, 20, 100});

void write_report_csv(const Report& r, const std::string& path);
std::string format_report_table(const Report& r);

// CSV cost matrix over single-character pairs: header row of target chars,
// one row per source char.
void export_heatmap(const TransliterationModel& m, const std::vector<std::string>& chars_src,
                    const std::vector<std::string>& chars_tgt, const std::string& path);

} // namespace translit

#endif
