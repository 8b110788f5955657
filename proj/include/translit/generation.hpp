#ifndef TRANSLIT_GENERATION_HPP
#define TRANSLIT_GENERATION_HPP

#include "translit/align.hpp"
#include "translit/model.hpp"

#include <string>
#include <vector>

namespace translit {

struct Candidate {
  std::string text; // UTF-8 target string
  double cost = 0.0;
  Alignment segmentation;
};

// The k cheapest distinct target strings by alignment cost, exact within the
// cost bound len(word) + bmax (bmax < 0 means len(word)). Best-first search
// over states (source position, emitted string); edges are stored pairs that
// match the source at this position, stored insertions, and the default
// single-character deletion / identity / target-alphabet insertion moves.
// Sorted by (cost, text); duplicates merged keeping minimum cost.
std::vector<Candidate> construct_topk(const TransliterationModel& m, const std::string& word,
                                      size_t k, double bmax = -1.0);

// Route word through English: beam intermediates under m1 (source -> EN), each
// expanded under m2 (EN -> target); total cost is the sum of leg costs.
std::vector<Candidate> pivot_topk(const TransliterationModel& m1, const TransliterationModel& m2,
                                  const std::string& word, size_t k, size_t beam = 0);

} // namespace translit

#endif
