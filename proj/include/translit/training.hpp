#ifndef TRANSLIT_TRAINING_HPP
#define TRANSLIT_TRAINING_HPP

#include "translit/align.hpp"
#include "translit/corpus.hpp"
#include "translit/model.hpp"

#include <cstdint>
#include <unordered_map>

namespace translit {

struct TrainConfig {
  int rounds = 10;
  int lmax = 3;
  double alpha = 1.0;      // smoothing pseudo-count
  double delta_flaw = 0.5; // see is_flawed
  double cost_floor = 0.01;
  bool early_stop = true;  // stop when dirtiness moves < 0.1 points
};

struct PiecePairHash {
  size_t operator()(const PiecePair& p) const {
    size_t h = std::hash<std::u32string>{}(p.src);
    return h ^ (std::hash<std::u32string>{}(p.tgt) + 0x9E3779B97F4A7C15ull + (h << 6));
  }
};

struct ObservationTable {
  std::unordered_map<PiecePair, int64_t, PiecePairHash> counts;
  std::unordered_map<std::u32string, int64_t> src_totals; // marginal per source piece
  int64_t grand_total = 0;

  void add(const PiecePair& p, int64_t n) {
    counts[p] += n;
    src_totals[p.src] += n;
    grand_total += n;
  }
};

struct RoundStats {
  int round_index = 0;
  double mean_alignment_cost = 0.0;
  double dirtiness = 0.0; // fraction of flawed training pairs
  size_t distinct_pairs_observed = 0;
};

// Align every train pair under `m` and count matched piece pairs. Flawed
// pairs contribute no counts, except on a fresh model (rounds_trained == 0)
// where everything is flawed by construction and counting all pairs is the
// only way to bootstrap.
std::pair<ObservationTable, RoundStats> run_round(const TransliterationModel& m,
                                                  const PairCorpus& corpus,
                                                  const TrainConfig& cfg = {});

// Bayesian re-estimate: p(pair) smoothed with a length-based base measure,
// mapped to a cost proportional to piece length, with a pair seen exactly
// once pinned just under its initialization (one sighting proves nothing).
// Unobserved pairs keep their current cost.
TransliterationModel update_costs(const TransliterationModel& m, const ObservationTable& obs,
                                  const TrainConfig& cfg);

std::pair<TransliterationModel, std::vector<RoundStats>> train(const PairCorpus& corpus,
                                                               const TrainConfig& cfg = {});

// Fraction of train pairs the model still cannot explain.
double dirtiness(const TransliterationModel& m, const PairCorpus& corpus, double delta = 0.5);

void write_round_stats_csv(const std::vector<RoundStats>& stats, const std::string& path);

} // namespace translit

#endif
