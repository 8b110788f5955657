#include "translit/training.hpp"
#include "translit/unicode.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace translit {

namespace {

void validate(const TrainConfig& cfg) {
  if (cfg.rounds < 1) throw std::invalid_argument("TrainConfig: rounds must be >= 1");
  if (!(cfg.alpha > 0.0)) throw std::invalid_argument("TrainConfig: alpha must be > 0");
  if (cfg.lmax < 1 || cfg.lmax > kMaxPieceLen)
    throw std::invalid_argument("TrainConfig: lmax must be in [1, 4]");
  if (!(cfg.cost_floor > 0.0)) throw std::invalid_argument("TrainConfig: cost_floor must be > 0");
}

std::vector<std::pair<std::u32string, std::u32string>> train_pairs(const PairCorpus& corpus) {
  std::vector<std::pair<std::u32string, std::u32string>> out;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (!corpus.split_tags.empty() && corpus.split_tags[i] != Split::train) continue;
    out.emplace_back(decode_utf8(corpus.pairs[i].first), decode_utf8(corpus.pairs[i].second));
  }
  return out;
}

} // namespace

std::pair<ObservationTable, RoundStats> run_round(const TransliterationModel& m,
                                                  const PairCorpus& corpus,
                                                  const TrainConfig& cfg) {
  auto pairs = train_pairs(corpus);
  if (pairs.empty()) throw std::invalid_argument("run_round: train split is empty");
  ObservationTable obs;
  RoundStats stats;
  double cost_sum = 0.0;
  size_t flawed = 0;
  for (const auto& [s, t] : pairs) {
    Alignment a = align(m, s, t);
    cost_sum += a.total_cost;
    bool bad = a.total_cost >= static_cast<double>(s.size() + t.size()) - cfg.delta_flaw;
    if (bad) ++flawed;
    if (bad && m.rounds_trained > 0) continue;
    for (const PiecePair& seg : a.segments) obs.add(seg, 1);
  }
  stats.mean_alignment_cost = cost_sum / pairs.size();
  stats.dirtiness = static_cast<double>(flawed) / pairs.size();
  stats.distinct_pairs_observed = obs.counts.size();
  return {std::move(obs), stats};
}

TransliterationModel update_costs(const TransliterationModel& m, const ObservationTable& obs,
                                  const TrainConfig& cfg) {
  if (obs.counts.empty() || obs.grand_total == 0) return m;
  const double asrc = std::max<size_t>(1, m.src_chars().size());
  const double atgt = std::max<size_t>(1, m.tgt_chars().size());
  const double N = static_cast<double>(obs.grand_total);
  auto smoothed = [&](const PiecePair& p, int64_t c) {
    double p0 = std::pow(asrc, -static_cast<double>(p.src.size())) *
                std::pow(atgt, -static_cast<double>(p.tgt.size()));
    return (c + cfg.alpha * p0) / (N + cfg.alpha);
  };
  TransliterationModel out = m;
  for (const auto& [p, c] : obs.counts) {
    // One-sided pieces (pure insertions/deletions) explain any string pair,
    // so letting their cost fall with frequency collapses the model into
    // delete-everything -- the classic degenerate NULL-alignment solution.
    // They keep their initialization cost; only genuine correspondences learn.
    if (p.src.empty() || p.tgt.empty()) continue;
    double init = static_cast<double>(p.src.size() + p.tgt.size());
    // A pair observed once is indistinguishable from a chance co-occurrence,
    // so probability at count 1 is the reference point: it maps to the
    // initialization cost, and relatively frequent pairs fall toward zero.
    // Squaring the log-probability ratio sharpens the contrast: pairs seen a
    // handful of times stay near full price (so noise still reads as flawed),
    // while genuinely recurring pairs become far cheaper than the unit-cost
    // default edits they compete with during generation.
    // Leave-one-out discount: judging each pair by its other sightings means
    // a handful of chance co-occurrences earns next to no discount, while
    // genuinely recurring pairs (hundreds of counts) are barely affected.
    double lp1 = std::log(smoothed(p, 1));
    double ratio = lp1 == 0.0 ? 1.0 : std::log(smoothed(p, c - 1)) / lp1;
    double cost = std::clamp(ratio * ratio * init, cfg.cost_floor, init - cfg.cost_floor);
    out.set_cost(p, cost);
  }
  return out;
}

std::pair<TransliterationModel, std::vector<RoundStats>> train(const PairCorpus& corpus,
                                                               const TrainConfig& cfg) {
  validate(cfg);
  TransliterationModel m;
  m.source_lang = corpus.source_lang;
  m.target_lang = corpus.target_lang;
  m.lmax = cfg.lmax;
  for (const auto& [s, t] : train_pairs(corpus)) m.observe_alphabet(s, t);
  std::vector<RoundStats> history;
  for (int r = 1; r <= cfg.rounds; ++r) {
    auto [obs, stats] = run_round(m, corpus, cfg);
    stats.round_index = r;
    m = update_costs(m, obs, cfg);
    m.rounds_trained = r;
    history.push_back(stats);
    if (cfg.early_stop && r >= 2 &&
        std::abs(history[r - 1].dirtiness - history[r - 2].dirtiness) < 0.001)
      break;
  }
  return {std::move(m), std::move(history)};
}

double dirtiness(const TransliterationModel& m, const PairCorpus& corpus, double delta) {
  auto pairs = train_pairs(corpus);
  if (pairs.empty()) return 1.0;
  size_t flawed = 0;
  for (const auto& [s, t] : pairs)
    if (is_flawed(m, s, t, delta)) ++flawed;
  return static_cast<double>(flawed) / pairs.size();
}

void write_round_stats_csv(const std::vector<RoundStats>& stats, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write stats file: " + path);
  out << "round,mean_cost,dirtiness,distinct_pairs\n";
  char buf[128];
  for (const RoundStats& s : stats) {
    std::snprintf(buf, sizeof buf, "%d,%.6g,%.6g,%zu\n", s.round_index, s.mean_alignment_cost,
                  s.dirtiness, s.distinct_pairs_observed);
    out << buf;
  }
}

} // namespace translit
