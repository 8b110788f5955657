#include "translit/lexicon_match.hpp"
#include "translit/unicode.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace translit {

namespace {

struct Hit {
  double cost;
  size_t idx;
  bool operator<(const Hit& o) const { // max-heap: worst hit on top
    return cost != o.cost ? cost < o.cost : idx < o.idx;
  }
};

} // namespace

std::vector<std::pair<std::string, double>> detect_best(const TransliterationModel& m,
                                                        const Lexicon& lex,
                                                        const std::string& word, size_t k) {
  if (lex.words.empty()) throw std::invalid_argument("detect_best: empty lexicon");
  if (k < 1) throw std::invalid_argument("detect_best: k must be >= 1");
  const std::u32string q = decode_utf8(word);
  const MatchBounds bounds(m);
  std::priority_queue<Hit> heap;
  for (size_t i = 0; i < lex.words.size(); ++i) {
    const std::u32string t = decode_utf8(lex.words[i]);
    double ub = kInfCost;
    if (heap.size() == k) {
      // A word can only displace the current worst hit by beating it, or by
      // tying it with a smaller lexicon index.
      const Hit& worst = heap.top();
      ub = i < worst.idx ? worst.cost : std::nexttoward(worst.cost, 0.0);
    }
    auto rem = bounds.rem_for(q, t);
    if (rem.total() > ub) continue;
    double c = align_cost(m, q, t, ub, &rem);
    if (c == kInfCost) continue;
    heap.push({c, i});
    if (heap.size() > k) heap.pop();
  }
  std::vector<Hit> hits;
  while (!heap.empty()) {
    hits.push_back(heap.top());
    heap.pop();
  }
  std::sort(hits.begin(), hits.end(),
            [](const Hit& a, const Hit& b) { return a.cost != b.cost ? a.cost < b.cost : a.idx < b.idx; });
  std::vector<std::pair<std::string, double>> out;
  out.reserve(hits.size());
  for (const Hit& h : hits) out.emplace_back(lex.words[h.idx], h.cost);
  return out;
}

std::optional<size_t> rank_of(const TransliterationModel& m, const Lexicon& lex,
                              const std::string& word, const std::string& gold) {
  auto pos = std::find(lex.words.begin(), lex.words.end(), gold);
  if (pos == lex.words.end()) return std::nullopt;
  const size_t gold_idx = static_cast<size_t>(pos - lex.words.begin());
  const std::u32string q = decode_utf8(word);
  const MatchBounds bounds(m);
  const double gold_cost = align_cost(m, q, decode_utf8(gold));
  // Rank = 1 + number of entries strictly ahead of gold in (cost, index) order.
  size_t ahead = 0;
  for (size_t i = 0; i < lex.words.size(); ++i) {
    if (i == gold_idx) continue;
    const std::u32string t = decode_utf8(lex.words[i]);
    double ub = i < gold_idx ? gold_cost : std::nexttoward(gold_cost, 0.0);
    auto rem = bounds.rem_for(q, t);
    if (rem.total() > ub) continue;
    if (align_cost(m, q, t, ub, &rem) != kInfCost) ++ahead;
  }
  return ahead + 1;
}

} // namespace translit
