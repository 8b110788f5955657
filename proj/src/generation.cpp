#include "translit/generation.hpp"
#include "translit/unicode.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace translit {

namespace {

struct Edge {
  int advance;         // source characters consumed (0 = pure insertion)
  std::u32string out;  // target piece emitted
  double cost;
};

struct State {
  double f;    // cost so far plus the exact cheapest completion
  double cost; // cost so far
  size_t pos;
  std::u32string built;
  bool operator>(const State& o) const {
    if (f != o.f) return f > o.f;
    if (pos != o.pos) return pos > o.pos;
    return built > o.built;
  }
};

} // namespace

std::vector<Candidate> construct_topk(const TransliterationModel& m, const std::string& word,
                                      size_t k, double bmax) {
  if (k < 1) throw std::invalid_argument("construct_topk: k must be >= 1");
  const std::u32string w = decode_utf8(word);
  const size_t n = w.size();
  if (n == 0) throw std::invalid_argument("construct_topk: empty word");
  if (bmax < 0.0) bmax = static_cast<double>(n);
  const double bound = static_cast<double>(n) + bmax;
  const size_t max_len = static_cast<size_t>(m.lmax) * (n + 2) + 4;

  // Per-position edge sets, deduped by (advance, out) keeping minimum cost.
  std::vector<std::map<std::pair<int, std::u32string>, double>> edge_map(n + 1);
  auto add_edge = [&](size_t pos, int adv, std::u32string out, double cost) {
    auto [it, fresh] = edge_map[pos].try_emplace({adv, std::move(out)}, cost);
    if (!fresh && cost < it->second) it->second = cost;
  };
  for (const auto& [key, cost] : m.costs()) {
    PiecePair p = m.decode(key);
    if (p.src.empty()) {
      for (size_t i = 0; i <= n; ++i) add_edge(i, 0, p.tgt, cost);
      continue;
    }
    if (p.src.size() > n) continue;
    for (size_t i = 0; i + p.src.size() <= n; ++i)
      if (w.compare(i, p.src.size(), p.src) == 0)
        add_edge(i, static_cast<int>(p.src.size()), p.tgt, cost);
  }
  for (size_t i = 0; i < n; ++i) {
    std::u32string c(1, w[i]);
    add_edge(i, 1, U"", m.cost_of({c, U""}));
    // identity passthrough only makes sense when the character exists in the
    // target script; otherwise candidates would leak source-script characters
    if (m.tgt_chars().lookup(w[i]) != 0) add_edge(i, 1, c, m.cost_of({c, c}));
  }
  for (char32_t d : m.tgt_chars().chars()) {
    std::u32string t(1, d);
    double cost = m.cost_of({U"", t});
    for (size_t i = 0; i <= n; ++i) add_edge(i, 0, t, cost);
  }
  std::vector<std::vector<Edge>> edges(n + 1);
  for (size_t i = 0; i <= n; ++i)
    for (const auto& [key, cost] : edge_map[i]) edges[i].push_back({key.first, key.second, cost});

  // Exact cheapest completion cost from each position. Insertions (advance 0)
  // never help a completion, so consuming edges alone determine it; with it as
  // an A* heuristic the search only expands prefixes of near-optimal outputs.
  std::vector<double> h(n + 1, kInfCost);
  h[n] = 0.0;
  for (size_t i = n; i-- > 0;)
    for (const Edge& e : edges[i])
      if (e.advance > 0 && h[i + e.advance] < kInfCost)
        h[i] = std::min(h[i], e.cost + h[i + e.advance]);

  std::priority_queue<State, std::vector<State>, std::greater<>> queue;
  std::unordered_map<std::u32string, double> best_state; // key: built + sep + pos
  std::map<std::u32string, double> finished;
  auto state_key = [n](size_t pos, const std::u32string& built) {
    std::u32string key = built;
    key.push_back(0x10FFFF);
    key.push_back(static_cast<char32_t>(pos));
    (void)n;
    return key;
  };
  queue.push({h[0], 0.0, 0, U""});
  best_state[state_key(0, U"")] = 0.0;
  size_t found = 0;
  double kth_cost = kInfCost;
  while (!queue.empty()) {
    State s = queue.top();
    queue.pop();
    if (s.f > bound) break;
    if (found >= k && s.f > kth_cost) break;
    auto bit = best_state.find(state_key(s.pos, s.built));
    if (bit != best_state.end() && bit->second < s.cost) continue; // stale entry
    if (s.pos == n && !finished.count(s.built)) {
      finished.emplace(s.built, s.cost);
      ++found;
      if (found == k) kth_cost = s.cost;
    }
    for (const Edge& e : edges[s.pos]) {
      if (s.built.size() + e.out.size() > max_len) continue;
      double c = s.cost + e.cost;
      double f = c + h[s.pos + e.advance];
      if (f > bound) continue;
      if (found >= k && f > kth_cost) continue;
      std::u32string nb = s.built + e.out;
      std::u32string key = state_key(s.pos + e.advance, nb);
      auto [it, fresh] = best_state.try_emplace(key, c);
      if (!fresh && it->second <= c) continue;
      it->second = c;
      queue.push({f, c, s.pos + e.advance, std::move(nb)});
    }
  }
  std::vector<Candidate> out;
  out.reserve(finished.size());
  for (const auto& [text, cost] : finished) out.push_back({encode_utf8(text), cost, {}});
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    return a.cost != b.cost ? a.cost < b.cost : a.text < b.text;
  });
  if (out.size() > k) out.resize(k);
  for (Candidate& c : out) c.segmentation = align(m, word, c.text);
  return out;
}

std::vector<Candidate> pivot_topk(const TransliterationModel& m1, const TransliterationModel& m2,
                                  const std::string& word, size_t k, size_t beam) {
  if (k < 1) throw std::invalid_argument("pivot_topk: k must be >= 1");
  if (beam == 0) beam = 5 * k;
  if (beam < k) throw std::invalid_argument("pivot_topk: beam must be >= k");
  std::map<std::string, std::pair<double, std::string>> best; // target -> (cost, pivot)
  for (const Candidate& mid : construct_topk(m1, word, beam)) {
    if (mid.text.empty()) continue; // the all-deletions intermediate leads nowhere
    for (const Candidate& fin : construct_topk(m2, mid.text, beam)) {
      double total = mid.cost + fin.cost;
      auto [it, fresh] = best.try_emplace(fin.text, total, mid.text);
      if (!fresh && total < it->second.first) it->second = {total, mid.text};
    }
  }
  std::vector<Candidate> out;
  for (const auto& [text, info] : best) out.push_back({text, info.first, {}});
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    return a.cost != b.cost ? a.cost < b.cost : a.text < b.text;
  });
  if (out.size() > k) out.resize(k);
  return out;
}

} // namespace translit
