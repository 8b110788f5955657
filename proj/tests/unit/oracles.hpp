// Test-only reference implementations, kept independent of the library's DP
// and search code paths.
#ifndef TRANSLIT_TESTS_ORACLES_HPP
#define TRANSLIT_TESTS_ORACLES_HPP

#include "translit/model.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

namespace oracles {

// Minimum segmentation-matching cost by plain recursion over the first piece
// pair. Exponential; fine for short strings.
inline double enum_align_cost(const translit::TransliterationModel& m, std::u32string_view s,
                              std::u32string_view t) {
  if (s.empty() && t.empty()) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  int L = m.lmax;
  for (int a = 0; a <= L && a <= (int)s.size(); ++a) {
    for (int b = (a == 0 ? 1 : 0); b <= L && b <= (int)t.size(); ++b) {
      double head = m.cost_of({std::u32string(s.substr(0, a)), std::u32string(t.substr(0, b))});
      double tail = enum_align_cost(m, s.substr(a), t.substr(b));
      best = std::min(best, head + tail);
    }
  }
  return best;
}

// Memoized variant for the larger acceptance sweep; still a separate code
// path (prefix recursion, no tie-breaking, string-keyed memo).
inline double memo_align_cost(const translit::TransliterationModel& m, std::u32string_view s,
                              std::u32string_view t,
                              std::unordered_map<uint64_t, double>& memo) {
  if (s.empty() && t.empty()) return 0.0;
  uint64_t key = (static_cast<uint64_t>(s.size()) << 32) | t.size();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  double best = std::numeric_limits<double>::infinity();
  int L = m.lmax;
  for (int a = 0; a <= L && a <= (int)s.size(); ++a) {
    for (int b = (a == 0 ? 1 : 0); b <= L && b <= (int)t.size(); ++b) {
      double head = m.cost_of({std::u32string(s.substr(s.size() - a)),
                               std::u32string(t.substr(t.size() - b))});
      double tail = memo_align_cost(m, s.substr(0, s.size() - a), t.substr(0, t.size() - b), memo);
      best = std::min(best, head + tail);
    }
  }
  memo.emplace(key, best);
  return best;
}

inline double memo_align_cost(const translit::TransliterationModel& m, std::u32string_view s,
                              std::u32string_view t) {
  std::unordered_map<uint64_t, double> memo;
  return memo_align_cost(m, s, t, memo);
}

// Every string of length 1..maxlen over `alphabet`, in generation order.
inline std::vector<std::u32string> all_strings(const std::u32string& alphabet, size_t maxlen) {
  std::vector<std::u32string> out{U""}, frontier{U""};
  for (size_t len = 1; len <= maxlen; ++len) {
    std::vector<std::u32string> next;
    for (const auto& p : frontier)
      for (char32_t c : alphabet) {
        next.push_back(p + c);
        out.push_back(next.back());
      }
    frontier = std::move(next);
  }
  return out;
}

inline size_t edit_distance(std::u32string_view a, std::u32string_view b) {
  std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1), prev[j] + 1, cur[j - 1] + 1});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

} // namespace oracles

#endif
