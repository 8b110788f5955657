#ifndef TRANSLIT_ALIGN_HPP
#define TRANSLIT_ALIGN_HPP

#include "translit/model.hpp"

#include <limits>
#include <vector>

namespace translit {

struct Alignment {
  std::vector<PiecePair> segments; // concatenation covers source and target exactly
  double total_cost = 0.0;
};

constexpr double kInfCost = std::numeric_limits<double>::infinity();

// Globally minimum-cost segmentation matching over pieces of length <= lmax.
// Ties: fewer segments, then longer first source piece, then lexicographically
// smaller target piece, applied front to back.
Alignment align(const TransliterationModel& m, std::u32string_view s, std::u32string_view t);

Alignment align(const TransliterationModel& m, const std::string& s, const std::string& t);

// Per-character admissible lower bounds for pruning large scans. share2[c][d]
// is the cheapest per-character share (cost / total piece length) over stored
// pairs whose source piece contains c and target piece contains d; a pair
// used in any alignment of (s, t) can only contain characters of s and t, so
// summing per-character minima never overestimates.
class MatchBounds {
 public:
  explicit MatchBounds(const TransliterationModel& m);

  // Suffix-summed per-character bounds for one (s, t) pair.
  struct Rem {
    std::vector<double> src; // src[i] = lower bound on covering s[i:]
    std::vector<double> tgt;
    double total() const { return src[0] + tgt[0]; }
  };
  Rem rem_for(std::u32string_view s, std::u32string_view t) const;

 private:
  const TransliterationModel* model_;
  size_t ncols_;
  std::vector<float> share2_;        // (nsrc+1) x (ntgt+1), default 1
  std::vector<float> share_del_;     // per src char: cheapest pair with empty target
  std::vector<float> share_ins_;     // per tgt char: cheapest pair with empty source
};

// Exact alignment cost when it is <= ub, otherwise +inf. `rem`, when given,
// must come from MatchBounds::rem_for on the same pair.
double align_cost(const TransliterationModel& m, std::u32string_view s, std::u32string_view t,
                  double ub = kInfCost, const MatchBounds::Rem* rem = nullptr);

// True when the model found essentially no learned correspondence: the best
// alignment saves less than `delta` against the fresh-model cost.
bool is_flawed(const TransliterationModel& m, std::u32string_view s, std::u32string_view t,
               double delta = 0.5);

} // namespace translit

#endif
