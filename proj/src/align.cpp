#include "translit/align.hpp"
#include "translit/unicode.hpp"

#include <algorithm>
#include <stdexcept>

namespace translit {

namespace {

// enc[i * (lmax+1) + a] = packed piece s[i, i+a); kNoPiece if some character
// is not interned in `idx`.
std::vector<uint64_t> encode_all_pieces(std::u32string_view s, const CharIndex& idx, int lmax) {
  const size_t n = s.size();
  std::vector<uint64_t> enc((n + 1) * (lmax + 1), 0);
  std::vector<uint16_t> ids(n);
  for (size_t i = 0; i < n; ++i) ids[i] = idx.lookup(s[i]);
  for (size_t i = 0; i <= n; ++i) {
    for (int a = 1; a <= lmax && i + a <= n; ++a) {
      uint64_t prev = enc[i * (lmax + 1) + a - 1];
      uint16_t id = ids[i + a - 1];
      enc[i * (lmax + 1) + a] =
          (prev == kNoPiece || id == 0) ? kNoPiece : prev | (static_cast<uint64_t>(id) << (16 * (a - 1)));
    }
  }
  return enc;
}

} // namespace

Alignment align(const TransliterationModel& m, std::u32string_view s, std::u32string_view t) {
  const size_t n = s.size(), mm = t.size();
  if (n + mm == 0) throw std::invalid_argument("align: both strings empty");
  const int L = m.lmax;
  const auto senc = encode_all_pieces(s, m.src_chars(), L);
  const auto tenc = encode_all_pieces(t, m.tgt_chars(), L);
  const size_t W = mm + 1;
  // Suffix DP: best (cost, segments) aligning s[i:] with t[j:].
  std::vector<double> D((n + 1) * W, kInfCost);
  std::vector<int> segs((n + 1) * W, 0);
  D[n * W + mm] = 0.0;
  auto pair_cost = [&](size_t i, int a, size_t j, int b) {
    uint64_t se = senc[i * (L + 1) + a];
    uint64_t te = tenc[j * (L + 1) + b];
    double def = a + b;
    if (se == kNoPiece || te == kNoPiece) return def;
    return m.cost_of_key({se, te}, def);
  };
  for (size_t ii = n + 1; ii-- > 0;) {
    for (size_t jj = mm + 1; jj-- > 0;) {
      if (ii == n && jj == mm) continue;
      double best = kInfCost;
      int best_segs = 0;
      for (int a = 0; a <= L && ii + a <= n; ++a) {
        for (int b = (a == 0 ? 1 : 0); b <= L && jj + b <= mm; ++b) {
          double sub = D[(ii + a) * W + jj + b];
          if (sub == kInfCost) continue;
          double c = pair_cost(ii, a, jj, b) + sub;
          int g = segs[(ii + a) * W + jj + b] + 1;
          if (c < best || (c == best && g < best_segs)) {
            best = c;
            best_segs = g;
          }
        }
      }
      D[ii * W + jj] = best;
      segs[ii * W + jj] = best_segs;
    }
  }
  Alignment out;
  out.total_cost = D[0];
  size_t i = 0, j = 0;
  while (i < n || j < mm) {
    bool stepped = false;
    for (int a = std::min<int>(L, n - i); a >= 0 && !stepped; --a) {
      for (int b = (a == 0 ? 1 : 0); b <= L && j + b <= mm; ++b) {
        double sub = D[(i + a) * W + j + b];
        if (sub == kInfCost) continue;
        if (pair_cost(i, a, j, b) + sub == D[i * W + j] &&
            segs[(i + a) * W + j + b] + 1 == segs[i * W + j]) {
          out.segments.push_back({std::u32string(s.substr(i, a)), std::u32string(t.substr(j, b))});
          i += a;
          j += b;
          stepped = true;
          break;
        }
      }
    }
    if (!stepped) throw std::logic_error("align: backtrack failed");
  }
  return out;
}

Alignment align(const TransliterationModel& m, const std::string& s, const std::string& t) {
  return align(m, decode_utf8(s), decode_utf8(t));
}

MatchBounds::MatchBounds(const TransliterationModel& m) : model_(&m) {
  const size_t ns = m.src_chars().size() + 1;
  const size_t nt = m.tgt_chars().size() + 1;
  ncols_ = nt;
  share2_.assign(ns * nt, 1.0f);
  share_del_.assign(ns, 1.0f);
  share_ins_.assign(nt, 1.0f);
  for (const auto& [k, cost] : m.costs()) {
    int ls = piece_len(k.src), lt = piece_len(k.tgt);
    float share = static_cast<float>(cost / (ls + lt));
    if (lt == 0) {
      for (int p = 0; p < ls; ++p) {
        uint16_t c = static_cast<uint16_t>(k.src >> (16 * p));
        share_del_[c] = std::min(share_del_[c], share);
      }
      continue;
    }
    if (ls == 0) {
      for (int q = 0; q < lt; ++q) {
        uint16_t d = static_cast<uint16_t>(k.tgt >> (16 * q));
        share_ins_[d] = std::min(share_ins_[d], share);
      }
      continue;
    }
    for (int p = 0; p < ls; ++p) {
      uint16_t c = static_cast<uint16_t>(k.src >> (16 * p));
      for (int q = 0; q < lt; ++q) {
        uint16_t d = static_cast<uint16_t>(k.tgt >> (16 * q));
        float& cell = share2_[c * ncols_ + d];
        cell = std::min(cell, share);
      }
    }
  }
}

MatchBounds::Rem MatchBounds::rem_for(std::u32string_view s, std::u32string_view t) const {
  const auto& sidx = model_->src_chars();
  const auto& tidx = model_->tgt_chars();
  std::vector<uint16_t> sid(s.size()), tid(t.size());
  for (size_t i = 0; i < s.size(); ++i) sid[i] = sidx.lookup(s[i]);
  for (size_t j = 0; j < t.size(); ++j) tid[j] = tidx.lookup(t[j]);
  Rem rem;
  rem.src.assign(s.size() + 1, 0.0);
  rem.tgt.assign(t.size() + 1, 0.0);
  for (size_t i = s.size(); i-- > 0;) {
    float b = share_del_[sid[i]];
    for (uint16_t d : tid) b = std::min(b, share2_[sid[i] * ncols_ + d]);
    rem.src[i] = rem.src[i + 1] + b;
  }
  for (size_t j = t.size(); j-- > 0;) {
    float b = share_ins_[tid[j]];
    for (uint16_t c : sid) b = std::min(b, share2_[c * ncols_ + tid[j]]);
    rem.tgt[j] = rem.tgt[j + 1] + b;
  }
  return rem;
}

double align_cost(const TransliterationModel& m, std::u32string_view s, std::u32string_view t,
                  double ub, const MatchBounds::Rem* rem) {
  const size_t n = s.size(), mm = t.size();
  if (n + mm == 0) throw std::invalid_argument("align_cost: both strings empty");
  const int L = m.lmax;
  const auto senc = encode_all_pieces(s, m.src_chars(), L);
  const auto tenc = encode_all_pieces(t, m.tgt_chars(), L);
  const size_t W = mm + 1;
  std::vector<double> D((n + 1) * W, kInfCost);
  D[0] = 0.0;
  int dead_rows = 0;
  for (size_t i = 0; i <= n; ++i) {
    bool alive = false;
    for (size_t j = 0; j <= mm; ++j) {
      double here = D[i * W + j];
      if (here == kInfCost) continue;
      if (rem && here + rem->src[i] + rem->tgt[j] > ub) {
        D[i * W + j] = kInfCost;
        continue;
      }
      alive = true;
      for (int a = 0; a <= L && i + a <= n; ++a) {
        uint64_t se = senc[i * (L + 1) + a];
        for (int b = (a == 0 ? 1 : 0); b <= L && j + b <= mm; ++b) {
          uint64_t te = tenc[j * (L + 1) + b];
          double def = a + b;
          double c = here + ((se == kNoPiece || te == kNoPiece) ? def
                                                                : m.cost_of_key({se, te}, def));
          double& cell = D[(i + a) * W + j + b];
          if (c < cell) cell = c;
        }
      }
    }
    // A span of lmax dead rows is unbridgeable: every path exceeds ub.
    dead_rows = alive ? 0 : dead_rows + 1;
    if (dead_rows >= L && i > 0) return kInfCost;
  }
  double result = D[n * W + mm];
  return result <= ub ? result : kInfCost;
}

bool is_flawed(const TransliterationModel& m, std::u32string_view s, std::u32string_view t,
               double delta) {
  double c = align_cost(m, s, t);
  return c >= static_cast<double>(s.size() + t.size()) - delta;
}

} // namespace translit
