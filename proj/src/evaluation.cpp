#include "translit/evaluation.hpp"
#include "translit/unicode.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace translit {

bool levenshtein1(const std::string& hyp, const std::string& ref) {
  const std::u32string a = decode_utf8(hyp), b = decode_utf8(ref);
  const size_t n = a.size(), m = b.size();
  if (n > m + 1 || m > n + 1) return false;
  std::vector<size_t> prev(m + 1), cur(m + 1);
  for (size_t j = 0; j <= m; ++j) prev[j] = j;
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= m; ++j) {
      size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m] <= 1;
}

bool topk_hit(const std::vector<Candidate>& cands, const std::string& gold, size_t k) {
  for (size_t i = 0; i < cands.size() && i < k; ++i)
    if (cands[i].text == gold) return true;
  return false;
}

Report evaluate(const TransliterationModel& m, const PairCorpus& test,
                const std::vector<size_t>& k_list) {
  std::vector<std::pair<std::string, std::string>> items;
  for (size_t i = 0; i < test.size(); ++i) {
    if (!test.split_tags.empty() && test.split_tags[i] != Split::test) continue;
    items.push_back(test.pairs[i]);
  }
  if (items.empty()) throw std::invalid_argument("evaluate: test split is empty");
  if (k_list.empty()) throw std::invalid_argument("evaluate: k_list is empty");
  size_t kmax = *std::max_element(k_list.begin(), k_list.end());
  std::vector<size_t> hits(k_list.size(), 0);
  size_t lev1 = 0;
  for (const auto& [src, gold] : items) {
    auto cands = construct_topk(m, src, kmax);
    for (size_t i = 0; i < k_list.size(); ++i)
      if (topk_hit(cands, gold, k_list[i])) ++hits[i];
    if (!cands.empty() && levenshtein1(cands.front().text, gold)) ++lev1;
  }
  Report r;
  r.items = items.size();
  for (size_t i = 0; i < k_list.size(); ++i)
    r.topk_pct.emplace_back(k_list[i], 100.0 * hits[i] / items.size());
  r.lev1_pct = 100.0 * lev1 / items.size();
  return r;
}

void write_report_csv(const Report& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report file: " + path);
  out << "items";
  for (const auto& [k, pct] : r.topk_pct) out << ",top_" << k;
  out << ",levenshtein_1\n" << r.items;
  char buf[32];
  for (const auto& [k, pct] : r.topk_pct) {
    std::snprintf(buf, sizeof buf, ",%.1f", pct);
    out << buf;
  }
  std::snprintf(buf, sizeof buf, ",%.1f\n", r.lev1_pct);
  out << buf;
}

std::string format_report_table(const Report& r) {
  std::string s;
  char buf[64];
  for (const auto& [k, pct] : r.topk_pct) {
    std::snprintf(buf, sizeof buf, "Top-%-4zu %6.1f%%\n", k, pct);
    s += buf;
  }
  std::snprintf(buf, sizeof buf, "Lev-1    %6.1f%%\n", r.lev1_pct);
  s += buf;
  return s;
}

void export_heatmap(const TransliterationModel& m, const std::vector<std::string>& chars_src,
                    const std::vector<std::string>& chars_tgt, const std::string& path) {
  if (chars_src.empty() || chars_tgt.empty())
    throw std::invalid_argument("export_heatmap: character lists must be nonempty");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write heatmap file: " + path);
  for (const std::string& d : chars_tgt) out << ',' << d;
  out << '\n';
  char buf[32];
  for (const std::string& c : chars_src) {
    out << c;
    std::u32string cu = decode_utf8(c);
    for (const std::string& d : chars_tgt) {
      double cost = m.cost_of({cu, decode_utf8(d)});
      std::snprintf(buf, sizeof buf, ",%.6g", cost);
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace translit
