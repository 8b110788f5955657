#include "translit/semantics.hpp"
#include "translit/unicode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace translit {

void EmbeddingTable::add(const std::string& word, std::vector<float> vec) {
  if (dim == 0) dim = static_cast<int>(vec.size());
  if (static_cast<int>(vec.size()) != dim)
    throw std::invalid_argument("embedding dimension mismatch for word: " + word);
  auto [it, fresh] = index_.try_emplace(word, words_.size());
  if (!fresh) throw std::invalid_argument("duplicate embedding word: " + word);
  words_.push_back(word);
  data_.insert(data_.end(), vec.begin(), vec.end());
}

const float* EmbeddingTable::vector_of(const std::string& word) const {
  auto it = index_.find(word);
  if (it == index_.end()) return nullptr;
  return data_.data() + it->second * dim;
}

EmbeddingTable load_embeddings(const std::string& path, const std::string& language) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open embedding file: " + path);
  EmbeddingTable e;
  e.language = language;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ":1: empty embedding file");
  if (has_utf8_bom(line)) line.erase(0, 3);
  size_t vocab = 0;
  int dim = 0;
  {
    std::istringstream hdr(line);
    if (!(hdr >> vocab >> dim) || dim <= 0)
      throw std::runtime_error(path + ":1: expected header `V D`");
  }
  e.dim = dim;
  size_t lineno = 1;
  std::vector<float> vec;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string word;
    row >> word;
    vec.clear();
    float v;
    while (row >> v) vec.push_back(v);
    if (static_cast<int>(vec.size()) != dim)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected " +
                               std::to_string(dim) + " values");
    e.add(word, vec);
  }
  if (e.size() != vocab)
    throw std::runtime_error(path + ": header declares " + std::to_string(vocab) +
                             " words, found " + std::to_string(e.size()));
  return e;
}

TranslationDict load_dict(const std::string& path) {
  TranslationDict d;
  CleanReport rep;
  for (auto& [s, t] : load_pairs(path, &rep)) d.pairs.insert(s + "\t" + t);
  if (!rep.rejects.empty())
    throw std::runtime_error(path + ":" + std::to_string(rep.rejects.front().line) +
                             ": malformed dictionary line");
  return d;
}

const char* to_string(FriendClass c) {
  switch (c) {
    case FriendClass::TP: return "TP";
    case FriendClass::EP: return "EP";
    case FriendClass::B: return "B";
    default: return "N";
  }
}

FriendClass classify(bool has_translation, bool passes_embedding) {
  if (has_translation) return passes_embedding ? FriendClass::B : FriendClass::TP;
  return passes_embedding ? FriendClass::EP : FriendClass::N;
}

std::vector<std::string> nearest_neighbors(const EmbeddingTable& e, const std::string& w,
                                           size_t n) {
  const float* wv = e.vector_of(w);
  if (!wv) throw std::invalid_argument("nearest_neighbors: word not in table: " + w);
  std::vector<std::pair<double, const std::string*>> dists;
  dists.reserve(e.size());
  for (const std::string& other : e.words()) {
    if (other == w) continue;
    const float* ov = e.vector_of(other);
    double d2 = 0.0;
    for (int i = 0; i < e.dim; ++i) {
      double diff = static_cast<double>(wv[i]) - ov[i];
      d2 += diff * diff;
    }
    dists.emplace_back(d2, &other);
  }
  n = std::min(n, dists.size());
  auto cmp = [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first < b.first : *a.second < *b.second;
  };
  std::nth_element(dists.begin(), dists.begin() + n, dists.end(), cmp);
  std::sort(dists.begin(), dists.begin() + n, cmp);
  std::vector<std::string> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(*dists[i].second);
  return out;
}

namespace {

// dict grouped by source word for linear-time link counting.
std::unordered_map<std::string, std::vector<std::string>> index_dict(const TranslationDict& d) {
  std::unordered_map<std::string, std::vector<std::string>> by_src;
  for (const std::string& key : d.pairs) {
    size_t tab = key.find('\t');
    by_src[key.substr(0, tab)].push_back(key.substr(tab + 1));
  }
  return by_src;
}

int count_links(const std::vector<std::string>& nn1, const std::vector<std::string>& nn2,
                const std::unordered_map<std::string, std::vector<std::string>>& by_src) {
  std::unordered_set<std::string> nn2set(nn2.begin(), nn2.end());
  int links = 0;
  for (const std::string& a : nn1) {
    auto it = by_src.find(a);
    if (it == by_src.end()) continue;
    for (const std::string& b : it->second)
      if (nn2set.count(b)) ++links;
  }
  return links;
}

} // namespace

std::pair<bool, int> embedding_test(const std::string& w1, const std::string& w2,
                                    const EmbeddingTable& e1, const EmbeddingTable& e2,
                                    const TranslationDict& dict, size_t n, int tau) {
  if (!e1.contains(w1) || !e2.contains(w2)) return {false, 0}; // fail closed
  if (n == 0) return {false, 0};
  auto by_src = index_dict(dict);
  int links = count_links(nearest_neighbors(e1, w1, n), nearest_neighbors(e2, w2, n), by_src);
  return {links >= tau, links};
}

namespace {

double translation_fraction(const std::vector<const FriendRecord*>& cohort) {
  if (cohort.empty()) return 0.0;
  size_t t = 0;
  for (const FriendRecord* r : cohort)
    if (r->has_translation) ++t;
  return static_cast<double>(t) / cohort.size();
}

// Fraction after keeping only records at or above the cohort's median link
// count (the "closest by embedding" half).
double pruned_fraction(const std::vector<const FriendRecord*>& cohort) {
  if (cohort.empty()) return 0.0;
  std::vector<int> links;
  links.reserve(cohort.size());
  for (const FriendRecord* r : cohort) links.push_back(r->link_count);
  std::nth_element(links.begin(), links.begin() + (links.size() - 1) / 2, links.end());
  int median = links[(links.size() - 1) / 2];
  std::vector<const FriendRecord*> kept;
  for (const FriendRecord* r : cohort)
    if (r->link_count >= median) kept.push_back(r);
  return translation_fraction(kept);
}

} // namespace

ScanResult scan_friends(const TransliterationModel& m, const Lexicon& lex_src,
                        const Lexicon& lex_tgt, const TranslationDict& dict,
                        const EmbeddingTable& e_src, const EmbeddingTable& e_tgt,
                        const ScanConfig& cfg) {
  if (lex_src.words.empty() || lex_tgt.words.empty())
    throw std::invalid_argument("scan_friends: missing resource: lexicon");
  std::vector<std::pair<std::string, std::u32string>> src, tgt;
  for (const std::string& w : lex_src.words) {
    std::u32string u = decode_utf8(w);
    if (u.size() >= cfg.min_len) src.emplace_back(w, std::move(u));
  }
  for (const std::string& w : lex_tgt.words) {
    std::u32string u = decode_utf8(w);
    if (u.size() >= cfg.min_len) tgt.emplace_back(w, std::move(u));
  }
  if (src.empty() || tgt.empty())
    throw std::invalid_argument("scan_friends: no lexicon words of length >= min_len");

  const MatchBounds bounds(m);
  struct Found {
    double cost;
    size_t si, ti;
  };
  std::vector<Found> found;
  double max_possible = 0.0;
  for (const auto& [w, u] : src) max_possible = std::max(max_possible, (double)u.size());
  double tmax = 0.0;
  for (const auto& [w, u] : tgt) tmax = std::max(tmax, (double)u.size());
  max_possible += tmax;

  double cap = cfg.d_max + 4.0;
  while (true) {
    found.clear();
    for (size_t si = 0; si < src.size(); ++si) {
      for (size_t ti = 0; ti < tgt.size(); ++ti) {
        auto rem = bounds.rem_for(src[si].second, tgt[ti].second);
        if (rem.total() > cap) continue;
        double c = align_cost(m, src[si].second, tgt[ti].second, cap, &rem);
        if (c != kInfCost) found.push_back({c, si, ti});
      }
    }
    size_t beyond = 0;
    for (const Found& f : found)
      if (f.cost > cfg.d_max) ++beyond;
    if (beyond >= cfg.next_cohort || cap >= max_possible) break;
    cap = std::min(max_possible, cap * 1.5 + 1.0);
  }
  std::sort(found.begin(), found.end(), [&](const Found& a, const Found& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (src[a.si].first != src[b.si].first) return src[a.si].first < src[b.si].first;
    return tgt[a.ti].first < tgt[b.ti].first;
  });

  size_t size_a = 0;
  while (size_a < found.size() && found[size_a].cost <= cfg.d_max) ++size_a;
  size_t size_b = std::min(cfg.next_cohort, found.size() - size_a);
  found.resize(size_a + size_b);

  auto by_src = index_dict(dict);
  std::unordered_map<std::string, std::vector<std::string>> nn_cache_src, nn_cache_tgt;
  auto neighbors_of = [&](const EmbeddingTable& e, const std::string& w,
                          std::unordered_map<std::string, std::vector<std::string>>& cache)
      -> const std::vector<std::string>* {
    if (!e.contains(w)) return nullptr;
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, nearest_neighbors(e, w, cfg.nn)).first;
    return &it->second;
  };

  ScanResult result;
  result.records.reserve(found.size());
  for (const Found& f : found) {
    FriendRecord r;
    r.w_src = src[f.si].first;
    r.w_tgt = tgt[f.ti].first;
    r.lex_cost = f.cost;
    r.has_translation = dict.has(r.w_src, r.w_tgt);
    const auto* nn1 = neighbors_of(e_src, r.w_src, nn_cache_src);
    const auto* nn2 = neighbors_of(e_tgt, r.w_tgt, nn_cache_tgt);
    if (nn1 && nn2 && cfg.nn > 0) {
      r.link_count = count_links(*nn1, *nn2, by_src);
      r.passes_embedding = r.link_count >= cfg.tau;
    }
    r.cls = classify(r.has_translation, r.passes_embedding);
    result.records.push_back(std::move(r));
  }

  std::vector<const FriendRecord*> cohort_a, cohort_b;
  for (size_t i = 0; i < result.records.size(); ++i)
    (i < size_a ? cohort_a : cohort_b).push_back(&result.records[i]);
  result.summary.size_a = cohort_a.size();
  result.summary.size_b = cohort_b.size();
  result.summary.translation_fraction_a = translation_fraction(cohort_a);
  result.summary.translation_fraction_b = translation_fraction(cohort_b);
  result.summary.pruned_fraction_a = pruned_fraction(cohort_a);
  result.summary.pruned_fraction_b = pruned_fraction(cohort_b);
  return result;
}

ClassCounts classify_counts(const std::vector<FriendRecord>& records) {
  ClassCounts c;
  for (const FriendRecord& r : records) {
    switch (r.cls) {
      case FriendClass::TP: ++c.tp; break;
      case FriendClass::EP: ++c.ep; break;
      case FriendClass::B: ++c.b; break;
      case FriendClass::N: ++c.n; break;
    }
  }
  return c;
}

void write_class_counts_csv(const ClassCounts& c, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write counts file: " + path);
  char buf[128];
  std::snprintf(buf, sizeof buf, "tp,ep,b,n,quality_ratio\n%zu,%zu,%zu,%zu,%.3f\n", c.tp, c.ep,
                c.b, c.n, c.quality_ratio());
  out << buf;
}

std::pair<double, double> eval_gold(const std::vector<FriendRecord>& records,
                                    const std::unordered_set<std::string>& gold_true,
                                    const std::unordered_set<std::string>& gold_false) {
  for (const std::string& k : gold_true)
    if (gold_false.count(k)) throw std::invalid_argument("eval_gold: gold sets overlap: " + k);
  std::unordered_map<std::string, bool> predicted; // pair key -> predicted true friend
  for (const FriendRecord& r : records)
    predicted[r.w_src + "\t" + r.w_tgt] = r.cls != FriendClass::N;
  size_t tp = 0, fp = 0, fn = 0, tn = 0;
  for (const std::string& k : gold_true) {
    auto it = predicted.find(k);
    bool pred = it != predicted.end() && it->second;
    pred ? ++tp : ++fn;
  }
  for (const std::string& k : gold_false) {
    auto it = predicted.find(k);
    bool pred = it != predicted.end() && it->second;
    pred ? ++fp : ++tn;
  }
  double f1 = (2 * tp + fp + fn) == 0 ? 0.0 : 2.0 * tp / (2.0 * tp + fp + fn);
  size_t total = tp + fp + fn + tn;
  double acc = total == 0 ? 0.0 : static_cast<double>(tp + tn) / total;
  return {f1, acc};
}

void write_friends_tsv(const std::vector<FriendRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write friends file: " + path);
  char buf[32];
  for (const FriendRecord& r : records) {
    std::snprintf(buf, sizeof buf, "%.6g", r.lex_cost);
    out << r.w_src << '\t' << r.w_tgt << '\t' << buf << '\t' << (r.has_translation ? 1 : 0)
        << '\t' << r.link_count << '\t' << to_string(r.cls) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace translit
