#include "translit/corpus.hpp"
#include "translit/unicode.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace translit {

namespace {

bool is_mapped_punct(char32_t c) {
  // Punctuation folded to underscore: hyphen, period, comma. Unicode dash variants
  // fold into the same class.
  return c == U'-' || c == U'.' || c == U',' || (c >= 0x2010 && c <= 0x2015);
}

bool is_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == 0xA0;
}

size_t token_count(const std::string& s) {
  size_t n = 0;
  bool in_tok = false;
  for (char c : s) {
    bool sep = (c == '_' || c == ' ');
    if (!sep && !in_tok) ++n;
    in_tok = !sep;
  }
  return n;
}

} // namespace

std::string normalize_text(const std::string& s, const NormConfig& cfg) {
  std::u32string u = decode_utf8(s);
  if (cfg.lowercase)
    for (char32_t& c : u) c = to_lower(c);
  u = compose(u);
  if (cfg.punctuation_to_underscore) {
    std::u32string out;
    out.reserve(u.size());
    for (char32_t c : u) {
      if (is_mapped_punct(c)) c = U'_';
      if (c == U'_' && !out.empty() && out.back() == U'_') continue;
      out.push_back(c);
    }
    u = std::move(out);
  }
  // Mapping punctuation can expose new outer whitespace (and vice versa), so
  // strip both classes together until stable; that keeps the result a fixed
  // point of this function.
  auto strippable = [&](char32_t c) {
    return (cfg.strip_outer_whitespace && is_space(c)) ||
           (cfg.punctuation_to_underscore && c == U'_');
  };
  size_t b = 0, e = u.size();
  while (b < e && strippable(u[b])) ++b;
  while (e > b && strippable(u[e - 1])) --e;
  u = u.substr(b, e - b);
  return encode_utf8(u);
}

PairCorpus clean_corpus(const std::vector<std::pair<std::string, std::string>>& raw,
                        const NormConfig& cfg, CleanReport* report) {
  PairCorpus corpus;
  std::unordered_set<std::string> seen;
  CleanReport local;
  CleanReport& rep = report ? *report : local;
  size_t line = 0;
  for (const auto& [rs, rt] : raw) {
    ++line;
    std::string s = normalize_text(rs, cfg);
    std::string t = normalize_text(rt, cfg);
    if (s.empty() || t.empty()) {
      rep.rejects.push_back({line, "empty side", rs + "\t" + rt});
      continue;
    }
    if (token_count(s) > 3 || token_count(t) > 3) {
      rep.rejects.push_back({line, "token count", rs + "\t" + rt});
      continue;
    }
    std::string key = s + "\t" + t;
    if (!seen.insert(key).second) {
      rep.rejects.push_back({line, "duplicate", rs + "\t" + rt});
      continue;
    }
    corpus.pairs.emplace_back(std::move(s), std::move(t));
  }
  rep.kept = corpus.pairs.size();
  rep.dropped = raw.size() - rep.kept;
  return corpus;
}

void split_corpus(PairCorpus& corpus, uint64_t seed) {
  const size_t n = corpus.size();
  if (n == 0) throw std::invalid_argument("split_corpus: empty corpus");
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  // Round bucket sizes to nearest; train takes the remainder.
  size_t n_tune = static_cast<size_t>(n * 0.1 + 0.5);
  size_t n_test = static_cast<size_t>(n * 0.1 + 0.5);
  if (n_tune + n_test >= n) { n_tune = n >= 3 ? 1 : 0; n_test = n >= 2 ? 1 : 0; }
  corpus.split_tags.assign(n, Split::train);
  for (size_t i = 0; i < n_tune; ++i) corpus.split_tags[order[i]] = Split::tune;
  for (size_t i = 0; i < n_test; ++i) corpus.split_tags[order[n_tune + i]] = Split::test;
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

} // namespace

Lexicon load_lexicon(const std::string& path, const std::string& language,
                     const NormConfig& cfg) {
  std::ifstream in = open_or_throw(path);
  Lexicon lex;
  lex.language = language;
  std::unordered_set<std::string> seen;
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (lineno == 1 && has_utf8_bom(raw)) raw.erase(0, 3);
    if (raw.empty() || raw[0] == '#') continue;
    std::string w;
    try {
      w = normalize_text(raw, cfg);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (w.empty()) continue;
    if (seen.insert(w).second) lex.words.push_back(std::move(w));
  }
  return lex;
}

std::vector<std::pair<std::string, std::string>> load_pairs(const std::string& path,
                                                            CleanReport* report) {
  std::ifstream in = open_or_throw(path);
  std::vector<std::pair<std::string, std::string>> out;
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (lineno == 1 && has_utf8_bom(raw)) raw.erase(0, 3);
    if (raw.empty() || raw[0] == '#') continue;
    size_t tab = raw.find('\t');
    if (tab == std::string::npos || raw.find('\t', tab + 1) != std::string::npos) {
      if (report)
        report->rejects.push_back({lineno, "malformed line", raw});
      else
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 2 fields");
      continue;
    }
    try {
      (void)decode_utf8(raw);
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
    out.emplace_back(raw.substr(0, tab), raw.substr(tab + 1));
  }
  return out;
}

} // namespace translit
