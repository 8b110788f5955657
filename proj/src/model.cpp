#include "translit/model.hpp"
#include "translit/unicode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

namespace translit {

uint16_t CharIndex::intern(char32_t c) {
  auto [it, fresh] = map_.try_emplace(c, static_cast<uint16_t>(chars_.size() + 1));
  if (fresh) {
    if (chars_.size() >= 0xFFFF) throw std::runtime_error("alphabet exceeds 65535 characters");
    chars_.push_back(c);
  }
  return it->second;
}

uint16_t CharIndex::lookup(char32_t c) const {
  auto it = map_.find(c);
  return it == map_.end() ? 0 : it->second;
}

uint64_t encode_piece(std::u32string_view piece, const CharIndex& idx) {
  uint64_t enc = 0;
  int shift = 0;
  for (char32_t c : piece) {
    uint16_t id = idx.lookup(c);
    if (id == 0) return kNoPiece;
    enc |= static_cast<uint64_t>(id) << shift;
    shift += 16;
  }
  return enc;
}

std::u32string decode_piece(uint64_t enc, const CharIndex& idx) {
  std::u32string out;
  for (int shift = 0; shift < 64; shift += 16) {
    uint16_t id = static_cast<uint16_t>(enc >> shift);
    if (id == 0) break;
    out.push_back(idx.at(id));
  }
  return out;
}

int piece_len(uint64_t enc) {
  int n = 0;
  while (enc) { ++n; enc >>= 16; }
  return n;
}

void TransliterationModel::check_pair(const PiecePair& p) const {
  if (p.src.empty() && p.tgt.empty())
    throw std::invalid_argument("piece pair: both pieces empty");
  if (static_cast<int>(p.src.size()) > lmax || static_cast<int>(p.tgt.size()) > lmax)
    throw std::invalid_argument("piece pair: piece longer than lmax");
}

double TransliterationModel::cost_of(const PiecePair& p) const {
  check_pair(p);
  double def = static_cast<double>(p.src.size() + p.tgt.size());
  uint64_t s = encode_piece(p.src, src_chars_);
  uint64_t t = encode_piece(p.tgt, tgt_chars_);
  if (s == kNoPiece || t == kNoPiece) return def;
  return cost_of_key({s, t}, def);
}

void TransliterationModel::set_cost(const PiecePair& p, double cost) {
  check_pair(p);
  if (lmax > kMaxPieceLen)
    throw std::invalid_argument("lmax > 4 not supported by the packed cost map");
  double init = static_cast<double>(p.src.size() + p.tgt.size());
  if (!(cost > 0.0) || cost > init)
    throw std::invalid_argument("stored cost must satisfy 0 < cost <= len(src)+len(tgt)");
  uint64_t s = 0, t = 0;
  int shift = 0;
  for (char32_t c : p.src) { s |= static_cast<uint64_t>(src_chars_.intern(c)) << shift; shift += 16; }
  shift = 0;
  for (char32_t c : p.tgt) { t |= static_cast<uint64_t>(tgt_chars_.intern(c)) << shift; shift += 16; }
  costs_[{s, t}] = cost;
}

void TransliterationModel::observe_alphabet(std::u32string_view src_text,
                                            std::u32string_view tgt_text) {
  for (char32_t c : src_text) src_chars_.intern(c);
  for (char32_t c : tgt_text) tgt_chars_.intern(c);
}

namespace {

std::map<std::pair<std::u32string, std::u32string>, double>
sorted_costs(const TransliterationModel& m) {
  std::map<std::pair<std::u32string, std::u32string>, double> out;
  for (const auto& [k, c] : m.costs()) {
    PiecePair p = m.decode(k);
    out[{p.src, p.tgt}] = c;
  }
  return out;
}

std::set<char32_t> char_set(const CharIndex& idx) {
  return {idx.chars().begin(), idx.chars().end()};
}

} // namespace

bool TransliterationModel::operator==(const TransliterationModel& o) const {
  return source_lang == o.source_lang && target_lang == o.target_lang && lmax == o.lmax &&
         rounds_trained == o.rounds_trained && char_set(src_chars_) == char_set(o.src_chars_) &&
         char_set(tgt_chars_) == char_set(o.tgt_chars_) && sorted_costs(*this) == sorted_costs(o);
}

void serialize(const TransliterationModel& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  out << "#translit-model v1\n";
  out << "#src " << m.source_lang << "\n";
  out << "#tgt " << m.target_lang << "\n";
  out << "#lmax " << m.lmax << "\n";
  out << "#rounds " << m.rounds_trained << "\n";
  auto alpha_line = [&](const char* tag, const CharIndex& idx) {
    std::set<char32_t> cs = char_set(idx);
    out << tag << " " << encode_utf8(std::u32string(cs.begin(), cs.end())) << "\n";
  };
  alpha_line("#alphabet-src", m.src_chars());
  alpha_line("#alphabet-tgt", m.tgt_chars());
  char buf[64];
  for (const auto& [pieces, cost] : sorted_costs(m)) {
    std::snprintf(buf, sizeof buf, "%.17g", cost);
    out << encode_utf8(pieces.first) << '\t' << encode_utf8(pieces.second) << '\t' << buf << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

TransliterationModel deserialize(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  auto fail = [&](size_t line, const std::string& what) -> std::runtime_error {
    return std::runtime_error(path + ":" + std::to_string(line) + ": " + what);
  };
  TransliterationModel m;
  std::string raw;
  size_t lineno = 0;
  if (!std::getline(in, raw)) throw fail(1, "empty model file");
  ++lineno;
  if (has_utf8_bom(raw)) raw.erase(0, 3);
  if (!raw.empty() && raw.back() == '\r') raw.pop_back();
  if (raw != "#translit-model v1") throw fail(1, "bad magic header (expected '#translit-model v1')");
  std::u32string alpha_src, alpha_tgt;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    if (raw[0] == '#') {
      size_t sp = raw.find(' ');
      std::string key = raw.substr(0, sp);
      std::string val = sp == std::string::npos ? "" : raw.substr(sp + 1);
      if (key == "#src") m.source_lang = val;
      else if (key == "#tgt") m.target_lang = val;
      else if (key == "#lmax") m.lmax = std::stoi(val);
      else if (key == "#rounds") m.rounds_trained = std::stoi(val);
      else if (key == "#alphabet-src") alpha_src = decode_utf8(val);
      else if (key == "#alphabet-tgt") alpha_tgt = decode_utf8(val);
      else throw fail(lineno, "unknown header line: " + key);
      continue;
    }
    size_t t1 = raw.find('\t');
    size_t t2 = t1 == std::string::npos ? std::string::npos : raw.find('\t', t1 + 1);
    if (t2 == std::string::npos) throw fail(lineno, "expected src<TAB>tgt<TAB>cost");
    PiecePair p;
    double cost;
    try {
      p.src = decode_utf8(std::string_view(raw).substr(0, t1));
      p.tgt = decode_utf8(std::string_view(raw).substr(t1 + 1, t2 - t1 - 1));
      cost = std::stod(raw.substr(t2 + 1));
    } catch (const std::exception& e) {
      throw fail(lineno, e.what());
    }
    try {
      m.set_cost(p, cost);
    } catch (const std::exception& e) {
      throw fail(lineno, e.what());
    }
  }
  m.observe_alphabet(alpha_src, alpha_tgt);
  return m;
}

} // namespace translit
