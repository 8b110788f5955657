#ifndef TRANSLIT_MODEL_HPP
#define TRANSLIT_MODEL_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace translit {

struct PiecePair {
  std::u32string src;
  std::u32string tgt;
  bool operator==(const PiecePair&) const = default;
};

// Characters of each language are interned to 16-bit ids so a piece of up to
// 4 characters packs into one uint64. Alignment and search do millions of
// cost lookups; hashing two uint64s beats hashing unicode strings by a wide
// margin.
class CharIndex {
 public:
  // Returns the id of `c`, interning it if needed. Ids start at 1.
  uint16_t intern(char32_t c);
  // 0 if unknown.
  uint16_t lookup(char32_t c) const;
  char32_t at(uint16_t id) const { return chars_[id - 1]; }
  size_t size() const { return chars_.size(); }
  const std::vector<char32_t>& chars() const { return chars_; }

 private:
  std::vector<char32_t> chars_;
  std::unordered_map<char32_t, uint16_t> map_;
};

constexpr uint64_t kNoPiece = ~uint64_t{0};
constexpr int kMaxPieceLen = 4;

// Packs up to 4 interned ids, low id first; 0 marks the end. Returns kNoPiece
// if some character is not interned (no stored pair can involve it).
uint64_t encode_piece(std::u32string_view piece, const CharIndex& idx);
std::u32string decode_piece(uint64_t enc, const CharIndex& idx);
int piece_len(uint64_t enc);

struct PairKey {
  uint64_t src;
  uint64_t tgt;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  size_t operator()(const PairKey& k) const {
    uint64_t x = k.src * 0x9E3779B97F4A7C15ull ^ (k.tgt + 0xBF58476D1CE4E5B9ull);
    x ^= x >> 31;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 29;
    return static_cast<size_t>(x);
  }
};

class TransliterationModel {
 public:
  std::string source_lang;
  std::string target_lang;
  int lmax = 3;
  int rounds_trained = 0;

  // Effective cost: stored value, else len(src)+len(tgt).
  double cost_of(const PiecePair& p) const;

  // Fast path for the inner loops; `def` is the default (length-sum) cost.
  double cost_of_key(PairKey k, double def) const {
    auto it = costs_.find(k);
    return it == costs_.end() ? def : it->second;
  }

  void set_cost(const PiecePair& p, double cost);
  void observe_alphabet(std::u32string_view src_text, std::u32string_view tgt_text);

  const std::unordered_map<PairKey, double, PairKeyHash>& costs() const { return costs_; }
  PiecePair decode(PairKey k) const { return {decode_piece(k.src, src_chars_),
                                              decode_piece(k.tgt, tgt_chars_)}; }
  const CharIndex& src_chars() const { return src_chars_; }
  const CharIndex& tgt_chars() const { return tgt_chars_; }

  bool operator==(const TransliterationModel& o) const;

 private:
  void check_pair(const PiecePair& p) const;

  CharIndex src_chars_;
  CharIndex tgt_chars_;
  std::unordered_map<PairKey, double, PairKeyHash> costs_;
};

// UTF-8 text format: `#translit-model v1` magic, language/lmax/rounds/alphabet
// headers, then `src<TAB>tgt<TAB>cost` records sorted by piece.
void serialize(const TransliterationModel& m, const std::string& path);
TransliterationModel deserialize(const std::string& path);

} // namespace translit

#endif
