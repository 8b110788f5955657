#ifndef TRANSLIT_LEXICON_MATCH_HPP
#define TRANSLIT_LEXICON_MATCH_HPP

#include "translit/align.hpp"
#include "translit/corpus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace translit {

// The k lexicon words of minimum alignment cost to `word`; ties keep lexicon
// order. Exact: pruning only skips words that provably cannot enter the top k.
std::vector<std::pair<std::string, double>> detect_best(const TransliterationModel& m,
                                                        const Lexicon& lex,
                                                        const std::string& word, size_t k);

// 1-based position of `gold` in the full cost-sorted lexicon (lexicon order
// breaks cost ties); nullopt when gold is not a lexicon entry.
std::optional<size_t> rank_of(const TransliterationModel& m, const Lexicon& lex,
                              const std::string& word, const std::string& gold);

} // namespace translit

#endif
