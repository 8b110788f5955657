#include "translit/corpus.hpp"
#include "translit/evaluation.hpp"
#include "translit/generation.hpp"
#include "translit/lexicon_match.hpp"
#include "translit/model.hpp"
#include "translit/semantics.hpp"
#include "translit/training.hpp"
#include "translit/unicode.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

using namespace translit;

void write_candidates_tsv(const std::vector<Candidate>& cands, std::ostream& out) {
  char buf[32];
  for (size_t i = 0; i < cands.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6g", cands[i].cost);
    out << (i + 1) << '\t' << cands[i].text << '\t' << buf << '\n';
  }
}

std::vector<size_t> parse_k_list(const std::string& spec) {
  std::vector<size_t> ks;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string tok = spec.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!tok.empty()) ks.push_back(std::stoul(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (ks.empty()) throw CLI::ValidationError("--k", "expected a comma-separated list of integers");
  return ks;
}

std::vector<std::string> split_chars(const std::string& utf8) {
  std::vector<std::string> out;
  for (char32_t c : decode_utf8(utf8)) out.push_back(encode_utf8(std::u32string(1, c)));
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Substring transliteration models: train, generate, match, evaluate"};
  app.require_subcommand(1);

  // clean
  auto* clean = app.add_subcommand("clean", "Normalize and dedup a pair corpus");
  std::string clean_pairs, clean_out, clean_rejects;
  clean->add_option("--pairs", clean_pairs, "input TSV")->required();
  clean->add_option("--out", clean_out, "cleaned TSV")->required();
  clean->add_option("--rejects", clean_rejects, "rejects report TSV");

  // train
  auto* train_cmd = app.add_subcommand("train", "Learn a cost matrix from name pairs");
  std::string train_pairs, train_out, train_stats, train_src_lang = "src", train_tgt_lang = "tgt";
  TrainConfig tcfg;
  uint64_t train_seed = 42;
  bool no_early_stop = false;
  train_cmd->add_option("--pairs", train_pairs, "input TSV")->required();
  train_cmd->add_option("--out", train_out, "model file")->required();
  train_cmd->add_option("--rounds", tcfg.rounds, "training rounds");
  train_cmd->add_option("--lmax", tcfg.lmax, "max piece length");
  train_cmd->add_option("--alpha", tcfg.alpha, "smoothing pseudo-count");
  train_cmd->add_option("--delta", tcfg.delta_flaw, "flaw threshold");
  train_cmd->add_option("--seed", train_seed, "split seed");
  train_cmd->add_option("--stats", train_stats, "round stats CSV");
  train_cmd->add_option("--src-lang", train_src_lang, "source language code");
  train_cmd->add_option("--tgt-lang", train_tgt_lang, "target language code");
  train_cmd->add_flag("--no-early-stop", no_early_stop, "always run all rounds");

  // transliterate
  auto* gen = app.add_subcommand("transliterate", "Construct k-best transliterations");
  std::string gen_model, gen_word;
  size_t gen_k = 20;
  gen->add_option("--model", gen_model)->required();
  gen->add_option("--word", gen_word)->required();
  gen->add_option("--k", gen_k);

  // pivot
  auto* pivot = app.add_subcommand("pivot", "Transliterate through English");
  std::string pv_m1, pv_m2, pv_word;
  size_t pv_k = 20, pv_beam = 0;
  pivot->add_option("--model1", pv_m1, "source->EN model")->required();
  pivot->add_option("--model2", pv_m2, "EN->target model")->required();
  pivot->add_option("--word", pv_word)->required();
  pivot->add_option("--k", pv_k);
  pivot->add_option("--beam", pv_beam, "intermediates per leg (default 5k)");

  // match
  auto* match = app.add_subcommand("match", "Nearest lexicon entries");
  std::string mt_model, mt_lex, mt_word, mt_gold;
  size_t mt_k = 10;
  match->add_option("--model", mt_model)->required();
  match->add_option("--lexicon", mt_lex)->required();
  match->add_option("--word", mt_word)->required();
  match->add_option("--k", mt_k);
  match->add_option("--gold", mt_gold, "also print the rank of this reference");

  // evaluate
  auto* eval = app.add_subcommand("evaluate", "Top-k / Levenshtein-1 metrics on a test set");
  std::string ev_model, ev_test, ev_out, ev_k = "1,20,100";
  eval->add_option("--model", ev_model)->required();
  eval->add_option("--test", ev_test, "TSV of (source, gold) pairs")->required();
  eval->add_option("--k", ev_k, "comma-separated k values");
  eval->add_option("--out", ev_out, "report CSV");

  // heatmap
  auto* heat = app.add_subcommand("heatmap", "Single-character cost matrix CSV");
  std::string hm_model, hm_out, hm_src, hm_tgt;
  heat->add_option("--model", hm_model)->required();
  heat->add_option("--out", hm_out)->required();
  heat->add_option("--src-chars", hm_src, "source characters (default: model alphabet)");
  heat->add_option("--tgt-chars", hm_tgt, "target characters (default: model alphabet)");

  // friends
  auto* friends = app.add_subcommand("friends", "Scan lexicons for true/false friends");
  std::string fr_model, fr_lex_src, fr_lex_tgt, fr_dict, fr_emb_src, fr_emb_tgt, fr_out,
      fr_summary, fr_counts;
  ScanConfig scfg;
  friends->add_option("--model", fr_model)->required();
  friends->add_option("--lex-src", fr_lex_src)->required();
  friends->add_option("--lex-tgt", fr_lex_tgt)->required();
  friends->add_option("--dict", fr_dict)->required();
  friends->add_option("--emb-src", fr_emb_src)->required();
  friends->add_option("--emb-tgt", fr_emb_tgt)->required();
  friends->add_option("--out", fr_out, "friend records TSV")->required();
  friends->add_option("--dmax", scfg.d_max, "cohort A cost threshold");
  friends->add_option("--next", scfg.next_cohort, "cohort B size");
  friends->add_option("--minlen", scfg.min_len, "minimum word length");
  friends->add_option("--nn", scfg.nn, "neighborhood size");
  friends->add_option("--tau", scfg.tau, "link-count threshold");
  friends->add_option("--summary", fr_summary, "cohort summary CSV");
  friends->add_option("--counts", fr_counts, "TP/EP/B/N counts CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e); // prints usage to stderr
    return 1;
  }

  try {
    if (*clean) {
      CleanReport rep;
      auto raw = load_pairs(clean_pairs, &rep);
      PairCorpus corpus = clean_corpus(raw, {}, &rep);
      std::ofstream out(clean_out, std::ios::binary);
      if (!out) throw std::runtime_error("cannot write: " + clean_out);
      for (const auto& [s, t] : corpus.pairs) out << s << '\t' << t << '\n';
      if (!clean_rejects.empty()) {
        std::ofstream rej(clean_rejects, std::ios::binary);
        for (const auto& r : rep.rejects) rej << r.line << '\t' << r.reason << '\t' << r.content << '\n';
      }
      std::cerr << "kept " << corpus.size() << ", rejected " << rep.rejects.size() << "\n";
    } else if (*train_cmd) {
      tcfg.early_stop = !no_early_stop;
      CleanReport rep;
      auto raw = load_pairs(train_pairs, &rep);
      PairCorpus corpus = clean_corpus(raw, {}, &rep);
      corpus.source_lang = train_src_lang;
      corpus.target_lang = train_tgt_lang;
      split_corpus(corpus, train_seed);
      auto [model, stats] = train(corpus, tcfg);
      serialize(model, train_out);
      if (!train_stats.empty()) write_round_stats_csv(stats, train_stats);
      std::cerr << "trained " << stats.size() << " rounds, dirtiness "
                << (stats.empty() ? 0.0 : stats.back().dirtiness) << "\n";
    } else if (*gen) {
      auto m = deserialize(gen_model);
      write_candidates_tsv(construct_topk(m, normalize_text(gen_word), gen_k), std::cout);
    } else if (*pivot) {
      auto m1 = deserialize(pv_m1);
      auto m2 = deserialize(pv_m2);
      write_candidates_tsv(pivot_topk(m1, m2, normalize_text(pv_word), pv_k, pv_beam), std::cout);
    } else if (*match) {
      auto m = deserialize(mt_model);
      Lexicon lex = load_lexicon(mt_lex, m.target_lang);
      char buf[32];
      size_t rank = 1;
      for (const auto& [w, c] : detect_best(m, lex, normalize_text(mt_word), mt_k)) {
        std::snprintf(buf, sizeof buf, "%.6g", c);
        std::cout << rank++ << '\t' << w << '\t' << buf << '\n';
      }
      if (!mt_gold.empty()) {
        auto r = rank_of(m, lex, normalize_text(mt_word), normalize_text(mt_gold));
        std::cout << "# gold rank\t" << (r ? std::to_string(*r) : std::string("absent")) << '\n';
      }
    } else if (*eval) {
      auto m = deserialize(ev_model);
      CleanReport rep;
      PairCorpus test;
      test.pairs = load_pairs(ev_test, &rep);
      Report r = evaluate(m, test, parse_k_list(ev_k));
      std::cout << format_report_table(r);
      if (!ev_out.empty()) write_report_csv(r, ev_out);
    } else if (*heat) {
      auto m = deserialize(hm_model);
      std::vector<std::string> cs, ct;
      if (!hm_src.empty()) cs = split_chars(hm_src);
      else for (char32_t c : m.src_chars().chars()) cs.push_back(encode_utf8(std::u32string(1, c)));
      if (!hm_tgt.empty()) ct = split_chars(hm_tgt);
      else for (char32_t c : m.tgt_chars().chars()) ct.push_back(encode_utf8(std::u32string(1, c)));
      std::sort(cs.begin(), cs.end());
      std::sort(ct.begin(), ct.end());
      export_heatmap(m, cs, ct, hm_out);
    } else if (*friends) {
      auto m = deserialize(fr_model);
      Lexicon ls = load_lexicon(fr_lex_src, m.source_lang);
      Lexicon lt = load_lexicon(fr_lex_tgt, m.target_lang);
      TranslationDict dict = load_dict(fr_dict);
      EmbeddingTable es = load_embeddings(fr_emb_src, m.source_lang);
      EmbeddingTable et = load_embeddings(fr_emb_tgt, m.target_lang);
      ScanResult res = scan_friends(m, ls, lt, dict, es, et, scfg);
      write_friends_tsv(res.records, fr_out);
      if (!fr_counts.empty()) write_class_counts_csv(classify_counts(res.records), fr_counts);
      if (!fr_summary.empty()) {
        std::ofstream out(fr_summary, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write: " + fr_summary);
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "cohort,size,translation_fraction,pruned_fraction\nA,%zu,%.4f,%.4f\nB,%zu,%.4f,%.4f\n",
                      res.summary.size_a, res.summary.translation_fraction_a,
                      res.summary.pruned_fraction_a, res.summary.size_b,
                      res.summary.translation_fraction_b, res.summary.pruned_fraction_b);
        out << buf;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
