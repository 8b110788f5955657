#include "translit/evaluation.hpp"
#include "translit/unicode.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace translit;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) {
  return slurp(std::string(TRANSLIT_TEST_DATA_DIR) + "/" + name);
}

} // namespace

TEST_CASE("levenshtein1 examples") {
  CHECK(levenshtein1("kate", "kate"));
  CHECK(levenshtein1("kate", "kates"));
  CHECK(levenshtein1("kate", "cate"));
  CHECK(levenshtein1("kate", "ate"));
  CHECK(!levenshtein1("kate", "cates"));
  CHECK(!levenshtein1("kate", "xyzz"));
  CHECK(levenshtein1("", "a"));
  CHECK(!levenshtein1("", "ab"));
  CHECK(levenshtein1("ша", "шя")); // multibyte chars count as one edit
}

TEST_CASE("levenshtein1 agrees with full edit distance") {
  std::vector<std::u32string> all = oracles::all_strings(U"abc", 4);
  for (const auto& a : all)
    for (const auto& b : all) {
      bool expect = oracles::edit_distance(a, b) <= 1;
      CHECK(levenshtein1(encode_utf8(a), encode_utf8(b)) == expect);
    }
}

TEST_CASE("topk_hit") {
  std::vector<Candidate> cands = {{"x", 0.1, {}}, {"y", 0.2, {}}, {"z", 0.3, {}}};
  CHECK(topk_hit(cands, "x", 1));
  CHECK(!topk_hit(cands, "y", 1));
  CHECK(topk_hit(cands, "y", 2));
  CHECK(!topk_hit(cands, "q", 3));
  CHECK(topk_hit(cands, "z", 100)); // k beyond list size is fine
}

TEST_CASE("evaluate a perfect one-rule model") {
  TransliterationModel m;
  m.observe_alphabet(U"ab", U"xy");
  m.set_cost({U"a", U"x"}, 0.01);
  m.set_cost({U"b", U"y"}, 0.01);
  PairCorpus test;
  test.pairs = {{"ab", "xy"}, {"ba", "yx"}, {"aa", "xx"}};
  test.split_tags.assign(3, Split::test);
  Report r = evaluate(m, test, {1, 2});
  CHECK(r.items == 3);
  REQUIRE(r.topk_pct.size() == 2);
  CHECK(r.topk_pct[0].second == doctest::Approx(100.0));
  CHECK(r.topk_pct[1].second == doctest::Approx(100.0));
  CHECK(r.lev1_pct == doctest::Approx(100.0));
}

TEST_CASE("report CSV matches the committed layout byte for byte") {
  Report r;
  r.items = 500;
  r.topk_pct = {{1, 92.4}, {20, 99.2}, {100, 100.0}};
  r.lev1_pct = 97.8;
  const std::string path = "/tmp/translit_test_report.csv";
  write_report_csv(r, path);
  CHECK(slurp(path) == golden("report.csv"));
}

TEST_CASE("report table layout") {
  Report r;
  r.topk_pct = {{1, 30.0}, {100, 85.0}};
  r.lev1_pct = 42.5;
  std::string t = format_report_table(r);
  CHECK(t == golden("report_table.txt"));
  CHECK(t.find("Top-1") != std::string::npos);
  CHECK(t.find("30.0%") != std::string::npos);
  CHECK(t.find("85.0%") != std::string::npos);
}

TEST_CASE("heatmap export") {
  TransliterationModel m;
  m.observe_alphabet(U"ab", U"xy");
  SUBCASE("fresh model: every cell is 2") {
    const std::string path = "/tmp/translit_test_heat.csv";
    export_heatmap(m, {"a", "b"}, {"x", "y"}, path);
    CHECK(slurp(path) == ",x,y\na,2,2\nb,2,2\n");
  }
  SUBCASE("stored costs appear") {
    m.set_cost({U"a", U"x"}, 0.25);
    const std::string path = "/tmp/translit_test_heat2.csv";
    export_heatmap(m, {"a"}, {"x", "y"}, path);
    CHECK(slurp(path) == ",x,y\na,0.25,2\n");
  }
  SUBCASE("empty axis rejected") {
    CHECK_THROWS_AS(export_heatmap(m, {}, {"x"}, "/tmp/heat3.csv"), std::invalid_argument);
  }
}
