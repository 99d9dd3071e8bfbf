#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <thread>

#include "evenup/cli.hpp"

using namespace evenup;

namespace {

const std::string kSnapshotDir =
    (std::filesystem::path(EVENUP_TEST_DATA_DIR) / "oeis").string();

Target word_target(const std::string& name) { return parse_target(name, ""); }
Target catalan_target(const std::string& name) { return parse_target("", name); }

struct CacheDirGuard {
  explicit CacheDirGuard(const std::string& dir) {
    if (const char* old = std::getenv("OEIS_CACHE_DIR")) previous = old;
    ::setenv("OEIS_CACHE_DIR", dir.c_str(), 1);
  }
  ~CacheDirGuard() {
    if (previous) ::setenv("OEIS_CACHE_DIR", previous->c_str(), 1);
    else ::unsetenv("OEIS_CACHE_DIR");
  }
  std::optional<std::string> previous;
};

}  // namespace

TEST_CASE("count command") {
  std::ostringstream out, err;
  CountOptions opt;
  opt.target = word_target("even-up");
  opt.k = 5;
  opt.n = 10;
  opt.engine = Engine::gf;
  CHECK(run_count(opt, out, err) == exit_ok);
  CHECK(out.str() == "911219\n");

  std::ostringstream out2, err2;
  CountOptions dp;
  dp.target = catalan_target("weakly-odd-up");
  dp.n = 0;
  dp.engine = Engine::dp;
  CHECK(run_count(dp, out2, err2) == exit_ok);
  CHECK(out2.str() == "1\n");

  std::ostringstream out3, err3;
  CountOptions tr;
  tr.target = word_target("cyclic-weakly-even-up");
  tr.k = 4;
  tr.n = 9;
  tr.engine = Engine::transfer;
  CHECK(run_count(tr, out3, err3) == exit_ok);
  CHECK(out3.str() == "5779\n");
}

TEST_CASE("count command error paths") {
  std::ostringstream out, err;
  CHECK_THROWS_AS(word_target("upwards"), std::invalid_argument);
  CHECK_THROWS_AS(parse_target("even-up", "weakly-even-up"), std::invalid_argument);
  CHECK_THROWS_AS(parse_target("", ""), std::invalid_argument);

  // word-class count without --k
  CountOptions no_k;
  no_k.target = word_target("even-up");
  no_k.n = 3;
  CHECK(run_count(no_k, out, err) == exit_usage);
  CHECK(err.str().find("--k") != std::string::npos);

  // brute force over budget
  std::ostringstream out2, err2;
  CountOptions brute;
  brute.target = word_target("even-up");
  brute.k = 10;
  brute.n = 12;
  brute.engine = Engine::brute;
  CHECK(run_count(brute, out2, err2) == exit_budget);

  // transfer engine on a catalan variant
  std::ostringstream out3, err3;
  CountOptions bad;
  bad.target = catalan_target("weakly-even-up");
  bad.n = 3;
  bad.engine = Engine::transfer;
  CHECK(run_count(bad, out3, err3) == exit_usage);
}

TEST_CASE("table formats carry identical numbers") {
  TableOptions opt;
  opt.target = word_target("odd-up");
  opt.k_max = 6;
  opt.n_max = 10;

  auto run_with = [&](OutputFormat f) {
    std::ostringstream out, err;
    opt.format = f;
    REQUIRE(run_table(opt, out, err) == exit_ok);
    return out.str();
  };
  std::string csv = run_with(OutputFormat::csv);
  std::string json = run_with(OutputFormat::json);
  std::string markdown = run_with(OutputFormat::markdown);

  auto digits_only = [](const std::string& text) {
    std::vector<std::string> numbers;
    std::string cur;
    for (char c : text) {
      if (std::isdigit(static_cast<unsigned char>(c))) cur += c;
      else if (!cur.empty()) {
        numbers.push_back(cur);
        cur.clear();
      }
    }
    if (!cur.empty()) numbers.push_back(cur);
    return numbers;
  };
  // strip headers/markup, then the numeric payload must agree cell-for-cell
  auto csv_nums = digits_only(csv.substr(csv.find('\n') + 1));
  auto md = digits_only(markdown);
  CHECK_FALSE(csv_nums.empty());
  // csv rows are "k,n,count": keep every third token
  std::vector<std::string> csv_counts;
  for (std::size_t i = 2; i < csv_nums.size(); i += 3)
    csv_counts.push_back(csv_nums[i]);
  // markdown leads with the n header row and each row leads with k
  std::vector<std::string> md_counts;
  for (std::size_t i = 11, row = 0; row < 6; ++row) {
    ++i;  // skip the k cell
    for (int n = 0; n <= 10; ++n) md_counts.push_back(md.at(i++));
  }
  CHECK(csv_counts == md_counts);
  CHECK(json.find("\"4779290\"") != std::string::npos);
  CHECK(csv.find("6,10,4779290") != std::string::npos);

  // spot row: k = 1 table of even-up is all ones
  std::ostringstream out, err;
  TableOptions ones;
  ones.target = word_target("even-up");
  ones.k_max = 1;
  ones.n_max = 3;
  ones.format = OutputFormat::csv;
  REQUIRE(run_table(ones, out, err) == exit_ok);
  CHECK(out.str() == "k,n,count\n1,0,1\n1,1,1\n1,2,1\n1,3,1\n");
}

TEST_CASE("catalan table covers the eight variants") {
  TableOptions opt;
  opt.catalan_all = true;
  opt.n_max = 10;
  opt.format = OutputFormat::csv;
  std::ostringstream out, err;
  REQUIRE(run_table(opt, out, err) == exit_ok);
  CHECK(out.str().find("variant,n,count") == 0);
  CHECK(out.str().find("weakly-even-up,10,4654") != std::string::npos);
  CHECK(out.str().find("weakly-odd-up,10,5448") != std::string::npos);
  CHECK(out.str().find("strict-even-up-odd-end,10,835") != std::string::npos);
  CHECK(out.str().find("strict-odd-up-even-end,10,603") != std::string::npos);
}

TEST_CASE("bfile table output round-trips through the parser") {
  for (WordClass c : all_word_classes()) {
    std::vector<Int> counts = word_class_sequence(c, 3, 9, Engine::gf,
                                                  default_enumeration_budget());
    std::string text = render_table({TableRow{class_name(c), 3, counts}},
                                    OutputFormat::bfile);
    OeisSequence parsed = parse_bfile(text, "A000000");
    ComparisonReport r = compare(counts, parsed, 2);
    CHECK(r.full_match());
    CHECK(r.alignment_offset == 0);
    CHECK(r.matched == 10);
  }
  for (CatalanVariant v : all_catalan_variants()) {
    std::vector<Int> counts = catalan_sequence(v, 9, Engine::gf,
                                               default_enumeration_budget());
    std::string text = render_table({TableRow{variant_name(v), std::nullopt, counts}},
                                    OutputFormat::bfile);
    ComparisonReport r = compare(counts, parse_bfile(text), 2);
    CHECK(r.full_match());
    CHECK(r.alignment_offset == 0);
  }
  CHECK_THROWS_AS(render_table({TableRow{"a", 1, {Int(1)}},
                                TableRow{"b", 2, {Int(1)}}},
                               OutputFormat::bfile),
                  std::invalid_argument);
}

TEST_CASE("crosscheck command") {
  std::ostringstream out, err;
  CrosscheckOptions opt;
  opt.target = word_target("cyclic-odd-up");
  opt.k = 4;
  opt.n_max = 9;
  CHECK(run_crosscheck(opt, out, err) == exit_ok);
  CHECK(out.str().find("24914") != std::string::npos);
  CHECK(out.str().find("all engines agree") != std::string::npos);

  std::ostringstream out2, err2;
  CrosscheckOptions ones;
  ones.target = word_target("even-up");
  ones.k = 1;
  ones.n_max = 10;
  CHECK(run_crosscheck(ones, out2, err2) == exit_ok);

  std::ostringstream out3, err3;
  CrosscheckOptions cat;
  cat.target = catalan_target("strict-odd-up-even-end");
  cat.n_max = 10;
  CHECK(run_crosscheck(cat, out3, err3) == exit_ok);
  CHECK(out3.str().find("603") != std::string::npos);

  // tight budget: exhaustive engine is skipped with a notice, still agrees
  std::ostringstream out4, err4;
  CrosscheckOptions tight;
  tight.target = word_target("weakly-odd-up");
  tight.k = 4;
  tight.n_max = 8;
  tight.budget = Int(1000);
  CHECK(run_crosscheck(tight, out4, err4) == exit_ok);
  CHECK(out4.str().find("note: brute engine limited") != std::string::npos);
}

TEST_CASE("count tables") {
  for (WordClass c : all_word_classes())
    for (int k = 1; k <= 6; ++k) {
      CountTable t = make_count_table(c, k, 8);
      CHECK(t.counts[0] == 1);
      CHECK(t.counts.size() == 9);
      for (int n = 0; n <= 8; ++n)
        CHECK(t.counts[n] <= ipow(Int(k), static_cast<unsigned long>(n)));
    }
}

TEST_CASE("engines are safe to run concurrently") {
  std::vector<std::vector<Int>> results(8);
  std::vector<std::thread> workers;
  auto classes = all_word_classes();
  for (std::size_t i = 0; i < classes.size(); ++i)
    workers.emplace_back([&, i] {
      CrosscheckOptions opt;
      opt.target = Target{classes[i], std::nullopt};
      opt.k = 4;
      opt.n_max = 8;
      std::ostringstream out, err;
      if (run_crosscheck(opt, out, err) == exit_ok)
        results[i] = word_class_sequence(classes[i], 4, 8, Engine::gf,
                                         default_enumeration_budget());
    });
  for (auto& w : workers) w.join();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    REQUIRE_FALSE(results[i].empty());
    std::vector<Int> sequential = word_class_sequence(
        classes[i], 4, 8, Engine::gf, default_enumeration_budget());
    CHECK(results[i] == sequential);
  }
}

TEST_CASE("oeis command") {
  CacheDirGuard guard(kSnapshotDir);

  std::ostringstream out, err;
  OeisOptions opt;
  opt.target = word_target("weakly-even-up");
  opt.k = 5;
  opt.id = "A012814";
  opt.n_max = 10;
  CHECK(run_oeis(opt, out, err) == exit_ok);
  CHECK(out.str().find("full match") != std::string::npos);

  std::ostringstream out2, err2;
  OeisOptions bad;
  bad.target = word_target("even-up");
  bad.k = 2;
  bad.id = "A000045";
  bad.n_max = 10;
  CHECK(run_oeis(bad, out2, err2) == exit_disagreement);
  CHECK(out2.str().find("first mismatch") != std::string::npos);

  std::ostringstream out3, err3;
  OeisOptions motzkin;
  motzkin.target = catalan_target("strict-even-up-odd-end");
  motzkin.id = "A001006";
  motzkin.n_max = 10;
  CHECK(run_oeis(motzkin, out3, err3) == exit_ok);

  std::ostringstream out4, err4;
  OeisOptions malformed = opt;
  malformed.id = "A00";
  CHECK(run_oeis(malformed, out4, err4) == exit_usage);

  std::ostringstream out5, err5;
  OeisOptions missing = opt;
  missing.id = "A999999";
  CHECK(run_oeis(missing, out5, err5) == exit_fetch);
}
