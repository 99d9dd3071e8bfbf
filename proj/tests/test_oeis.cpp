#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "evenup/genfunc.hpp"
#include "evenup/oeis.hpp"

using namespace evenup;

namespace {

const std::filesystem::path kSnapshotDir =
    std::filesystem::path(EVENUP_TEST_DATA_DIR) / "oeis";

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

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

TEST_CASE("b-file parsing") {
  OeisSequence s = parse_bfile("0 1\n1 3\n2 7\n", "A000000");
  CHECK(s.first_index == 0);
  CHECK(s.terms == std::vector<Int>{Int(1), Int(3), Int(7)});

  OeisSequence c = parse_bfile("# comment\n1 1\n\n2 2\n");
  CHECK(c.first_index == 1);
  CHECK(c.terms == std::vector<Int>{Int(1), Int(2)});

  CHECK_THROWS_AS(parse_bfile("0 1\n2 7\n"), bfile_error);
  try {
    parse_bfile("0 1\n2 7\n");
  } catch (const bfile_error& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_bfile("0 one\n"), bfile_error);
  CHECK_THROWS_AS(parse_bfile("0 1 2\n"), bfile_error);

  // negative values and indices are legal b-file content
  OeisSequence neg = parse_bfile("-1 -5\n0 4\n");
  CHECK(neg.first_index == -1);
  CHECK(neg.terms[0] == -5);
}

TEST_CASE("render/parse round-trip", "[property]") {
  std::mt19937 rng(424242u);
  std::uniform_int_distribution<long> first(-3, 5);
  std::uniform_int_distribution<int> len(1, 40);
  std::uniform_int_distribution<long long> value(-1000000, 1000000);
  for (int trial = 0; trial < 25; ++trial) {
    OeisSequence s;
    s.id = "A123456";
    s.first_index = first(rng);
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      Int big(static_cast<long>(value(rng)));
      s.terms.push_back(big * big * big);  // exercise multi-limb values
    }
    OeisSequence back = parse_bfile(render_bfile(s), s.id);
    CHECK(back.first_index == s.first_index);
    CHECK(back.terms == s.terms);
  }
}

TEST_CASE("comparison against itself is exact at offset 0") {
  std::vector<Int> computed = expand_gf(
      build_gf(WordClass{Strictness::weak, Parity::even_up, Topology::linear}, 4),
      12);
  OeisSequence self = parse_bfile(render_bfile(OeisSequence{"", 0, computed}));
  ComparisonReport r = compare(computed, self, 3);
  CHECK(r.full_match());
  CHECK(r.alignment_offset == 0);
  CHECK(r.matched == static_cast<long>(computed.size()));
}

TEST_CASE("offset search finds shifted alignments") {
  std::vector<Int> computed = expand_gf(
      build_gf(WordClass{Strictness::strict, Parity::even_up, Topology::linear}, 3),
      10);
  OeisSequence seq = parse_bfile(slurp(kSnapshotDir / "A001333.txt"), "A001333");
  ComparisonReport r = compare(computed, seq, 3);
  CHECK(r.full_match());
  CHECK(r.alignment_offset == 1);
  CHECK(r.matched >= 10);

  // weakly odd-up k=3 is 2^{n+1}-1, one step into A000225
  std::vector<Int> bits = expand_gf(
      build_gf(WordClass{Strictness::weak, Parity::odd_up, Topology::linear}, 3),
      10);
  OeisSequence a225 = parse_bfile(slurp(kSnapshotDir / "A000225.txt"), "A000225");
  ComparisonReport rb = compare(bits, a225, 3);
  CHECK(rb.full_match());
  CHECK(rb.alignment_offset == 1);
}

TEST_CASE("mismatches are reported with both values") {
  std::vector<Int> computed = expand_gf(
      build_gf(WordClass{Strictness::strict, Parity::even_up, Topology::linear}, 2),
      10);  // constant 2s
  OeisSequence fib = parse_bfile(slurp(kSnapshotDir / "A000045.txt"), "A000045");
  ComparisonReport r = compare(computed, fib, 3);
  CHECK_FALSE(r.full_match());
  REQUIRE(r.first_mismatch.has_value());
  CHECK(r.first_mismatch->got != r.first_mismatch->expected);
}

TEST_CASE("full match swaps to the negated offset") {
  std::vector<Int> computed = expand_gf(
      build_gf(WordClass{Strictness::strict, Parity::even_up, Topology::linear}, 3),
      10);
  OeisSequence seq = parse_bfile(slurp(kSnapshotDir / "A001333.txt"), "A001333");
  ComparisonReport fwd = compare(computed, seq, 3);
  REQUIRE(fwd.full_match());

  // swap roles: the b-file terms become the computed sequence
  std::vector<Int> seq_head(seq.terms.begin(), seq.terms.begin() + 12);
  OeisSequence computed_as_file{"", 0, computed};
  ComparisonReport rev = compare(seq_head, computed_as_file, 3);
  CHECK_FALSE(rev.first_mismatch.has_value());
  CHECK(rev.alignment_offset == -fwd.alignment_offset);
}

TEST_CASE("cache round-trip and cache-only fetch") {
  auto tmp = std::filesystem::temp_directory_path() /
             ("evenup-oeis-test-" + std::to_string(::getpid()));
  std::filesystem::remove_all(tmp);
  CacheDirGuard guard(tmp.string());

  CHECK(oeis_cache_dir() == tmp);
  CHECK_FALSE(oeis_cache_read("A000045").has_value());
  CHECK_THROWS_AS(fetch_cached("A000045"), fetch_error);

  oeis_cache_write("A000045", "0 0\n1 1\n2 1\n3 2\n4 3\n");
  auto text = oeis_cache_read("A000045");
  REQUIRE(text.has_value());
  OeisSequence fib = fetch_cached("A000045");
  CHECK(fib.terms == std::vector<Int>{Int(0), Int(1), Int(1), Int(2), Int(3)});

  CHECK_THROWS_AS(fetch_cached("A00"), std::invalid_argument);
  CHECK_THROWS_AS(fetch_cached("B000045"), std::invalid_argument);
  std::filesystem::remove_all(tmp);
}

TEST_CASE("vendored snapshots act as a pre-seeded cache") {
  CacheDirGuard guard(kSnapshotDir.string());
  OeisSequence fib = fetch_cached("A000045");
  REQUIRE(fib.terms.size() >= 10);
  CHECK(fib.first_index == 0);
  CHECK(std::vector<Int>(fib.terms.begin(), fib.terms.begin() + 5) ==
        std::vector<Int>{Int(0), Int(1), Int(1), Int(2), Int(3)});

  // odd-up words over [2] are Fibonacci two steps in
  std::vector<Int> computed = expand_gf(
      build_gf(WordClass{Strictness::strict, Parity::odd_up, Topology::linear}, 2),
      11);
  ComparisonReport r = compare(computed, fib, 3);
  CHECK(r.full_match());
  CHECK(r.alignment_offset == 2);
}
