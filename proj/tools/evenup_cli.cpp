// evenup: exact enumeration of parity-constrained words and Catalan words.
//
// Subcommands: count, table, crosscheck, oeis. See --help of each.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "evenup/cli.hpp"
#include "evenup/oeis_fetch.hpp"

namespace {

constexpr const char* kClassHelp =
    "word class: even-up, odd-up, weakly-even-up, weakly-odd-up, "
    "cyclic-even-up, cyclic-odd-up, cyclic-weakly-even-up, "
    "cyclic-weakly-odd-up";
constexpr const char* kCatalanHelp =
    "Catalan variant: weakly-even-up, weakly-odd-up, weakly-even-up-odd-end, "
    "weakly-odd-up-even-end, strict-even-up, strict-odd-up, "
    "strict-even-up-odd-end, strict-odd-up-even-end";

struct CommonArgs {
  std::string word_class;
  std::string catalan;
  std::string method;
  long long budget = 0;
};

void add_target_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--class", args.word_class, kClassHelp);
  cmd->add_option("--catalan", args.catalan, kCatalanHelp);
}

evenup::Int effective_budget(long long flag) {
  return flag > 0 ? evenup::Int(static_cast<long>(flag))
                  : evenup::default_enumeration_budget();
}

std::optional<evenup::Engine> parse_method(const std::string& method,
                                           std::ostream& err) {
  if (method.empty()) return std::nullopt;
  evenup::Engine e;
  if (!evenup::parse_engine(method, e)) {
    err << "error: unknown method \"" << method
        << "\" (expected brute, gf, transfer, dp, conv, or enum)\n";
    throw CLI::RuntimeError(evenup::exit_usage);
  }
  return e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact enumeration of parity-constrained words and Catalan words"};
  app.require_subcommand(1);

  // count
  CommonArgs count_args;
  int count_k = 0, count_n = 0;
  auto* count = app.add_subcommand("count", "print one exact count");
  add_target_flags(count, count_args);
  count->add_option("--k", count_k, "alphabet size (word classes only)");
  count->add_option("--n", count_n, "word length")->required();
  count->add_option("--method", count_args.method,
                    "engine: brute, gf (default), transfer, dp, conv, enum");
  count->add_option("--budget", count_args.budget,
                    "max words an exhaustive engine may enumerate");

  // table
  CommonArgs table_args;
  int table_kmax = 0, table_nmax = 0;
  std::string table_format = "markdown";
  auto* table = app.add_subcommand("table", "print a counts table");
  add_target_flags(table, table_args);
  table->add_option("--k-max", table_kmax, "rows k = 1..k-max (word classes)");
  table->add_option("--n-max", table_nmax, "columns n = 0..n-max")->required();
  table->add_option("--format", table_format, "csv, json, markdown, bfile");
  table->add_option("--method", table_args.method, "engine (default gf)");
  table->add_option("--budget", table_args.budget, "enumeration budget");

  // crosscheck
  CommonArgs cross_args;
  int cross_k = 0, cross_nmax = 0;
  auto* cross = app.add_subcommand(
      "crosscheck", "run all applicable engines and compare them");
  add_target_flags(cross, cross_args);
  cross->add_option("--k", cross_k, "alphabet size (word classes only)");
  cross->add_option("--n-max", cross_nmax, "check n = 0..n-max")->required();
  cross->add_option("--budget", cross_args.budget, "enumeration budget");

  // oeis
  CommonArgs oeis_args;
  int oeis_k = 0, oeis_nmax = 10;
  long oeis_max_offset = 4;
  std::string oeis_id;
  bool oeis_live = false;
  auto* oeis = app.add_subcommand(
      "oeis", "compare a computed sequence against an OEIS b-file");
  add_target_flags(oeis, oeis_args);
  oeis->add_option("--k", oeis_k, "alphabet size (word classes only)");
  oeis->add_option("--id", oeis_id, "OEIS id, e.g. A001333")->required();
  oeis->add_option("--n-max", oeis_nmax, "compare n = 0..n-max (default 10)");
  oeis->add_option("--max-offset", oeis_max_offset,
                   "offset search range (default 4)");
  oeis->add_flag("--live", oeis_live,
                 "allow fetching from oeis.org on cache miss "
                 "(cache dir: $OEIS_CACHE_DIR)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return evenup::exit_usage;
  }

  try {
    if (count->parsed()) {
      evenup::CountOptions opt;
      opt.target = evenup::parse_target(count_args.word_class, count_args.catalan);
      opt.k = count_k;
      opt.n = count_n;
      opt.engine = parse_method(count_args.method, std::cerr);
      opt.budget = effective_budget(count_args.budget);
      return evenup::run_count(opt, std::cout, std::cerr);
    }
    if (table->parsed()) {
      evenup::TableOptions opt;
      if (table_args.catalan == "all") {
        opt.catalan_all = true;
      } else {
        opt.target = evenup::parse_target(table_args.word_class, table_args.catalan);
      }
      opt.k_max = table_kmax;
      opt.n_max = table_nmax;
      if (!evenup::parse_output_format(table_format, opt.format)) {
        std::cerr << "error: unknown format \"" << table_format << "\"\n";
        return evenup::exit_usage;
      }
      opt.engine = parse_method(table_args.method, std::cerr);
      opt.budget = effective_budget(table_args.budget);
      return evenup::run_table(opt, std::cout, std::cerr);
    }
    if (cross->parsed()) {
      evenup::CrosscheckOptions opt;
      opt.target = evenup::parse_target(cross_args.word_class, cross_args.catalan);
      opt.k = cross_k;
      opt.n_max = cross_nmax;
      opt.budget = effective_budget(cross_args.budget);
      return evenup::run_crosscheck(opt, std::cout, std::cerr);
    }
    if (oeis->parsed()) {
      evenup::OeisOptions opt;
      opt.target = evenup::parse_target(oeis_args.word_class, oeis_args.catalan);
      opt.k = oeis_k;
      opt.id = oeis_id;
      opt.n_max = oeis_nmax;
      opt.max_offset = oeis_max_offset;
      opt.live = oeis_live;
      return evenup::run_oeis_with(
          opt,
          [&](const std::string& id) { return evenup::fetch(id, opt.live); },
          std::cout, std::cerr);
    }
  } catch (const CLI::RuntimeError& e) {
    return e.get_exit_code();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return evenup::exit_usage;
  }
  return evenup::exit_usage;
}
