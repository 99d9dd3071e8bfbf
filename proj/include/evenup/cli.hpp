#pragma once

// Command drivers behind the evenup tool. They are plain functions on
// streams so tests can exercise argument handling, output and exit
// codes without spawning processes.
//
// Exit codes: 0 success, 1 disagreement/mismatch, 2 invalid arguments,
// 3 enumeration budget exceeded, 4 fetch failure.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "evenup/catalan.hpp"
#include "evenup/errors.hpp"
#include "evenup/format.hpp"
#include "evenup/genfunc.hpp"
#include "evenup/oeis.hpp"
#include "evenup/transfer.hpp"
#include "evenup/words.hpp"

namespace evenup {

inline constexpr int exit_ok = 0;
inline constexpr int exit_disagreement = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_budget = 3;
inline constexpr int exit_fetch = 4;

enum class Engine { brute, gf, transfer, dp, conv, enumeration };

inline bool parse_engine(const std::string& name, Engine& out) {
  if (name == "brute") out = Engine::brute;
  else if (name == "gf") out = Engine::gf;
  else if (name == "transfer") out = Engine::transfer;
  else if (name == "dp") out = Engine::dp;
  else if (name == "conv") out = Engine::conv;
  else if (name == "enum") out = Engine::enumeration;
  else return false;
  return true;
}

inline std::string engine_name(Engine e) {
  switch (e) {
    case Engine::brute: return "brute";
    case Engine::gf: return "gf";
    case Engine::transfer: return "transfer";
    case Engine::dp: return "dp";
    case Engine::conv: return "conv";
    case Engine::enumeration: return "enum";
  }
  return "?";
}

// Either one of the eight word classes (with an alphabet size) or one
// of the eight Catalan variants.
struct Target {
  std::optional<WordClass> word_class;
  std::optional<CatalanVariant> catalan;

  std::string name() const {
    if (word_class) return class_name(*word_class);
    if (catalan) return variant_name(*catalan);
    return "?";
  }
};

inline Target parse_target(const std::string& class_name_arg,
                           const std::string& catalan_arg) {
  Target t;
  if (!class_name_arg.empty() && !catalan_arg.empty())
    throw std::invalid_argument("--class and --catalan are mutually exclusive");
  if (!class_name_arg.empty()) {
    WordClass c;
    if (!parse_word_class(class_name_arg, c))
      throw std::invalid_argument("unknown word class \"" + class_name_arg + "\"");
    t.word_class = c;
  } else if (!catalan_arg.empty()) {
    CatalanVariant v;
    if (!parse_catalan_variant(catalan_arg, v))
      throw std::invalid_argument("unknown Catalan variant \"" + catalan_arg + "\"");
    t.catalan = v;
  } else {
    throw std::invalid_argument("one of --class or --catalan is required");
  }
  return t;
}

// ---- engine dispatch ----

inline std::vector<Int> word_class_sequence(WordClass c, int k, int n_max,
                                            Engine engine, const Int& budget) {
  switch (engine) {
    case Engine::gf:
      return expand_gf(build_gf(c, k), n_max);
    case Engine::transfer: {
      TransitionMatrix m = build_matrix(c.strictness, c.parity, k);
      std::vector<Int> out;
      out.reserve(static_cast<std::size_t>(n_max) + 1);
      for (int n = 0; n <= n_max; ++n)
        out.push_back(c.topology == Topology::cyclic ? count_cyclic(m, n)
                                                     : count_linear(m, n));
      return out;
    }
    case Engine::brute: {
      std::vector<Int> out;
      out.reserve(static_cast<std::size_t>(n_max) + 1);
      for (int n = 0; n <= n_max; ++n)
        out.push_back(count_brute_force(c, k, n, budget));
      return out;
    }
    default:
      throw std::invalid_argument("engine " + engine_name(engine) +
                                  " does not apply to word classes");
  }
}

inline std::vector<Int> catalan_sequence(CatalanVariant v, int n_max,
                                         Engine engine, const Int& budget) {
  switch (engine) {
    case Engine::gf:
      return expand_catalan_gf(v, n_max);
    case Engine::dp: {
      std::vector<Int> out;
      for (int n = 0; n <= n_max; ++n) out.push_back(count_catalan_dp(v, n));
      return out;
    }
    case Engine::conv: {
      if (v.strictness != Strictness::weak)
        throw std::invalid_argument(
            "the convolution engine covers only the weakly-* variants");
      WeakCatalanCounts c = weak_convolution_counts(n_max);
      if (v.ending == Ending::any)
        return v.parity == Parity::even_up ? c.even_up : c.odd_up;
      return v.parity == Parity::even_up ? c.even_up_odd_end
                                         : c.odd_up_even_end;
    }
    case Engine::brute:
    case Engine::enumeration: {
      std::vector<Int> out;
      for (int n = 0; n <= n_max; ++n)
        out.push_back(count_catalan_enum(v, n, budget));
      return out;
    }
    default:
      throw std::invalid_argument("engine " + engine_name(engine) +
                                  " does not apply to Catalan variants");
  }
}

inline std::vector<Int> compute_sequence(const Target& t, int k, int n_max,
                                         Engine engine, const Int& budget) {
  if (t.word_class) {
    if (k < 1) throw std::invalid_argument("--k is required for word classes");
    return word_class_sequence(*t.word_class, k, n_max, engine, budget);
  }
  return catalan_sequence(*t.catalan, n_max, engine, budget);
}

inline Int compute_count(const Target& t, int k, int n, Engine engine,
                         const Int& budget) {
  if (t.word_class) {
    if (k < 1) throw std::invalid_argument("--k is required for word classes");
    const WordClass c = *t.word_class;
    switch (engine) {
      case Engine::gf:
        return expand_gf(build_gf(c, k), n).back();
      case Engine::transfer: {
        TransitionMatrix m = build_matrix(c.strictness, c.parity, k);
        return c.topology == Topology::cyclic ? count_cyclic(m, n)
                                              : count_linear(m, n);
      }
      case Engine::brute:
        return count_brute_force(c, k, n, budget);
      default:
        throw std::invalid_argument("engine " + engine_name(engine) +
                                    " does not apply to word classes");
    }
  }
  const CatalanVariant v = *t.catalan;
  switch (engine) {
    case Engine::gf:
      return expand_catalan_gf(v, n).back();
    case Engine::dp:
      return count_catalan_dp(v, n);
    case Engine::conv:
      return catalan_sequence(v, n, Engine::conv, budget).back();
    case Engine::brute:
    case Engine::enumeration:
      return count_catalan_enum(v, n, budget);
    default:
      throw std::invalid_argument("engine " + engine_name(engine) +
                                  " does not apply to Catalan variants");
  }
}

inline CountTable make_count_table(WordClass c, int k, int n_max,
                                   Engine engine = Engine::gf,
                                   const Int& budget = default_enumeration_budget()) {
  return CountTable{c, k, word_class_sequence(c, k, n_max, engine, budget)};
}

namespace detail {

template <typename F>
int run_command(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const budget_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_budget;
  } catch (const fetch_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_fetch;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_disagreement;
  }
}

}  // namespace detail

// ---- count ----

struct CountOptions {
  Target target;
  int k = 0;
  int n = 0;
  std::optional<Engine> engine;  // default: gf
  Int budget = default_enumeration_budget();
};

inline int run_count(const CountOptions& opt, std::ostream& out,
                     std::ostream& err) {
  return detail::run_command(err, [&] {
    if (opt.n < 0) throw std::invalid_argument("--n must be >= 0");
    Engine engine = opt.engine.value_or(Engine::gf);
    out << to_string(compute_count(opt.target, opt.k, opt.n, engine, opt.budget))
        << "\n";
    return exit_ok;
  });
}

// ---- table ----

struct TableOptions {
  std::optional<Target> target;  // empty + catalan_all -> all 8 variants
  bool catalan_all = false;
  int k_max = 0;
  int n_max = 0;
  OutputFormat format = OutputFormat::markdown;
  std::optional<Engine> engine;
  Int budget = default_enumeration_budget();
};

inline int run_table(const TableOptions& opt, std::ostream& out,
                     std::ostream& err) {
  return detail::run_command(err, [&] {
    if (opt.n_max < 0) throw std::invalid_argument("--n-max must be >= 0");
    Engine engine = opt.engine.value_or(Engine::gf);
    std::vector<TableRow> rows;
    if (opt.catalan_all) {
      for (CatalanVariant v : all_catalan_variants())
        rows.push_back(TableRow{variant_name(v), std::nullopt,
                                catalan_sequence(v, opt.n_max, engine, opt.budget)});
    } else if (opt.target && opt.target->word_class) {
      if (opt.k_max < 1)
        throw std::invalid_argument("--k-max must be >= 1 for word classes");
      for (int k = 1; k <= opt.k_max; ++k)
        rows.push_back(TableRow{class_name(*opt.target->word_class), k,
                                word_class_sequence(*opt.target->word_class, k,
                                                    opt.n_max, engine, opt.budget)});
    } else if (opt.target && opt.target->catalan) {
      rows.push_back(TableRow{variant_name(*opt.target->catalan), std::nullopt,
                              catalan_sequence(*opt.target->catalan, opt.n_max,
                                               engine, opt.budget)});
    } else {
      throw std::invalid_argument("table needs --class, --catalan, or --catalan all");
    }
    out << render_table(rows, opt.format);
    return exit_ok;
  });
}

// ---- crosscheck ----

struct CrosscheckOptions {
  Target target;
  int k = 0;
  int n_max = 0;
  Int budget = default_enumeration_budget();
};

// Runs every engine that applies to the target and prints a per-n
// agreement matrix. Exhaustive engines are skipped (with a notice) at
// lengths whose enumeration exceeds the budget.
inline int run_crosscheck(const CrosscheckOptions& opt, std::ostream& out,
                          std::ostream& err) {
  return detail::run_command(err, [&] {
    if (opt.n_max < 0) throw std::invalid_argument("--n-max must be >= 0");
    std::vector<Engine> engines;
    if (opt.target.word_class)
      engines = {Engine::brute, Engine::transfer, Engine::gf};
    else if (opt.target.catalan->strictness == Strictness::weak)
      engines = {Engine::enumeration, Engine::dp, Engine::conv, Engine::gf};
    else
      engines = {Engine::enumeration, Engine::dp, Engine::gf};

    // columns: per-engine sequences; exhaustive ones may stop early
    std::vector<std::vector<Int>> columns;
    std::vector<int> limits;  // last n computed per engine
    for (Engine e : engines) {
      int limit = opt.n_max;
      if (e == Engine::brute || e == Engine::enumeration) {
        while (limit >= 0) {
          try {
            if (opt.target.word_class)
              check_enumeration_budget(opt.k, limit, opt.budget);
            else
              check_catalan_budget(limit, opt.budget);
            break;
          } catch (const budget_error&) {
            --limit;
          }
        }
        if (limit < opt.n_max)
          out << "note: " << engine_name(e) << " engine limited to n <= "
              << limit << " by the enumeration budget\n";
      }
      columns.push_back(limit < 0 ? std::vector<Int>{}
                                  : compute_sequence(opt.target, opt.k, limit,
                                                     e, opt.budget));
      limits.push_back(limit);
    }

    out << "n";
    for (Engine e : engines) out << "\t" << engine_name(e);
    out << "\n";
    std::optional<int> first_bad;
    for (int n = 0; n <= opt.n_max; ++n) {
      out << n;
      std::optional<Int> reference;
      bool row_ok = true;
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (n > limits[c]) {
          out << "\t-";
          continue;
        }
        const Int& v = columns[c][static_cast<std::size_t>(n)];
        out << "\t" << to_string(v);
        if (!reference) reference = v;
        else if (*reference != v) row_ok = false;
      }
      out << (row_ok ? "" : "\t<- disagree") << "\n";
      if (!row_ok && !first_bad) first_bad = n;
    }
    if (first_bad) {
      err << "engines disagree at n=" << *first_bad << " for "
          << opt.target.name() << "\n";
      return exit_disagreement;
    }
    out << "all engines agree for " << opt.target.name();
    if (opt.target.word_class) out << " (k=" << opt.k << ")";
    out << ", n <= " << opt.n_max << "\n";
    return exit_ok;
  });
}

// ---- oeis ----

struct OeisOptions {
  Target target;
  int k = 0;
  std::string id;
  int n_max = 10;
  bool live = false;
  long max_offset = 4;
  Int budget = default_enumeration_budget();
};

// `fetch` retrieves the b-file (the CLI passes a live fetcher when
// --live is given, otherwise the cache-only one).
template <typename Fetcher>
int run_oeis_with(const OeisOptions& opt, Fetcher&& fetch_fn, std::ostream& out,
                  std::ostream& err) {
  return detail::run_command(err, [&] {
    if (opt.n_max < 0) throw std::invalid_argument("--n-max must be >= 0");
    OeisSequence seq = fetch_fn(opt.id);
    std::vector<Int> computed =
        compute_sequence(opt.target, opt.k, opt.n_max, Engine::gf, opt.budget);
    ComparisonReport report = compare(computed, seq, opt.max_offset);
    out << opt.target.name();
    if (opt.target.word_class) out << " (k=" << opt.k << ")";
    out << " vs " << opt.id << ": offset "
        << (report.alignment_offset >= 0 ? "+" : "")
        << report.alignment_offset << ", matched " << report.matched << "/"
        << computed.size() << " compared terms\n";
    if (report.first_mismatch) {
      const auto& m = *report.first_mismatch;
      out << "first mismatch at n=" << m.computed_index << ": computed "
          << to_string(m.got) << ", " << opt.id << " has "
          << to_string(m.expected) << "\n";
      return exit_disagreement;
    }
    if (report.matched == 0) {
      out << "no overlapping terms\n";
      return exit_disagreement;
    }
    out << "full match\n";
    return exit_ok;
  });
}

inline int run_oeis(const OeisOptions& opt, std::ostream& out,
                    std::ostream& err) {
  return run_oeis_with(opt, [](const std::string& id) { return fetch_cached(id); },
                       out, err);
}

}  // namespace evenup
