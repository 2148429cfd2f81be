// kiselman: command-line front end for the kiselman library.
//
//   kiselman canon  --n 3 "1 2 1" [--trace]
//   kiselman mul    --n 2 "2" "1 2"
//   kiselman enum   --n 4 [--cache-dir DIR] [--format text|json|csv]
//   kiselman solve  --n 3 --y "1"
//   kiselman stats  --n 4
//   kiselman verify --n 3 [--suite all] [--seed 0] [--format json]
//
// Exit codes: 0 success, 2 usage or validation error, 3 resource cap hit,
// 4 invariant breach or failed verification.

#include <cstdlib>    // for getenv
#include <iostream>   // for cout, cerr
#include <map>        // for map
#include <optional>   // for optional
#include <sstream>    // for ostringstream
#include <string>     // for string
#include <vector>     // for vector

#include "CLI11.hpp"
#include "json.hpp"

#include "kiselman/algebra.hpp"
#include "kiselman/enumerate.hpp"
#include "kiselman/equations.hpp"
#include "kiselman/exception.hpp"
#include "kiselman/rewrite.hpp"
#include "kiselman/verify.hpp"

namespace {

  using json = nlohmann::ordered_json;
  using namespace kiselman;

  enum class Format { text, json, csv };

  enum ExitCode : int {
    exit_ok        = 0,
    exit_usage     = 2,
    exit_resource  = 3,
    exit_invariant = 4,
  };

  struct RunConfig {
    std::size_t                 rank = 0;
    Format                      format = Format::text;
    std::string                 cache_dir;
    std::size_t                 limit = default_element_limit;
    std::uint64_t               seed  = 0;
    bool                        trace = false;
    bool                        allow_large = false;
    std::vector<std::string>    suites;
    std::string                 y;
    std::vector<std::string>    words;
  };

  std::optional<std::filesystem::path> cache_dir(RunConfig const& cfg) {
    if (!cfg.cache_dir.empty()) {
      return std::filesystem::path(cfg.cache_dir);
    }
    if (char const* env = std::getenv("KISELMAN_CACHE_DIR"); env && *env) {
      return std::filesystem::path(env);
    }
    return std::nullopt;
  }

  json words_json(std::vector<Element> const& xs) {
    json out = json::array();
    for (auto const& x : xs) {
      out.push_back(to_string(x));
    }
    return out;
  }

  std::string csv_quote(std::string const& s) {
    return "\"" + s + "\"";
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands; each writes to `out`, which is flushed only on success.
  ////////////////////////////////////////////////////////////////////////

  int cmd_canon(RunConfig const& cfg, std::ostream& out) {
    if (cfg.words.size() != 1) {
      throw ValidationError("canon expects exactly one word");
    }
    auto const w     = parse_word(cfg.words[0], cfg.rank);
    auto const trace = reduction_trace(w);
    switch (cfg.format) {
      case Format::json: {
        json j{{"rank", cfg.rank},
               {"input", to_string(w)},
               {"canonical", to_string(trace.result())}};
        if (cfg.trace) {
          json steps = json::array();
          for (auto const& [r, v] : trace.steps) {
            steps.push_back({{"kind", std::string(to_string(r.kind))},
                             {"letter", r.letter},
                             {"keep", r.kept_position},
                             {"remove", r.removed_position},
                             {"word", to_string(v)}});
          }
          j["trace"] = std::move(steps);
        }
        out << j.dump(2) << '\n';
        break;
      }
      case Format::csv:
        throw ValidationError("canon does not support csv output");
      case Format::text:
        if (cfg.trace) {
          out << format_trace(trace);
        } else {
          out << to_string(trace.result()) << '\n';
        }
        break;
    }
    return exit_ok;
  }

  int cmd_mul(RunConfig const& cfg, std::ostream& out) {
    if (cfg.words.empty()) {
      throw ValidationError("mul expects at least one word");
    }
    auto  product = identity(cfg.rank);
    json  factors = json::array();
    for (auto const& text : cfg.words) {
      auto const w = parse_word(text, cfg.rank);
      factors.push_back(to_string(w));
      product = product * Element(w);
    }
    switch (cfg.format) {
      case Format::json:
        out << json{{"rank", cfg.rank},
                    {"factors", factors},
                    {"product", to_string(product)}}
                   .dump(2)
            << '\n';
        break;
      case Format::csv:
        throw ValidationError("mul does not support csv output");
      case Format::text:
        out << to_string(product) << '\n';
        break;
    }
    return exit_ok;
  }

  int cmd_enum(RunConfig const& cfg, std::ostream& out) {
    check_rank_policy(cfg.rank, cfg.allow_large);
    auto const res = load_or_enumerate(cfg.rank, cache_dir(cfg), cfg.limit);
    switch (cfg.format) {
      case Format::json:
        out << json{{"rank", cfg.rank},
                    {"count", res.cardinality()},
                    {"elements", words_json(res.elements())}}
                   .dump(2)
            << '\n';
        break;
      case Format::csv:
        out << "index,word,length,content\n";
        for (std::size_t i = 0; i < res.cardinality(); ++i) {
          auto const& x = res.elements()[i];
          out << i << ',' << csv_quote(to_string(x)) << ',' << x.word().size()
              << ',' << csv_quote(to_string(content(x))) << '\n';
        }
        break;
      case Format::text:
        out << "count: " << res.cardinality() << '\n';
        for (auto const& x : res.elements()) {
          out << to_string(x, true) << '\n';
        }
        break;
    }
    return exit_ok;
  }

  int cmd_solve(RunConfig const& cfg, std::ostream& out) {
    check_rank_policy(cfg.rank, cfg.allow_large);
    auto const y   = Element(parse_word(cfg.y, cfg.rank));
    auto const res = load_or_enumerate(cfg.rank, cache_dir(cfg), cfg.limit);
    auto const sol = solve_right_zero(res, y);
    switch (cfg.format) {
      case Format::json: {
        json j{{"rank", cfg.rank},
               {"y", to_string(y)},
               {"count", sol.solutions.size()},
               {"solutions", words_json(sol.solutions)},
               {"decomposition", nullptr}};
        if (sol.decomposition) {
          j["decomposition"] = {{"special", to_string(sol.decomposition->special)},
                                {"t", words_json(sol.decomposition->t_part)}};
        }
        out << j.dump(2) << '\n';
        break;
      }
      case Format::csv:
        out << "word,part\n";
        for (auto const& x : sol.solutions) {
          std::string part;
          if (sol.decomposition) {
            part = x == sol.decomposition->special ? "special" : "t";
          }
          out << csv_quote(to_string(x)) << ',' << part << '\n';
        }
        break;
      case Format::text:
        out << "solutions of x * " << to_string(y, true)
            << " = f: " << sol.solutions.size() << '\n';
        for (auto const& x : sol.solutions) {
          out << to_string(x, true) << '\n';
        }
        if (sol.decomposition) {
          out << "special: " << to_string(sol.decomposition->special, true) << '\n';
          out << "|T|: " << sol.decomposition->t_part.size() << '\n';
        }
        break;
    }
    return exit_ok;
  }

  int cmd_stats(RunConfig const& cfg, std::ostream& out) {
    check_rank_policy(cfg.rank, cfg.allow_large);
    auto const res  = load_or_enumerate(cfg.rank, cache_dir(cfg), cfg.limit);
    auto const rank = cfg.rank;
    auto const k1   = filter_by_content(res, LetterSet(rank, {1}), LetterSet::full(rank));
    std::size_t idempotents = 0;
    std::map<std::size_t, std::size_t> histogram;
    for (std::size_t i = 0; i <= rank; ++i) {
      histogram[i] = 0;
    }
    for (auto const& x : res.elements()) {
      idempotents += (x * x == x);
      ++histogram[m_value(x)];
    }
    switch (cfg.format) {
      case Format::json: {
        json h = json::object();
        for (auto const& [m, c] : histogram) {
          h[std::to_string(m)] = c;
        }
        out << json{{"rank", rank},
                    {"cardinality", res.cardinality()},
                    {"k1_cardinality", k1.size()},
                    {"idempotents", idempotents},
                    {"m_histogram", h}}
                   .dump(2)
            << '\n';
        break;
      }
      case Format::csv:
        out << "m,count\n";
        for (auto const& [m, c] : histogram) {
          out << m << ',' << c << '\n';
        }
        break;
      case Format::text:
        out << "rank: " << rank << '\n'
            << "|K_n|: " << res.cardinality() << '\n'
            << "|K_n^1|: " << k1.size() << '\n'
            << "idempotents: " << idempotents << '\n'
            << "m histogram:\n";
        for (auto const& [m, c] : histogram) {
          out << "  " << m << ": " << c << '\n';
        }
        break;
    }
    return exit_ok;
  }

  json report_json(VerifyReport const& report) {
    json suites = json::array();
    for (auto const& s : report.suites) {
      json facts = json::object();
      for (auto const& [k, v] : s.facts) {
        facts[k] = v;
      }
      suites.push_back({{"name", s.name},
                        {"status", std::string(to_string(s.status))},
                        {"checked", s.checked},
                        {"counterexamples", s.counterexamples},
                        {"facts", facts},
                        {"note", s.note}});
    }
    json j{{"rank", report.rank},
           {"seed", report.seed},
           {"passed", report.passed()},
           {"aborted", report.aborted}};
    if (report.aborted) {
      j["abort_reason"] = report.abort_reason;
    }
    j["suites"] = std::move(suites);
    return j;
  }

  void print_report(VerifyReport const& report, Format format, std::ostream& out) {
    switch (format) {
      case Format::json:
        out << report_json(report).dump(2) << '\n';
        return;
      case Format::csv:
        out << "suite,status,checked,counterexamples\n";
        for (auto const& s : report.suites) {
          out << s.name << ',' << to_string(s.status) << ',' << s.checked << ','
              << s.counterexamples.size() << '\n';
        }
        return;
      case Format::text:
        for (auto const& s : report.suites) {
          out << '[' << to_string(s.status) << "] " << s.name << " (checked "
              << s.checked << ')';
          if (!s.note.empty()) {
            out << " - " << s.note;
          }
          out << '\n';
          for (auto const& [k, v] : s.facts) {
            out << "    " << k << " = " << v << '\n';
          }
          for (auto const& c : s.counterexamples) {
            out << "    counterexample: " << c << '\n';
          }
        }
        if (report.aborted) {
          out << "ABORTED: " << report.abort_reason << '\n';
        }
        out << (report.passed() ? "verification passed" : "verification FAILED")
            << " at rank " << report.rank << '\n';
        return;
    }
  }

  // Prints the report even on failure; the exit code carries the verdict.
  int cmd_verify(RunConfig const& cfg, std::ostream& out) {
    VerifyReport report;
    report.rank = cfg.rank;
    report.seed = cfg.seed;
    try {
      check_rank_policy(cfg.rank, cfg.allow_large);
    } catch (ResourceError const& e) {
      report.aborted      = true;
      report.abort_reason = e.what();
      print_report(report, cfg.format, out);
      std::cerr << "kiselman: " << e.what() << '\n';
      return exit_resource;
    }
    VerifyOptions opts;
    opts.rank   = cfg.rank;
    opts.seed   = cfg.seed;
    opts.limit  = cfg.limit;
    opts.suites = cfg.suites;
    report      = run_verification(opts);
    print_report(report, cfg.format, out);
    if (report.aborted) {
      std::cerr << "kiselman: " << report.abort_reason << '\n';
      return exit_resource;
    }
    return report.passed() ? exit_ok : exit_invariant;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kiselman's semigroup K_n: canonical forms, enumeration, "
               "zero equations and verification"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::map<std::string, Format> const formats{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.rank, "Rank n of K_n")->required()->check(CLI::Range(1, 32));
    sub->add_option("--format", cfg.format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };
  auto add_enum_options = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", cfg.cache_dir,
                    "Cache directory (default: $KISELMAN_CACHE_DIR)");
    sub->add_option("--limit", cfg.limit, "Maximum number of elements")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--allow-large", cfg.allow_large, "Allow ranks above 6");
  };

  auto* canon = app.add_subcommand("canon", "Canonical form of a word");
  add_common(canon);
  canon->add_option("word", cfg.words, "Word, e.g. \"1 2 1\"")->required();
  canon->add_flag("--trace", cfg.trace, "Print the reduction steps");

  auto* mul = app.add_subcommand("mul", "Product of elements given as words");
  add_common(mul);
  mul->add_option("words", cfg.words, "Factors")->required();

  auto* enumerate = app.add_subcommand("enum", "List all elements of K_n");
  add_common(enumerate);
  add_enum_options(enumerate);

  auto* solve = app.add_subcommand("solve", "Solve x y = f for x");
  add_common(solve);
  add_enum_options(solve);
  solve->add_option("--y", cfg.y, "Right factor y as a word")->required();

  auto* stats = app.add_subcommand("stats", "Summary statistics of K_n");
  add_common(stats);
  add_enum_options(stats);

  auto* verify = app.add_subcommand("verify", "Run the verification suites");
  add_common(verify);
  verify->add_option("--limit", cfg.limit, "Maximum number of elements")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--allow-large", cfg.allow_large, "Allow ranks above 6");
  verify->add_option("--seed", cfg.seed, "Seed for randomized suites");
  verify->add_option("--suite", cfg.suites, "Suite name(s) or \"all\"")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  std::ostringstream out;
  int                code = exit_ok;
  try {
    if (*canon) {
      code = cmd_canon(cfg, out);
    } else if (*mul) {
      code = cmd_mul(cfg, out);
    } else if (*enumerate) {
      code = cmd_enum(cfg, out);
    } else if (*solve) {
      code = cmd_solve(cfg, out);
    } else if (*stats) {
      code = cmd_stats(cfg, out);
    } else if (*verify) {
      code = cmd_verify(cfg, out);
    }
  } catch (ValidationError const& e) {
    std::cerr << "kiselman: " << e.what() << '\n';
    return exit_usage;
  } catch (DomainError const& e) {
    std::cerr << "kiselman: " << e.what() << '\n';
    return exit_usage;
  } catch (ResourceError const& e) {
    std::cerr << "kiselman: " << e.what() << '\n';
    return exit_resource;
  } catch (InvariantError const& e) {
    std::cerr << "kiselman: invariant breach: " << e.what() << '\n';
    return exit_invariant;
  } catch (std::filesystem::filesystem_error const& e) {
    std::cerr << "kiselman: " << e.what() << '\n';
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "kiselman: " << e.what() << '\n';
    return exit_invariant;
  }
  std::cout << out.str();
  return code;
}
