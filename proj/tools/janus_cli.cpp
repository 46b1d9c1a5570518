// janus: command-line front end for the pattern matcher.
//
// Exit status: 0 success / match, 1 no match or divergence, 2 usage or parse
// error, 3 configuration budget exceeded.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "janus/compiler.hpp"
#include "janus/diff.hpp"
#include "janus/engine.hpp"
#include "janus/oracle.hpp"
#include "janus/report.hpp"

namespace {

using nlohmann::json;

constexpr int kExitMatch = 0;
constexpr int kExitNoMatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Common {
  bool json_output = false;
  std::string alphabet;
  std::uint64_t seed = 1;
  std::size_t max_configs = 100'000'000;
};

janus::Word make_word(const std::string& letters, const std::string& alphabet) {
  return alphabet.empty() ? janus::Word(letters) : janus::Word(letters, alphabet);
}

int run_match(const std::string& pattern_text, const std::string& word_text, const Common& opts) {
  const janus::Pattern p = janus::parse_pattern(pattern_text);
  const janus::Word w = make_word(word_text, opts.alphabet);
  janus::MatchOptions match_options;
  match_options.max_configs = opts.max_configs;

  const auto start = std::chrono::steady_clock::now();
  const janus::MatchReport report = janus::match(p, w.letters(), match_options);
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (opts.json_output) {
    json out;
    out["match"] = report.matched;
    out["visited"] = report.visited;
    out["k"] = report.counters;
    out["vd"] = janus::variable_distance(p);
    out["elapsed_ms"] = elapsed_ms;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << (report.matched ? "MATCH" : "NO MATCH") << '\n';
  }
  return report.matched ? kExitMatch : kExitNoMatch;
}

int run_analyze(const std::string& pattern_text, const Common& opts) {
  const janus::AnalysisReport r = janus::analyze(janus::parse_pattern(pattern_text));
  if (opts.json_output) {
    std::cout << janus::to_json(r).dump() << '\n';
    return kExitMatch;
  }
  std::cout << "pattern              " << r.pattern << '\n'
            << "n                    " << r.n << '\n'
            << "m                    " << r.m << '\n'
            << "vd                   " << r.vd << '\n'
            << "trivially universal  " << (r.trivially_universal ? "yes" : "no") << '\n';
  if (r.trivially_universal) return kExitMatch;
  std::cout << "cn                   " << *r.cn << '\n'
            << "pi                   " << *r.pi << '\n'
            << "matching order       " << janus::to_json(*r.matching_order).dump() << '\n'
            << "counter assignment   " << janus::to_json(*r.assignment).dump() << '\n'
            << "operating mode       " << janus::format_mode(*r.mode) << '\n';
  return kExitMatch;
}

int run_oracle_diff(const janus::DiffBounds& bounds, bool serial, const Common& opts) {
  const janus::DiffSummary summary = serial ? janus::oracle_diff_serial(bounds) : janus::oracle_diff(bounds);
  if (opts.json_output) {
    json out;
    out["ok"] = summary.ok();
    out["cases"] = summary.cases;
    out["divergences"] = summary.divergences;
    out["head_freezes"] = summary.head_freezes;
    out["max_live_counters"] = summary.max_live_counters;
    if (summary.first_divergence) {
      const auto& d = *summary.first_divergence;
      out["first_divergence"] = {{"pattern", d.pattern.to_string()}, {"word", d.word},
                                 {"engine", d.engine}, {"oracle", d.oracle}};
    }
    std::cout << out.dump() << '\n';
  } else if (summary.ok()) {
    std::cout << "OK " << summary.cases << " cases\n";
  } else {
    const auto& d = *summary.first_divergence;
    std::cout << "DIVERGENCE pattern=\"" << d.pattern.to_string() << "\" word=\"" << d.word
              << "\" engine=" << d.engine << " oracle=" << d.oracle << " (" << summary.divergences << " of "
              << summary.cases << " cases)\n";
  }
  return summary.ok() ? kExitMatch : kExitNoMatch;
}

int run_dump(const std::string& pattern_text) {
  const janus::Pattern p = janus::parse_pattern(pattern_text);
  if (janus::is_trivially_universal(p)) {
    std::cerr << "error: " << p.to_string()
              << " has a variable occurring exactly once; its language is every word and no automaton is built\n";
    return kExitUsage;
  }
  std::cout << janus::dump_automaton(janus::compile(p)).dump(2) << '\n';
  return kExitMatch;
}

int run_bench(const std::string& pattern_text, const std::vector<std::size_t>& lengths, std::size_t trials,
              const Common& opts) {
  const janus::Pattern p = janus::parse_pattern(pattern_text);
  const std::string alphabet = opts.alphabet.empty() ? "ab" : opts.alphabet;
  std::mt19937_64 rng(opts.seed);
  janus::MatchOptions match_options;
  match_options.max_configs = opts.max_configs;

  std::optional<janus::CompiledPattern> compiled;
  if (!janus::is_trivially_universal(p)) compiled = janus::compile(p);
  const auto run = [&](const std::string& w) {
    return compiled ? janus::match(*compiled, w, match_options) : janus::match(p, w, match_options);
  };

  json rows = json::array();
  std::vector<double> xs;
  std::vector<double> ys;
  for (const std::size_t len : lengths) {
    double visited = 0;
    double planted_visited = 0;
    double planted_len = 0;
    std::size_t accepted = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t t = 0; t < trials; ++t) {
      const janus::MatchReport r = run(janus::random_word(rng, len, alphabet));
      visited += static_cast<double>(r.visited);
      accepted += r.matched ? 1 : 0;
      const double mean = static_cast<double>(len) / static_cast<double>(p.size());
      const std::string member = janus::planted_member(rng, p, alphabet, mean);
      const janus::MatchReport planted = run(member);
      if (!planted.matched) throw std::logic_error("planted member rejected: " + member);
      planted_visited += static_cast<double>(planted.visited);
      planted_len += static_cast<double>(member.size());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const double denom = static_cast<double>(std::max<std::size_t>(trials, 1));
    xs.push_back(static_cast<double>(len));
    ys.push_back(visited / denom);
    rows.push_back({{"length", len},
                    {"trials", trials},
                    {"mean_visited", visited / denom},
                    {"accepted", accepted},
                    {"planted_mean_length", planted_len / denom},
                    {"planted_mean_visited", planted_visited / denom},
                    {"elapsed_ms", ms}});
  }
  const double slope = janus::loglog_slope(xs, ys);
  const std::size_t vd = janus::variable_distance(p);

  if (opts.json_output) {
    json out;
    out["pattern"] = p.to_string();
    out["vd"] = vd;
    out["rows"] = rows;
    out["slope"] = slope;
    out["bound"] = vd + 4;
    std::cout << out.dump() << '\n';
    return kExitMatch;
  }
  std::printf("pattern %s  vd=%zu  bound=|w|^%zu\n", p.to_string().c_str(), vd, vd + 4);
  std::printf("%8s %8s %14s %9s %14s %14s %12s\n", "length", "trials", "mean_visited", "accepted", "planted_len",
              "planted_vis", "elapsed_ms");
  for (const json& row : rows) {
    std::printf("%8zu %8zu %14.1f %9zu %14.1f %14.1f %12.2f\n", row["length"].get<std::size_t>(),
                row["trials"].get<std::size_t>(), row["mean_visited"].get<double>(),
                row["accepted"].get<std::size_t>(), row["planted_mean_length"].get<double>(),
                row["planted_mean_visited"].get<double>(), row["elapsed_ms"].get<double>());
  }
  std::printf("log-log slope of mean visited vs length: %.3f\n", slope);
  return kExitMatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomial-time matching for terminal-free patterns via Janus automata"};
  app.require_subcommand(1);

  Common opts;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", opts.json_output, "Emit JSON on stdout");
    sub->add_option("--max-configs", opts.max_configs, "Configuration budget for the graph search");
  };

  std::string pattern_text;
  std::string word_text;

  CLI::App* match = app.add_subcommand("match", "Decide whether WORD is in the language of PATTERN");
  match->add_option("pattern", pattern_text, "Pattern, e.g. \"x1 x2 x1\"")->required();
  match->add_option("word", word_text, "Input word (may be empty)")->required();
  match->add_option("--alphabet", opts.alphabet, "Alphabet (default: a-z plus the word's letters)");
  add_common(match);

  CLI::App* analyze = app.add_subcommand("analyze", "Report vd, cn, matching order and operating mode");
  analyze->add_option("pattern", pattern_text)->required();
  analyze->add_flag("--json", opts.json_output, "Emit JSON on stdout");

  janus::DiffBounds bounds;
  bool serial = false;
  CLI::App* diff = app.add_subcommand("oracle-diff", "Compare the automaton against the brute-force oracle");
  diff->add_option("max-pattern-len,--max-pattern-len", bounds.max_pattern_len);
  diff->add_option("max-vars,--max-vars", bounds.max_vars);
  diff->add_option("max-word-len,--max-word-len", bounds.max_word_len);
  diff->add_option("alphabet,--alphabet", bounds.alphabet);
  diff->add_flag("--repeated-only", bounds.repeated_only, "Skip patterns with a once-occurring variable");
  diff->add_flag("--serial", serial, "Use the serial reference instead of the OpenMP driver");
  add_common(diff);

  CLI::App* dump = app.add_subcommand("dump", "Print the compiled automaton as JSON");
  dump->add_option("pattern", pattern_text)->required();

  std::vector<std::size_t> lengths{4, 8, 12, 16, 20};
  std::size_t trials = 5;
  CLI::App* bench = app.add_subcommand("bench", "Measure visited configurations against word length");
  bench->add_option("pattern", pattern_text)->required();
  bench->add_option("--lengths", lengths, "Comma-separated word lengths")->delimiter(',');
  bench->add_option("--trials", trials, "Random words per length");
  bench->add_option("--seed", opts.seed, "Random seed");
  bench->add_option("--alphabet", opts.alphabet, "Alphabet for random words (default: ab)");
  add_common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (match->parsed()) return run_match(pattern_text, word_text, opts);
    if (analyze->parsed()) return run_analyze(pattern_text, opts);
    if (diff->parsed()) return run_oracle_diff(bounds, serial, opts);
    if (dump->parsed()) return run_dump(pattern_text);
    if (bench->parsed()) return run_bench(pattern_text, lengths, trials, opts);
  } catch (const janus::PatternError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const janus::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  }
  return kExitUsage;
}
