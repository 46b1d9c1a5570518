#include <gtest/gtest.h>

#include <random>

#include "janus/compiler.hpp"
#include "janus/diff.hpp"
#include "janus/engine.hpp"
#include "janus/oracle.hpp"
#include "support.hpp"

using namespace janus;
using janus::testing::beta;
using janus::testing::beta_prime;
using janus::testing::delta_beta;

TEST(Compile, CounterCount) {
  EXPECT_EQ(compile(beta()).automaton.counters(), 2u);
  EXPECT_EQ(compile(beta_prime()).automaton.counters(), 3u);
  EXPECT_EQ(compile(parse_pattern("x1 x1")).automaton.counters(), 1u);
  EXPECT_THROW(compile(parse_pattern("x1 x2 x1")), PatternError);
}

TEST(Compile, StatesAreQuadraticInPatternLength) {
  const CompiledPattern c = compile(beta());
  const std::size_t n = beta().size();
  EXPECT_LE(c.automaton.state_count(), n * n + 2);
  EXPECT_EQ(c.roles.size(), c.automaton.state_count());
  EXPECT_EQ(c.roles[c.automaton.initial()].role, StateRole::Initial);
  for (StateId q : c.automaton.accepting_states()) EXPECT_EQ(c.roles[q].role, StateRole::Final);
}

TEST(Compile, RejectsInvalidMode) {
  JanusOperatingMode m = delta_beta();
  m.blocks[2] = {{2, Head::Left}, {4, Head::Right}};
  EXPECT_THROW(compile_with_mode(beta(), m), PatternError);
}

TEST(Match, TrivialExamples) {
  EXPECT_TRUE(match_test(beta(), ""));
  EXPECT_TRUE(match_test(parse_pattern("x1 x1"), "abab"));
  EXPECT_FALSE(match_test(parse_pattern("x1 x1"), "abb"));
  EXPECT_TRUE(match_test(parse_pattern("x1 x1"), ""));
  const MatchReport r = match(parse_pattern("x1 x2 x1"), "abc");
  EXPECT_TRUE(r.matched);
  EXPECT_TRUE(r.short_circuited);
  EXPECT_EQ(r.visited, 0u);
}

TEST(Match, EmptyWordIsCheap) {
  for (const Pattern& p : {beta(), beta_prime(), parse_pattern("x1 x1")}) {
    const MatchReport r = match(p, "");
    EXPECT_TRUE(r.matched);
    EXPECT_LE(r.visited, 2 * p.size() + 4) << p.to_string();
  }
}

TEST(Match, AgreesWithOracleExhaustively) {
  const DiffSummary s = oracle_diff({8, 3, 7, "ab", true});
  EXPECT_GT(s.cases, 0u);
  EXPECT_EQ(s.divergences, 0u);
  if (s.first_divergence) ADD_FAILURE() << s.first_divergence->pattern.to_string() << " / " << s.first_divergence->word;
  EXPECT_EQ(s.head_freezes, 0u);
  EXPECT_EQ(s.head_order_violations, 0u);
  EXPECT_LE(s.max_live_counters, 1u);
}

TEST(Match, OrderDoesNotChangeTheAnswer) {
  const CompiledPattern c = compile(beta());
  for (const std::string& w : enumerate_words(7, "ab")) {
    MatchOptions bfs;
    bfs.order = SearchOrder::BreadthFirst;
    EXPECT_EQ(match(c, w).matched, match(c, w, bfs).matched) << w;
  }
}

TEST(Match, ResourceLimit) {
  MatchOptions tight;
  tight.max_configs = 5;
  EXPECT_THROW(match(beta(), "abababab", tight), ResourceLimitError);
}

TEST(VisitedBound, MonotoneInWordLength) {
  std::size_t prev = 0;
  for (std::size_t n = 1; n <= 14; ++n) {
    const std::size_t v = visited_bound(beta(), std::string(n - 1, 'a') + "b");
    EXPECT_GE(v, prev) << n;
    prev = v;
  }
}

TEST(Witness, RecoversCharacteristicFactorization) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 80; ++i) {
    const Pattern p = random_pattern(rng, 8, 3);
    const std::string w = planted_member(rng, p, "ab", 1.0);
    const CompiledPattern c = compile(p);
    SearchOptions opts;
    opts.record_witness = true;
    const SearchResult r = search(c.automaton, w, opts);
    ASSERT_TRUE(r.accepted) << p.to_string() << " / " << w;
    const auto f = factorization_from_run(c, r.witness);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(f->consistent_with(p));
    EXPECT_EQ(f->total(), w.size());
    EXPECT_TRUE(check_characteristic(p, w, *f, c.mode.source)) << p.to_string() << " / " << w;
  }
}

TEST(CompileWithMode, DeltaBeta) {
  const CompiledPattern c = compile_with_mode(beta(), delta_beta());
  EXPECT_EQ(c.automaton.counters(), 3u);
  for (const std::string& w : enumerate_words(8, "ab")) {
    const MatchReport r = match(c, w);
    EXPECT_EQ(r.matched, oracle_membership(beta(), w)) << w;
    EXPECT_EQ(r.head_freezes, 0u) << w;
  }
}

TEST(CompileWithMode, RandomValidModesAgreeWithOracle) {
  std::mt19937_64 rng(5);
  const auto words = enumerate_words(6, "ab");
  for (int i = 0; i < 60; ++i) {
    const Pattern p = random_pattern(rng, 8, 3);
    const JanusOperatingMode m = janus::testing::random_valid_mode(rng, p);
    const CompiledPattern c = compile_with_mode(p, m);
    EXPECT_EQ(c.automaton.counters(), counter_number(p, m) + 1);
    for (const std::string& w : words) {
      const MatchReport r = match(c, w);
      ASSERT_EQ(r.matched, oracle_membership(p, w)) << p.to_string() << " / " << w;
      ASSERT_EQ(r.head_freezes, 0u) << p.to_string() << " / " << w;
    }
  }
}

TEST(Batch, ParallelMatchesSerial) {
  const CompiledPattern c = compile(beta_prime());
  std::mt19937_64 rng(9);
  std::vector<std::string> words;
  for (int i = 0; i < 64; ++i)
    words.push_back(i % 2 ? planted_member(rng, beta_prime(), "ab", 0.5) : random_word(rng, i % 9, "ab"));
  const auto par = match_batch(c, words);
  const auto ser = match_batch_serial(c, words);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    EXPECT_EQ(par[i].matched, ser[i].matched);
    EXPECT_EQ(par[i].visited, ser[i].visited);
    EXPECT_EQ(par[i].matched, oracle_membership(beta_prime(), words[i]));
  }
}
