#include <gtest/gtest.h>

#include <random>

#include "janus/diff.hpp"
#include "janus/oracle.hpp"
#include "janus/pattern.hpp"
#include "support.hpp"

using namespace janus;
using janus::testing::beta;
using janus::testing::beta_prime;
using janus::testing::conclusion_example;

TEST(Parse, AcceptsSpacesAndDots) {
  EXPECT_EQ(parse_pattern("x1 x2 x1").to_string(), "x1 x2 x1");
  EXPECT_EQ(parse_pattern("x1.x2.x1"), parse_pattern("  x1   x2 x1 "));
  EXPECT_EQ(parse_pattern("x12 x3").at(1).id, 12u);
}

TEST(Parse, RejectsMalformedInput) {
  EXPECT_THROW(parse_pattern(""), PatternError);
  EXPECT_THROW(parse_pattern("   "), PatternError);
  EXPECT_THROW(parse_pattern("x0"), PatternError);
  EXPECT_THROW(parse_pattern("x1 y2"), PatternError);
  EXPECT_THROW(parse_pattern("x"), PatternError);
  EXPECT_THROW(parse_pattern("x1a"), PatternError);
  try {
    parse_pattern("x1 x2 z");
    FAIL();
  } catch (const PatternError& e) {
    EXPECT_NE(std::string(e.what()).find("'z'"), std::string::npos);
  }
}

TEST(Pattern, Accessors) {
  const Pattern p = beta();
  EXPECT_EQ(p.size(), 7u);
  EXPECT_EQ(p.var_count(), 3u);
  EXPECT_EQ(p.occurrences(Variable{2}), 3u);
  EXPECT_EQ(p.occurrences(Variable{9}), 0u);
  EXPECT_EQ(p.dense(), (std::vector<std::size_t>{0, 1, 0, 1, 2, 1, 2}));
  EXPECT_THROW(Pattern({}), PatternError);
}

TEST(VariablePositions, Examples) {
  EXPECT_EQ(variable_positions(beta(), Variable{2}), (std::vector<std::size_t>{2, 4, 6}));
  EXPECT_TRUE(variable_positions(beta(), Variable{7}).empty());
}

TEST(VariableDistance, WorkedExamples) {
  EXPECT_EQ(variable_distance(beta()), 1u);
  EXPECT_EQ(variable_distance(beta_prime()), 2u);
  EXPECT_EQ(variable_distance(conclusion_example()), 4u);
}

TEST(VariableDistance, SmallCases) {
  EXPECT_EQ(variable_distance(parse_pattern("x1 x1")), 0u);
  EXPECT_EQ(variable_distance(parse_pattern("x1 x1 x2 x2 x3 x3")), 0u);
  EXPECT_EQ(variable_distance(parse_pattern("x1 x2 x3 x1")), 2u);
  EXPECT_EQ(variable_distance(parse_pattern("x1")), 0u);
  EXPECT_EQ(variable_distance(parse_pattern("x1 x2 x1 x2")), 1u);
}

// Direct definition: max over consecutive occurrences of the number of
// distinct other variables strictly between them.
static std::size_t vd_by_definition(const Pattern& p) {
  std::size_t best = 0;
  for (Variable v : p.variables()) {
    const auto pos = variable_positions(p, v);
    for (std::size_t i = 1; i < pos.size(); ++i) {
      std::set<Variable> between;
      for (std::size_t q = pos[i - 1] + 1; q < pos[i]; ++q) between.insert(p.at(q));
      best = std::max(best, between.size());
    }
  }
  return best;
}

TEST(VariableDistance, MatchesDefinitionOnEnumeratedPatterns) {
  for (const Pattern& p : enumerate_patterns(7, 4)) EXPECT_EQ(variable_distance(p), vd_by_definition(p)) << p.to_string();
}

TEST(TriviallyUniversal, Examples) {
  EXPECT_TRUE(is_trivially_universal(parse_pattern("x1 x2 x1")));
  EXPECT_TRUE(is_trivially_universal(parse_pattern("x1")));
  EXPECT_FALSE(is_trivially_universal(beta()));
}

TEST(Word, Alphabet) {
  EXPECT_EQ(Word("abz").alphabet().size(), 26u);
  EXPECT_EQ(Word("A1").alphabet().size(), 28u);
  EXPECT_EQ(Word("ab", "ba").alphabet(), "ab");
  EXPECT_THROW(Word("abc", "ab"), PatternError);
  EXPECT_THROW(Word("a$b"), PatternError);
  EXPECT_THROW(Word("a\nb"), PatternError);
  EXPECT_NO_THROW(Word(""));
}

TEST(Factorization, Helpers) {
  const Factorization f{{2, 0, 2}};
  EXPECT_EQ(f.total(), 4u);
  EXPECT_EQ(f.offsets(), (std::vector<std::size_t>{0, 2, 2}));
  EXPECT_TRUE(f.consistent_with(parse_pattern("x1 x2 x1")));
  EXPECT_FALSE((Factorization{{2, 0, 1}}).consistent_with(parse_pattern("x1 x2 x1")));
}

TEST(Oracle, TrivialExamples) {
  EXPECT_TRUE(oracle_membership(parse_pattern("x1 x1"), "abab"));
  EXPECT_FALSE(oracle_membership(parse_pattern("x1 x1"), "abb"));
  EXPECT_TRUE(oracle_membership(parse_pattern("x1 x1"), ""));
  EXPECT_TRUE(oracle_membership(beta(), ""));
  EXPECT_TRUE(oracle_membership(beta(), "aabaabbabb"));  // x1=a x2=ab x3=b
  EXPECT_FALSE(oracle_membership(beta(), "ab"));
  EXPECT_TRUE(oracle_membership(parse_pattern("x1 x2"), "ab"));
}

TEST(Oracle, AgreesWithSubstitutionImages) {
  const std::string sigma = "ab";
  constexpr std::size_t kMaxLen = 7;
  const auto words = enumerate_words(kMaxLen, sigma);
  for (const Pattern& p : enumerate_patterns(5, 3)) {
    const auto images = janus::testing::substitution_images(p, sigma, kMaxLen);
    for (const std::string& w : words) EXPECT_EQ(oracle_membership(p, w), images.contains(w)) << p.to_string() << " / " << w;
  }
}

TEST(Oracle, PlantedMembersAreAccepted) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Pattern p = random_pattern(rng, 8, 3);
    const std::string w = planted_member(rng, p, "abc");
    EXPECT_TRUE(oracle_membership(p, w)) << p.to_string() << " / " << w;
  }
}
