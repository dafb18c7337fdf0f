#include "oracles.hpp"

#include <kostant/permutation.hpp>

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace kostant;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(MakePermutation, AcceptsBijections) {
  const auto w = make_permutation({2, 1, 4, 3});
  EXPECT_EQ(w.degree(), 4);
  EXPECT_EQ(w(1), 2);
  EXPECT_EQ(w(4), 3);
  const auto id = make_permutation({1});
  EXPECT_EQ(id.degree(), 1);
  EXPECT_TRUE(id.is_identity());
}

TEST(MakePermutation, RejectsNonBijections) {
  EXPECT_EQ(code_of([] { make_permutation({2, 2, 3}); }), ErrorCode::NotABijection);
  EXPECT_EQ(code_of([] { make_permutation({0, 1}); }), ErrorCode::NotABijection);
  EXPECT_EQ(code_of([] { make_permutation({1, 5}); }), ErrorCode::NotABijection);
  EXPECT_EQ(code_of([] { make_permutation(std::vector<int>{}); }), ErrorCode::EmptyInput);
}

TEST(ParsePermutation, RoundTripsText) {
  EXPECT_EQ(to_string(parse_permutation("2,1,4,3")), "2,1,4,3");
  EXPECT_EQ(to_string(parse_permutation(" 3, 1 ,2")), "3,1,2");
  EXPECT_EQ(code_of([] { parse_permutation("1,,2"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { parse_permutation("1,x"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { parse_permutation(""); }), ErrorCode::EmptyInput);
}

TEST(Permutation, InverseAndCompose) {
  const auto w = make_permutation({2, 3, 1});
  EXPECT_TRUE(w.compose(w.inverse()).is_identity());
  EXPECT_EQ(w.compose(w), make_permutation({3, 1, 2}));
}

TEST(AsInvolution, PairsAndFixedPoints) {
  const auto w = as_involution(make_permutation({2, 1, 4, 3}));
  EXPECT_EQ(w.pairs(), (std::vector<std::pair<int, int>>{{1, 2}, {3, 4}}));
  EXPECT_TRUE(w.fixed_points().empty());
  EXPECT_EQ(w.cycles(), "(1 2)(3 4)");

  const auto id = as_involution(Permutation::identity(5));
  EXPECT_EQ(id.fixed_points(), (std::vector<int>{1, 2, 3, 4, 5}));
  EXPECT_TRUE(id.pairs().empty());
  EXPECT_EQ(id.cycles(), "()");

  EXPECT_EQ(code_of([] { as_involution(make_permutation({2, 3, 1})); }), ErrorCode::NotAnInvolution);
}

TEST(EnumeratePermutations, CountsAndOrder) {
  EXPECT_EQ(all_permutations(3).size(), 6U);
  const auto one = all_permutations(1);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(to_string(one[0]), "1");
  std::size_t count = 0;
  std::optional<Permutation> prev;
  bool increasing = true;
  for_each_permutation(8, [&](const Permutation& w) {
    ++count;
    if (prev && !(*prev < w)) increasing = false;
    prev = w;
  });
  EXPECT_EQ(count, 40320U);
  EXPECT_TRUE(increasing);
}

TEST(EnumeratePermutations, PrefixesPartitionSn) {
  std::set<Permutation> seen;
  std::size_t visits = 0;
  for (int a = 1; a <= 5; ++a) {
    for (int b = 1; b <= 5; ++b) {
      if (a == b) continue;
      const std::array<int, 2> prefix{a, b};
      for_each_permutation_with_prefix(5, prefix, [&](const Permutation& w) {
        ++visits;
        seen.insert(w);
      });
    }
  }
  EXPECT_EQ(visits, 120U);
  EXPECT_EQ(seen.size(), 120U);
}

TEST(EnumeratePermutations, CapIsEnforced) {
  EXPECT_EQ(code_of([] { for_each_permutation(13, [](const Permutation&) {}); }), ErrorCode::DegreeTooLarge);
  Limits small;
  small.max_perm_degree = 4;
  EXPECT_EQ(code_of([&] { for_each_permutation(5, [](const Permutation&) {}, small); }), ErrorCode::DegreeTooLarge);
}

TEST(EnumerateInvolutions, MatchesFilteredSymmetricGroup) {
  EXPECT_EQ(all_involutions(1).size(), 1U);
  EXPECT_EQ(all_involutions(4).size(), 10U);
  EXPECT_EQ(all_involutions(8).size(), 764U);
  for (int n = 1; n <= 8; ++n) {
    const auto filtered = oracle::involutions_by_filter(n);
    std::vector<oracle::Values> generated;
    for_each_involution(n, [&](const Permutation& w) {
      EXPECT_NO_THROW(as_involution(w));
      generated.emplace_back(w.values().begin(), w.values().end());
    });
    // Both lists are lexicographic, so they agree element by element.
    EXPECT_EQ(generated, filtered) << "n=" << n;
  }
  EXPECT_EQ(code_of([] { for_each_involution(17, [](const Permutation&) {}); }), ErrorCode::DegreeTooLarge);
}

TEST(EnumerateInvolutions, LengthMatchesInvolutionNumber) {
  for (int n = 1; n <= 10; ++n) {
    std::uint64_t c = 0;
    for_each_involution(n, [&](const Permutation&) { ++c; });
    EXPECT_EQ(BigInt(c), involution_number(n)) << "n=" << n;
  }
}

TEST(UnrankInvolution, MatchesLexicographicEnumeration) {
  for (int n = 1; n <= 8; ++n) {
    BigInt rank = 0;
    for_each_involution(n, [&](const Permutation& w) {
      EXPECT_EQ(unrank_involution_permutation(n, rank), w) << "n=" << n << " rank=" << rank;
      ++rank;
    });
  }
  EXPECT_EQ(code_of([] { unrank_involution_permutation(4, 10); }), ErrorCode::InvalidArgument);
}

TEST(SamplePermutation, DeterministicPerSeed) {
  auto a = make_stream(7);
  auto b = make_stream(7);
  EXPECT_EQ(sample_permutation(3, a), sample_permutation(3, b));
  auto c = make_stream(1);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(to_string(sample_permutation(1, c)), "1");
}

TEST(SamplePermutation, UniformOnS4) {
  auto rng = make_stream(20240601);
  std::map<Permutation, int> freq;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) ++freq[sample_permutation(4, rng)];
  ASSERT_EQ(freq.size(), 24U);
  const double expected = kDraws / 24.0;
  const double sigma = std::sqrt(kDraws * (1.0 / 24) * (23.0 / 24));
  double chi2 = 0;
  for (const auto& [w, f] : freq) {
    EXPECT_LT(std::abs(f - expected), 3 * sigma) << to_string(w);
    chi2 += (f - expected) * (f - expected) / expected;
  }
  EXPECT_LT(chi2, 49.73);  // chi-square 99.9% quantile, 23 degrees of freedom
}

TEST(SampleInvolution, UniformOnInvolutionsOfS4) {
  auto rng = make_stream(99);
  std::map<Permutation, int> freq;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) ++freq[sample_involution(4, rng).permutation()];
  ASSERT_EQ(freq.size(), 10U);
  const double expected = kDraws / 10.0;
  const double sigma = std::sqrt(kDraws * 0.1 * 0.9);
  double chi2 = 0;
  for (const auto& [w, f] : freq) {
    EXPECT_LT(std::abs(f - expected), 3 * sigma) << to_string(w);
    chi2 += (f - expected) * (f - expected) / expected;
  }
  EXPECT_LT(chi2, 27.88);  // chi-square 99.9% quantile, 9 degrees of freedom
}

TEST(SampleInvolution, SmallDegrees) {
  auto rng = make_stream(3);
  int swapped = 0;
  for (int i = 0; i < 20000; ++i) swapped += sample_involution(2, rng).permutation() == make_permutation({2, 1});
  EXPECT_NEAR(swapped / 20000.0, 0.5, 0.02);
  EXPECT_TRUE(sample_involution(1, rng).permutation().is_identity());
  auto a = make_stream(5, 2);
  auto b = make_stream(5, 2);
  EXPECT_EQ(sample_involution(30, a), sample_involution(30, b));
}

TEST(InQ, Examples) {
  const auto id = as_involution(Permutation::identity(12));
  EXPECT_TRUE(in_q(id, 2));
  // pair {1,5}
  EXPECT_FALSE(in_q(as_involution(make_permutation({5, 2, 3, 4, 1, 6, 7, 8, 9, 10, 11, 12})), 2));
  // pairs {1,9} and {5,10}
  EXPECT_TRUE(in_q(as_involution(make_permutation({9, 2, 3, 4, 10, 6, 7, 8, 1, 5, 11, 12})), 2));
  EXPECT_EQ(code_of([] { in_q(as_involution(Permutation::identity(7)), 2); }), ErrorCode::DegreeTooSmall);
}

TEST(InQ, AgreesWithLiteralDefinitionAndTailProperty) {
  for (const int n : {8, 9, 10, 12}) {
    for_each_involution(n, [&](const Permutation& w) {
      const oracle::Values v(w.values().begin(), w.values().end());
      const bool member = in_q(as_involution(w), 2);
      ASSERT_EQ(member, oracle::in_q(v, 2)) << to_string(w);
      if (!member) return;
      // Partners leaving their block land beyond 4k.
      for (int a = 1; a <= 8; ++a) {
        if (Block::of(w(a)) != Block::of(a)) {
          EXPECT_GT(w(a), 8) << to_string(w);
        }
      }
    });
  }
}

TEST(Block, Positions) {
  EXPECT_EQ(Block{1}.positions(), (std::array<int, 4>{1, 2, 3, 4}));
  EXPECT_EQ(Block{3}.positions(), (std::array<int, 4>{9, 10, 11, 12}));
  EXPECT_EQ(Block::of(4), 1);
  EXPECT_EQ(Block::of(5), 2);
}
