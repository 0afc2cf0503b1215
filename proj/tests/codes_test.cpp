#include "tightmaps/codes.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "tightmaps/polys.hpp"

using namespace tightmaps;

namespace {

HalfInt half(long twice) { return HalfInt::from_twice(Int(twice)); }

DressedWord word(const std::string& s) {
  DressedWord w;
  for (char c : s) w.letters.push_back(static_cast<Letter>(c));
  return w;
}

WordParams params_mk(long m_twice, long k) {
  WordParams p;
  p.m = half(m_twice);
  p.k = k;
  return p;
}

WordParams params_petal(long m_twice, long r, long s, int eps) {
  WordParams p;
  p.m = half(m_twice);
  p.r = r;
  p.s = s;
  p.eps = eps;
  return p;
}

long to_long(const Rat& x) { return static_cast<long>(rat_to_int(x)); }

}  // namespace

TEST(Words, SpecialSmallCases) {
  auto w1 = enumerate_words(WordForm::UDFORM1, params_mk(4, 0));
  ASSERT_EQ(1u, w1.size());
  EXPECT_EQ(word("ODUU"), w1[0]);

  auto w2 = enumerate_words(WordForm::UDFORM1, params_mk(4, 1));
  EXPECT_EQ(3u, w2.size());

  auto w3 = enumerate_words(WordForm::UDFORM3, params_mk(3, 0));
  ASSERT_EQ(1u, w3.size());
  EXPECT_EQ(word("DU"), w3[0]);

  // Length 2m - 1 = 0: the empty word.
  auto w4 = enumerate_words(WordForm::UDFORM3, params_mk(1, 0));
  ASSERT_EQ(1u, w4.size());
  EXPECT_TRUE(w4[0].letters.empty());

  // No words when the letter counts cannot be met.
  EXPECT_TRUE(enumerate_words(WordForm::UDFORM1, params_mk(4, 2)).empty());
  EXPECT_TRUE(enumerate_words(WordForm::UDFORM1, params_mk(3, 0)).empty());
  EXPECT_TRUE(enumerate_words(WordForm::UDFORM2, params_mk(0, 0)).empty());
}

TEST(Words, CountsMatchPolynomials) {
  for (long m = 1; m <= 6; ++m) {
    for (long k = 0; k <= 4; ++k) {
      const auto p1 = enumerate_words(WordForm::UDFORM1, params_mk(2 * m, k));
      EXPECT_EQ(to_long(p_k(k, half(2 * m))), static_cast<long>(p1.size()))
          << "UDFORM1 m=" << m << " k=" << k;
      const auto p2 = enumerate_words(WordForm::UDFORM2, params_mk(2 * m, k));
      EXPECT_EQ(to_long(q_k(k, half(2 * m))), static_cast<long>(p2.size()))
          << "UDFORM2 m=" << m << " k=" << k;
    }
  }
  for (long twice = 1; twice <= 11; twice += 2) {
    for (long k = 0; k <= 4; ++k) {
      const auto p3 = enumerate_words(WordForm::UDFORM3, params_mk(twice, k));
      EXPECT_EQ(to_long(ptilde_k(k, half(twice))), static_cast<long>(p3.size()))
          << "UDFORM3 2m=" << twice << " k=" << k;
    }
  }
}

TEST(Words, PetalCountsMatchPi) {
  for (long twice = 1; twice <= 8; ++twice) {
    for (long r = 0; r <= 2; ++r) {
      for (long s = 0; s <= 2; ++s) {
        for (int eps : {-1, 0, 1}) {
          const auto ws = enumerate_words(WordForm::PETAL, params_petal(twice, r, s, eps));
          EXPECT_EQ(to_long(pi_rse(r, s, eps, half(twice))), static_cast<long>(ws.size()))
              << "PETAL 2m=" << twice << " r=" << r << " s=" << s << " eps=" << eps;
          for (const auto& w : ws) {
            for (std::size_t i = 0; i + 1 < w.letters.size(); ++i) {
              ASSERT_FALSE(w.letters[i] == Letter::U &&
                           w.letters[i + 1] == Letter::D_PLAIN)
                  << w.str();
            }
          }
        }
      }
    }
  }
}

TEST(Paths, SmallCases) {
  EXPECT_EQ(Int(1), count_marked_paths(2, 1, {}));
  EXPECT_EQ(Int(1), count_marked_paths(2, 1, {1}));
  EXPECT_EQ(Int(1), count_marked_paths(3, 0, {}));
  EXPECT_EQ(Int(1), count_marked_paths(1, 0, {}));
  EXPECT_EQ(Int(0), count_marked_paths(1, 1, {}));
  // d = 4, one marked up step: the path may dip below the axis.
  EXPECT_EQ(Int(4), count_marked_paths(4, 1, {1}));
}

TEST(Paths, MatchesClosedForm) {
  for (long twice = 1; twice <= 10; ++twice) {
    for (long r = 0; r <= 2; ++r) {
      for (long s = 0; s <= 2; ++s) {
        for (int eps : {-1, 0, 1}) {
          std::vector<int> marks;
          for (long i = 0; i < r; ++i) marks.push_back(1);
          for (long i = 0; i < s; ++i) marks.push_back(0);
          const Int got = count_marked_paths(twice, eps, marks);
          const bool on_support = (twice - (s + 1 + eps)) % 2 == 0;
          const Int want =
              on_support ? rat_to_int(p_ke(r + s, s + 1 + eps, half(twice))) : Int(0);
          EXPECT_EQ(want, got) << "2m=" << twice << " r=" << r << " s=" << s << " eps=" << eps;
        }
      }
    }
  }
}

TEST(Paths, MarkOrderInvariance) {
  const std::vector<std::vector<int>> orders = {
      {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  for (long twice = 3; twice <= 9; ++twice) {
    for (int eps : {0, 1}) {
      const Int base = count_marked_paths(twice, eps, orders[0]);
      for (const auto& marks : orders) {
        EXPECT_EQ(base, count_marked_paths(twice, eps, marks)) << "2m=" << twice;
      }
    }
  }
}

TEST(Paths, EnumerationMatchesCount) {
  for (long twice = 1; twice <= 7; ++twice) {
    for (long r = 0; r <= 2; ++r) {
      for (long s = 0; s <= 1; ++s) {
        for (int eps : {0, 1}) {
          std::vector<int> marks;
          for (long i = 0; i < r; ++i) marks.push_back(1);
          for (long i = 0; i < s; ++i) marks.push_back(0);
          const auto paths = enumerate_marked_paths(twice, eps, marks);
          EXPECT_EQ(count_marked_paths(twice, eps, marks),
                    Int(static_cast<long>(paths.size())));
          std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
          for (const auto& p : paths) {
            EXPECT_TRUE(is_valid_marked_path(p));
            EXPECT_EQ(marks.size(), p.marked.size());
            seen.insert({p.steps, p.marked});
          }
          EXPECT_EQ(paths.size(), seen.size());
        }
      }
    }
  }
}

namespace {

// Checks that enumerate_marked_trees and enumerate_words are in bijection
// under tree_to_word / word_to_tree.
void check_round_trip(WordForm form, const WordParams& p) {
  const auto words = enumerate_words(form, p);
  const auto trees = enumerate_marked_trees(form, p);
  ASSERT_EQ(words.size(), trees.size()) << "form " << static_cast<int>(form) << " m="
                                        << p.m.str() << " k=" << p.k;
  std::set<std::vector<Letter>> word_set;
  for (const auto& w : words) word_set.insert(w.letters);
  std::set<std::vector<Letter>> encoded;
  for (const auto& t : trees) {
    const DressedWord w = tree_to_word(t, form);
    ASSERT_TRUE(word_set.count(w.letters)) << "unexpected word " << w.str();
    encoded.insert(w.letters);
    const MarkedTree back = word_to_tree(w, form);
    ASSERT_EQ(t, back) << "round trip failed for " << w.str();
  }
  EXPECT_EQ(word_set.size(), encoded.size());
}

}  // namespace

TEST(RoundTrip, Udform1) {
  for (long m = 1; m <= 4; ++m)
    for (long k = 0; k <= 3; ++k) check_round_trip(WordForm::UDFORM1, params_mk(2 * m, k));
}

TEST(RoundTrip, Udform2) {
  for (long m = 1; m <= 4; ++m)
    for (long k = 0; k <= 3; ++k) check_round_trip(WordForm::UDFORM2, params_mk(2 * m, k));
}

TEST(RoundTrip, Udform3) {
  for (long twice = 1; twice <= 7; twice += 2)
    for (long k = 0; k <= 3; ++k) check_round_trip(WordForm::UDFORM3, params_mk(twice, k));
}

TEST(RoundTrip, ThreeTreesOfPOneAtTwo) {
  const auto p = params_mk(4, 1);
  const auto words = enumerate_words(WordForm::UDFORM1, p);
  const auto trees = enumerate_marked_trees(WordForm::UDFORM1, p);
  EXPECT_EQ(3u, words.size());
  EXPECT_EQ(3u, trees.size());
}

TEST(RoundTrip, PetalTrees) {
  const auto trees = enumerate_petal_trees(3, 3);
  EXPECT_GT(trees.size(), 10u);
  std::set<std::vector<Letter>> encoded;
  for (const auto& t : trees) {
    const DressedWord w = tree_to_word(t, WordForm::PETAL);
    // Contour words of petal trees are nonnegative excursions.
    long h = 0;
    for (Letter l : w.letters) {
      h += (l == Letter::U) ? 1 : (l == Letter::E ? 0 : -1);
      ASSERT_GE(h, 0) << w.str();
    }
    ASSERT_EQ(0, h) << w.str();
    encoded.insert(w.letters);
    const MarkedTree back = word_to_tree(w, WordForm::PETAL);
    ASSERT_EQ(t, back) << "round trip failed for " << w.str();
  }
  EXPECT_EQ(trees.size(), encoded.size());
}

TEST(Decode, RejectsMalformedWords) {
  // Forbidden factor U D_PLAIN, reported at the index of the down letter.
  try {
    word_to_tree(word("UD"), WordForm::UDFORM3);
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("index 1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(word_to_tree(word("UU"), WordForm::UDFORM1), std::invalid_argument);
  EXPECT_THROW(word_to_tree(word("UO"), WordForm::UDFORM1), std::invalid_argument);
  EXPECT_THROW(word_to_tree(word("UO"), WordForm::UDFORM2), std::invalid_argument);
  EXPECT_THROW(word_to_tree(word("UOE"), WordForm::UDFORM1), std::invalid_argument);
  // Petal words must stay nonnegative.
  try {
    word_to_tree(word("OU"), WordForm::PETAL);
    FAIL() << "expected an exception";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("index 0"), std::string::npos) << e.what();
  }
  EXPECT_THROW(word_to_tree(word("U"), WordForm::PETAL), std::invalid_argument);
}

TEST(Decorated, SmallFamilies) {
  EXPECT_EQ(1u, enumerate_decorated_families(1, {half(2)}, 5).size());
  EXPECT_EQ(1u, enumerate_decorated_families(1, {half(4)}, 5).size());
  EXPECT_EQ(2u, enumerate_decorated_families(1, {half(2), half(2)}, 5).size());
  EXPECT_EQ(1u, enumerate_decorated_families(0, {half(3)}, 5).size());
  EXPECT_EQ(0u, enumerate_decorated_families(1, {half(3)}, 5).size());
  EXPECT_THROW(enumerate_decorated_families(1, {half(2), half(2), half(2)}, 2),
               std::invalid_argument);
}

TEST(Decorated, MembersAreValid) {
  const auto fam = enumerate_decorated_families(1, {half(2), half(2), half(1)}, 5);
  for (const auto& member : fam) {
    ASSERT_EQ(3u, member.children.size());
    EXPECT_EQ(1, member.type[static_cast<std::size_t>(member.root)]);
    for (std::size_t v = 0; v < 3; ++v) {
      EXPECT_TRUE(is_valid_marked_path(member.path[v]));
      // Marked increments spell the child types in order.
      const auto& p = member.path[v];
      ASSERT_EQ(member.children[v].size(), p.marked.size());
      for (std::size_t j = 0; j < p.marked.size(); ++j) {
        const int child = member.children[v][j];
        EXPECT_EQ(member.type[static_cast<std::size_t>(child)],
                  p.steps[static_cast<std::size_t>(p.marked[j])]);
      }
    }
  }
}

TEST(Decorated, WordsPathsAndPolynomialsAgree) {
  // Three independent routes to the same numbers: four-letter words, the
  // path DP times the shuffle factor, and the closed form.
  for (long twice = 1; twice <= 6; ++twice) {
    for (long r = 0; r <= 2; ++r) {
      for (long s = 0; s <= 2; ++s) {
        for (int eps : {-1, 0, 1}) {
          std::vector<int> marks;
          for (long i = 0; i < r; ++i) marks.push_back(1);
          for (long i = 0; i < s; ++i) marks.push_back(0);
          const auto ws = enumerate_words(WordForm::PETAL, params_petal(twice, r, s, eps));
          const Int paths = count_marked_paths(twice, eps, marks);
          const Int shuffles = rat_to_int(binom(Int(r + s), s));
          EXPECT_EQ(Int(static_cast<long>(ws.size())), paths * shuffles)
              << "2m=" << twice << " r=" << r << " s=" << s << " eps=" << eps;
        }
      }
    }
  }
}
