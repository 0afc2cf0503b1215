#include "tightmaps/polys.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace tightmaps;

namespace {

HalfInt half(long twice) { return HalfInt::from_twice(Int(twice)); }

std::vector<HalfInt> ms(std::initializer_list<long> twices) {
  std::vector<HalfInt> out;
  for (long t : twices) out.push_back(half(t));
  return out;
}

TEST(Univariate, PAtSpecialPoints) {
  for (long k = 0; k <= 5; ++k) {
    EXPECT_EQ(Rat(k == 0 ? 1 : 0), p_k(k, HalfInt(1)));
    EXPECT_EQ(Rat(k % 2 == 0 ? 1 : -1), p_k(k, HalfInt(0)));
  }
  EXPECT_EQ(Rat(3), p_k(1, HalfInt(2)));
  EXPECT_EQ(Rat(0), p_k(-1, HalfInt(5)));
}

TEST(Univariate, QAtSpecialPoints) {
  for (long k = 0; k <= 5; ++k) EXPECT_EQ(Rat(k == 0 ? 1 : 0), q_k(k, HalfInt(0)));
  EXPECT_EQ(Rat(1), q_k(1, HalfInt(1)));
  EXPECT_EQ(Rat(3), q_k(2, HalfInt(2)));
}

TEST(Univariate, PtildeAtSpecialPoints) {
  for (long k = 0; k <= 5; ++k) EXPECT_EQ(Rat(k == 0 ? 1 : 0), ptilde_k(k, half(1)));
  EXPECT_EQ(Rat(1), ptilde_k(0, half(7)));
  EXPECT_EQ(Rat(2), ptilde_k(1, half(3)));
}

TEST(Univariate, PkeMatchesFamiliesAndClosedForm) {
  for (long k = 0; k <= 4; ++k) {
    for (long t = 0; t <= 8; ++t) {
      EXPECT_EQ(p_k(k, half(t)), p_ke(k, 0, half(t)));
      EXPECT_EQ(ptilde_k(k, half(t)), p_ke(k, 1, half(t)));
      EXPECT_EQ(q_k(k, half(t)), p_ke(k, 2, half(t)));
    }
  }
  EXPECT_EQ(Rat(2), p_ke(1, 3, half(3)));
  EXPECT_EQ(Rat(1), p_ke(2, 3, half(3)));
}

TEST(Univariate, EvenInM) {
  for (long k = 0; k <= 4; ++k) {
    for (long t = 0; t <= 7; ++t) {
      const HalfInt m = half(t);
      const HalfInt neg = -m;
      EXPECT_EQ(p_k(k, m), p_k(k, neg));
      EXPECT_EQ(q_k(k, m), q_k(k, neg));
      EXPECT_EQ(ptilde_k(k, m), ptilde_k(k, neg));
    }
  }
}

TEST(Univariate, IntegralOnNaturalDomain) {
  for (long k = 0; k <= 5; ++k) {
    for (long t = 0; t <= 10; ++t) {
      const HalfInt m = half(t);
      if (m.is_integer()) {
        EXPECT_EQ(Int(1), denominator(p_k(k, m)));
        EXPECT_EQ(Int(1), denominator(q_k(k, m)));
      } else {
        EXPECT_EQ(Int(1), denominator(ptilde_k(k, m)));
      }
    }
  }
}

TEST(Pi, SpecialValues) {
  for (long r = 0; r <= 3; ++r) {
    for (long s = 0; s <= 3; ++s) {
      EXPECT_EQ(Rat(r == 0 && s == 0 ? 1 : 0), pi_rse(r, s, 1, HalfInt(0)));
      EXPECT_EQ(Rat(0), pi_rse(r, s, 0, HalfInt(0)));
      EXPECT_EQ(Rat(r == 0 && s == 0 ? 1 : 0), pi_rse(r, s, 0, half(1)));
      EXPECT_EQ(Rat(0), pi_rse(r, s, 1, half(1)));
      EXPECT_EQ(Rat(0), pi_rse(r, s, -1, half(1)));
    }
  }
  EXPECT_EQ(Rat(2), pi_rse(0, 1, 1, half(3)));
  EXPECT_EQ(Rat(0), pi_rse(-1, 2, 0, HalfInt(3)));
  EXPECT_EQ(Rat(0), pi_rse(2, -1, 0, HalfInt(3)));
}

TEST(Pi, IntegerOnSupport) {
  for (long r = 0; r <= 4; ++r) {
    for (long s = 0; s <= 4; ++s) {
      for (long e = -1; e <= 1; ++e) {
        for (long t = 0; t <= 9; ++t) {
          const Rat v = pi_rse(r, s, e, half(t));
          EXPECT_EQ(Int(1), denominator(v))
              << "r=" << r << " s=" << s << " eps=" << e << " 2m=" << t;
          // eps = -1 is signed at m = 0 (alternating partial sums of the
          // eps = 1 family); the word-counting range is m >= 1/2.
          if (e >= 0 || t >= 1) {
            EXPECT_GE(numerator(v), Int(0))
                << "r=" << r << " s=" << s << " eps=" << e << " 2m=" << t;
          }
        }
      }
    }
  }
  EXPECT_EQ(Rat(-1), pi_rse(1, 0, -1, HalfInt(0)));
}

TEST(Multivariate, SingleSlotAndZeros) {
  for (long k = 0; k <= 4; ++k) {
    for (long t = 0; t <= 4; ++t) {
      EXPECT_EQ(p_k(k, half(2 * t)), p_multi(k, ms({2 * t, 0, 0})));
      EXPECT_EQ(q_k(k, half(2 * t)), q_multi(k, {half(2 * t)}));
    }
  }
  EXPECT_EQ(Rat(3), p_multi(1, ms({2, 2, 2, 2})));
  EXPECT_EQ(Rat(2), q_multi(1, ms({2, 2})));
  EXPECT_THROW(p_multi(1, {}), std::invalid_argument);
}

TEST(Multivariate, SymmetryUnderPermutation) {
  const std::vector<HalfInt> base = ms({2, 4, 6, 0});
  std::vector<std::vector<HalfInt>> perms = {ms({4, 2, 6, 0}), ms({6, 0, 4, 2}),
                                             ms({0, 6, 2, 4})};
  for (long k = 0; k <= 3; ++k) {
    for (const auto& p : perms) {
      EXPECT_EQ(p_multi(k, base), p_multi(k, p));
      EXPECT_EQ(q_multi(k, base), q_multi(k, p));
    }
  }
  for (long k = 0; k <= 3; ++k) {
    EXPECT_EQ(ptilde_multi(k, half(3), half(5), ms({2, 4})),
              ptilde_multi(k, half(5), half(3), ms({4, 2})));
  }
}

TEST(Multivariate, PtildeSpecializations) {
  for (long k = 0; k <= 4; ++k) {
    for (long t = 1; t <= 7; t += 2) {
      EXPECT_EQ(ptilde_k(k, half(t)), ptilde_multi(k, half(t), half(1), {}));
    }
    EXPECT_EQ(q_multi(k, ms({2, 4})), ptilde_multi(k, half(1), half(1), ms({2, 4})));
  }
  EXPECT_EQ(Rat(1), ptilde_multi(0, half(3), half(5), ms({4})));
}

TEST(Twoface, MatchesTwoSlotPolynomials) {
  for (long k = 0; k <= 3; ++k) {
    for (long t1 = 2; t1 <= 6; t1 += 2) {
      for (long t2 = 2; t2 <= 6; t2 += 2) {
        EXPECT_EQ(p_multi(k, ms({t1, t2})), pi_twoface(0, k, 0, half(t1), half(t2)));
      }
    }
  }
}

TEST(Twoface, SmallValues) {
  EXPECT_EQ(Rat(1), pi_twoface(0, 0, 0, half(1), half(1)));
  EXPECT_EQ(Rat(0), pi_twoface(1, 0, 0, half(2), half(2)));
  EXPECT_EQ(Rat(2), pi_twoface(1, 0, 1, half(2), half(2)));
  EXPECT_THROW(pi_twoface(1, 0, 0, half(0), half(2)), std::invalid_argument);
  EXPECT_THROW(pi_twoface(2, 0, 0, half(2), half(2)), std::invalid_argument);
}

TEST(Identities, SpotChecks) {
  EXPECT_EQ(q_k(2, HalfInt(2)), p_k(2, HalfInt(2)) + p_k(1, HalfInt(2)));
  EXPECT_EQ(Rat(1) * pi_rse(0, 1, 0, HalfInt(1)), Rat(1) * pi_rse(1, 0, 1, HalfInt(1)));
  EXPECT_EQ(Rat(1), pi_rse(1, 0, 1, HalfInt(1)));
}

TEST(Identities, FullSuitePasses) {
  const CheckReport rep = verify_poly_identities(4, 6);
  EXPECT_GT(rep.cases, 1000);
  EXPECT_TRUE(rep.pass()) << (rep.failures.empty()
                                  ? std::string("no failures")
                                  : rep.failures[0].inputs + " expected " +
                                        rep.failures[0].expected + " got " + rep.failures[0].got);
}

}  // namespace
