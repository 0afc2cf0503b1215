#pragma once

#include "tightmaps/numeric.hpp"
#include "tightmaps/report.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightmaps {

// ---------------------------------------------------------------------------
// Univariate families.
//
// p_ke(k, e, m) = (1/(k!)^2) prod_{i=1}^k (m^2 - (i - e/2)^2), the common
// generalization of the three families below (e = 0, 1, 2). Evaluated as a
// plain rational product for any m; parity support conditions are applied
// only in pi_rse.
// ---------------------------------------------------------------------------

inline Rat p_ke(long k, long e, const HalfInt& m) {
  if (k < 0) return Rat(0);
  const Rat m2 = m.value() * m.value();
  Rat prod = 1;
  for (long i = 1; i <= k; ++i) {
    const Rat c(2 * i - e, 2);
    prod *= m2 - c * c;
    if (prod == 0) return Rat(0);
  }
  const Rat kf(factorial(k));
  return prod / (kf * kf);
}

inline Rat p_k(long k, const HalfInt& m) { return p_ke(k, 0, m); }
inline Rat ptilde_k(long k, const HalfInt& m) { return p_ke(k, 1, m); }
inline Rat q_k(long k, const HalfInt& m) { return p_ke(k, 2, m); }

// pi_rse(r, s, eps, m) = C(r+s, s) p_{r+s, s+1+eps}(m) when m - (s+1+eps)/2
// is an integer, else 0. Zero for negative r or s. eps may be any integer so
// that shift identities (eps -> eps + 1) can be checked at the boundary.
inline Rat pi_rse(long r, long s, long eps, const HalfInt& m) {
  if (r < 0 || s < 0) return Rat(0);
  if ((m.twice - (s + 1 + eps)) % 2 != 0) return Rat(0);
  return Rat(binom(Int(r + s), s)) * p_ke(r + s, s + 1 + eps, m);
}

// ---------------------------------------------------------------------------
// Multivariate families, defined by convolution over weak compositions.
// ---------------------------------------------------------------------------

inline Rat q_multi(long k, const std::vector<HalfInt>& ms) {
  if (k < 0) return Rat(0);
  Rat total = 0;
  for_each_weak_composition(k, ms.size(), [&](const std::vector<long>& ks) {
    Rat term = 1;
    for (std::size_t i = 0; i < ms.size(); ++i) {
      term *= q_k(ks[i], ms[i]);
      if (term == 0) return;
    }
    total += term;
  });
  return total;
}

// First slot carries a p factor, the rest q factors.
inline Rat p_multi(long k, const std::vector<HalfInt>& ms) {
  if (ms.empty()) throw std::invalid_argument("p_multi: needs at least one argument");
  if (k < 0) return Rat(0);
  Rat total = 0;
  for_each_weak_composition(k, ms.size(), [&](const std::vector<long>& ks) {
    Rat term = p_k(ks[0], ms[0]);
    for (std::size_t i = 1; i < ms.size() && term != 0; ++i) term *= q_k(ks[i], ms[i]);
    if (term != 0) total += term;
  });
  return total;
}

// Two ptilde slots followed by q slots.
inline Rat ptilde_multi(long k, const HalfInt& m1, const HalfInt& m2,
                        const std::vector<HalfInt>& rest) {
  if (k < 0) return Rat(0);
  Rat total = 0;
  for_each_weak_composition(k, rest.size() + 2, [&](const std::vector<long>& ks) {
    Rat term = ptilde_k(ks[0], m1) * ptilde_k(ks[1], m2);
    for (std::size_t i = 0; i < rest.size() && term != 0; ++i) term *= q_k(ks[i + 2], rest[i]);
    if (term != 0) total += term;
  });
  return total;
}

// Convolution of two pi factors over (r, s) splits; the eps pairings are
// (-1,1)+(0,0) for eps = 0 and (0,1)+(1,0) for eps = 1.
inline Rat pi_twoface(int eps, long r, long s, const HalfInt& m1, const HalfInt& m2) {
  if (eps != 0 && eps != 1) throw std::invalid_argument("pi_twoface: eps must be 0 or 1");
  if (m1.twice <= 0 || m2.twice <= 0)
    throw std::invalid_argument("pi_twoface: m1 and m2 must be positive");
  if (r < 0 || s < 0) return Rat(0);
  Rat total = 0;
  for (long r1 = 0; r1 <= r; ++r1) {
    for (long s1 = 0; s1 <= s; ++s1) {
      const long r2 = r - r1, s2 = s - s1;
      if (eps == 0) {
        total += pi_rse(r1, s1, -1, m1) * pi_rse(r2, s2, 1, m2) +
                 pi_rse(r1, s1, 0, m1) * pi_rse(r2, s2, 0, m2);
      } else {
        total += pi_rse(r1, s1, 0, m1) * pi_rse(r2, s2, 1, m2) +
                 pi_rse(r1, s1, 1, m1) * pi_rse(r2, s2, 0, m2);
      }
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Support-tuple enumeration: the sums over (eps_i, r_i, s_i) tuples shared by
// the closed-form counts and the identity checks. Zero factors prune branches,
// which keeps the walk proportional to the surviving terms.
// ---------------------------------------------------------------------------

namespace detail {

struct SupportEntry {
  int eps;
  long r, s;
  Rat value;
};

inline constexpr int kFreeEps = 2;  // placeholder: position ranges over {0, 1}

// All (eps, r, s) with nonzero pi at this m, for r + s <= budget.
inline std::vector<SupportEntry> pi_support(const HalfInt& m, long budget,
                                            const std::vector<int>& eps_allowed) {
  std::vector<SupportEntry> out;
  for (int e : eps_allowed) {
    for (long r = 0; r <= budget; ++r) {
      for (long s = 0; r + s <= budget; ++s) {
        Rat v = pi_rse(r, s, e, m);
        if (v != 0) out.push_back({e, r, s, v});
      }
    }
  }
  return out;
}

// One entry per position, total r + s equal to budget, product of values
// passed to leaf(picks, product).
template <class Leaf>
inline void for_each_support_tuple(const std::vector<std::vector<SupportEntry>>& tables,
                                   long budget, Leaf&& leaf) {
  const std::size_t n = tables.size();
  if (budget < 0) return;
  std::vector<const SupportEntry*> pick(n, nullptr);
  auto rec = [&](auto&& self, std::size_t pos, long left, const Rat& prod) -> void {
    if (pos == n) {
      if (left == 0) leaf(pick, prod);
      return;
    }
    for (const auto& ent : tables[pos]) {
      if (ent.r + ent.s > left) continue;
      pick[pos] = &ent;
      self(self, pos + 1, left - ent.r - ent.s, prod * ent.value);
    }
  };
  rec(rec, 0, budget, Rat(1));
}

// Tuples of the index family: eps_i in {0,1} except possibly fixed values at
// the first two positions, sum(r_i + s_i) = n - 3, sum eps_i = sum r_i + 1.
// leaf(picks, sum_r, sum_s, product).
template <class Leaf>
inline void for_each_index_tuple(const std::vector<HalfInt>& ms, int eps1, int eps2,
                                 Leaf&& leaf) {
  const std::size_t n = ms.size();
  if (n < 3) return;
  const long budget = static_cast<long>(n) - 3;
  std::vector<std::vector<SupportEntry>> tables(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> allowed;
    if (i == 0 && eps1 != kFreeEps) {
      allowed = {eps1};
    } else if (i == 1 && eps2 != kFreeEps) {
      allowed = {eps2};
    } else {
      allowed = {0, 1};
    }
    tables[i] = pi_support(ms[i], budget, allowed);
  }
  for_each_support_tuple(
      tables, budget,
      [&](const std::vector<const SupportEntry*>& picks, const Rat& prod) {
        long se = 0, sr = 0, ss = 0;
        for (const auto* p : picks) {
          se += p->eps;
          sr += p->r;
          ss += p->s;
        }
        if (se != sr + 1) return;
        leaf(picks, sr, ss, prod);
      });
}

inline std::string ms_str(const std::vector<HalfInt>& ms) {
  std::string s = "[";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) s += ",";
    s += ms[i].str();
  }
  return s + "]";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Identity suite.
// ---------------------------------------------------------------------------

namespace detail {

// One side of a transmutation identity: a weighted sum over an index family
// with the first two eps values possibly pinned. The linear factor is
// eps (or 1 - eps) at position eps_j times r (or s) at position var_j; terms
// with zero linear factor are skipped before any factorial is formed, which
// also restricts each sum to the subfamily (sum s >= 1 resp. sum r >= 1)
// where its weight is defined.
struct TransSide {
  int e1, e2;           // kFreeEps or a fixed eps value
  bool fact_rs;         // true: weight r!(s-1)!; false: weight (r-1)!s!
  int eps_kind;         // 1: eps_{eps_j}, 0: 1 - eps_{eps_j}
  std::size_t eps_j;
  int var_kind;         // 0: s_{var_j}, 1: r_{var_j}
  std::size_t var_j;
};

inline Rat trans_side(const std::vector<HalfInt>& ms, const TransSide& t) {
  Rat total = 0;
  for_each_index_tuple(ms, t.e1, t.e2, [&](const std::vector<const SupportEntry*>& picks,
                                           long sr, long ss, const Rat& prod) {
    const long var = t.var_kind == 0 ? picks[t.var_j]->s : picks[t.var_j]->r;
    const long eps = picks[t.eps_j]->eps;
    const long coeff = (t.eps_kind == 1 ? eps : 1 - eps) * var;
    if (coeff == 0) return;
    const Int f = t.fact_rs ? factorial(sr) * factorial(ss - 1)
                            : factorial(sr - 1) * factorial(ss);
    total += Rat(f) * Rat(coeff) * prod;
  });
  return total;
}

}  // namespace detail

// Checks the algebraic relations between the families on a grid: the q = p
// recurrence, binomial product forms, string and dilaton recursions, the
// multivariate reductions, pi shift relations, transmutation identities and
// the two-face convolution consistency. k_max bounds the degrees and indices,
// m_max the arguments (integers and half-integers up to m_max).
inline CheckReport verify_poly_identities(long k_max, long m_max) {
  using detail::kFreeEps;
  using detail::ms_str;
  using detail::TransSide;
  CheckReport rep;
  rep.name = "polys";

  std::vector<HalfInt> grid;
  for (long t = 0; t <= 2 * m_max; ++t) grid.push_back(HalfInt::from_twice(Int(t)));

  // q_k = p_k + p_{k-1}; binomial form of the product definition.
  for (const HalfInt& m : grid) {
    for (long k = 0; k <= k_max; ++k) {
      rep.expect_eq(p_k(k, m) + p_k(k - 1, m), q_k(k, m),
                    [&] { return "relpkqk k=" + std::to_string(k) + " m=" + m.str(); });
      for (long e = 0; e <= 3; ++e) {
        const Rat viaBinom =
            binom(m.value() + Rat(e, 2) - 1, k) * binom(m.value() - Rat(e, 2) + k, k);
        rep.expect_eq(viaBinom, p_ke(k, e, m), [&] {
          return "pke-binom k=" + std::to_string(k) + " e=" + std::to_string(e) +
                 " m=" + m.str();
        });
      }
    }
  }

  // String recursions, integer arguments for p and q.
  for (long m = 0; m <= m_max; ++m) {
    const HalfInt hm(static_cast<int>(m));
    for (long k = 0; k <= k_max; ++k) {
      Rat sp = 0, sq = 0;
      for (long j = 1; j < m; ++j) {
        sp += Rat(2 * j) * p_k(k, HalfInt(static_cast<int>(j)));
        sq += Rat(2 * j) * q_k(k, HalfInt(static_cast<int>(j)));
      }
      rep.expect_eq(Rat(m - k - 1) * p_k(k, hm) + sp, Rat(k + 1) * p_k(k + 1, hm),
                    [&] { return "pkunivstr k=" + std::to_string(k) + " m=" + hm.str(); });
      rep.expect_eq(Rat(m - k) * q_k(k, hm) + sq, Rat(k + 1) * q_k(k + 1, hm),
                    [&] { return "qkunivstr k=" + std::to_string(k) + " m=" + hm.str(); });
    }
  }

  // String recursion for ptilde, half-odd arguments and half-odd inner sum.
  for (long t = 1; t <= 2 * m_max; t += 2) {
    const HalfInt m = HalfInt::from_twice(Int(t));
    for (long k = 0; k <= k_max; ++k) {
      Rat sum = 0;
      for (long u = 1; u < t; u += 2) {
        const HalfInt j = HalfInt::from_twice(Int(u));
        sum += 2 * j.value() * ptilde_k(k, j);
      }
      rep.expect_eq((m.value() - k - Rat(1, 2)) * ptilde_k(k, m) + sum,
                    Rat(k + 1) * ptilde_k(k + 1, m),
                    [&] { return "tildepkunivstr k=" + std::to_string(k) + " m=" + m.str(); });
    }
  }

  // Dilaton-like shift between the e and e+2 families.
  for (const HalfInt& m : grid) {
    for (long k = 0; k <= k_max; ++k) {
      for (long e = 0; e <= 2; ++e) {
        rep.expect_eq(Rat(k) * p_ke(k, e, m) + Rat(k - e) * p_ke(k - 1, e, m),
                      Rat(k) * p_ke(k, e + 2, m), [&] {
                        return "pke-dilaton k=" + std::to_string(k) + " e=" + std::to_string(e) +
                               " m=" + m.str();
                      });
      }
    }
  }

  // Multivariate reductions on small integer tuples.
  {
    std::vector<std::vector<HalfInt>> tuples;
    const long cap = std::min<long>(m_max, 3);
    for (long a = 0; a <= cap; ++a) {
      tuples.push_back({HalfInt(static_cast<int>(a))});
      for (long b = 0; b <= cap; ++b) {
        tuples.push_back({HalfInt(static_cast<int>(a)), HalfInt(static_cast<int>(b))});
        for (long c = 0; c <= std::min<long>(cap, 2); ++c)
          tuples.push_back({HalfInt(static_cast<int>(a)), HalfInt(static_cast<int>(b)),
                            HalfInt(static_cast<int>(c))});
      }
    }
    const long kcap = std::min<long>(k_max, 4);
    for (const auto& ms : tuples) {
      for (long k = 0; k <= kcap; ++k) {
        // Prepending a 1 to p turns it into q.
        std::vector<HalfInt> with1 = ms;
        with1.insert(with1.begin(), HalfInt(1));
        rep.expect_eq(q_multi(k, ms), p_multi(k, with1),
                      [&] { return "addingroot k=" + std::to_string(k) + " ms=" + ms_str(ms); });

        // Appending a 0 changes nothing.
        std::vector<HalfInt> with0 = ms;
        with0.push_back(HalfInt(0));
        rep.expect_eq(p_multi(k, ms), p_multi(k, with0), [&] {
          return "pkqkwithzeroes(p) k=" + std::to_string(k) + " ms=" + ms_str(ms);
        });
        rep.expect_eq(q_multi(k, ms), q_multi(k, with0), [&] {
          return "pkqkwithzeroes(q) k=" + std::to_string(k) + " ms=" + ms_str(ms);
        });

        // Symmetric form: sum over one extra slot of binomials times p's.
        Rat alt = 0;
        for_each_weak_composition(k, ms.size() + 1, [&](const std::vector<long>& ks) {
          Rat term = Rat(binom(Int(ms.size()) - 1, ks[0]));
          for (std::size_t i = 0; i < ms.size() && term != 0; ++i)
            term *= p_k(ks[i + 1], ms[i]);
          alt += term;
        });
        rep.expect_eq(alt, p_multi(k, ms),
                      [&] { return "alternativepk k=" + std::to_string(k) + " ms=" + ms_str(ms); });

        // Dilaton: appending 1 minus appending 0 drops the degree.
        std::vector<HalfInt> app1 = ms;
        app1.push_back(HalfInt(1));
        rep.expect_eq(p_multi(k, app1) - p_multi(k, with0), p_multi(k - 1, ms),
                      [&] { return "pdil k=" + std::to_string(k) + " ms=" + ms_str(ms); });

        // String: multivariate form with inner sums over each slot.
        Rat msum = 0;
        Rat inner = 0;
        for (const HalfInt& mi : ms) msum += mi.value();
        for (std::size_t i = 0; i < ms.size(); ++i) {
          for (Int j = 1; j < ms[i].whole(); ++j) {
            std::vector<HalfInt> sub = ms;
            sub[i] = HalfInt(j);
            inner += Rat(2 * j) * p_multi(k, sub);
          }
        }
        rep.expect_eq((msum - k - 1) * p_multi(k, ms) + inner, Rat(k + 1) * p_multi(k + 1, ms),
                      [&] { return "pstr k=" + std::to_string(k) + " ms=" + ms_str(ms); });
      }
    }
  }

  // ptilde multivariate: specializations at 1/2, dilaton and string.
  {
    std::vector<HalfInt> halves;
    for (long t = 1; t <= std::min<long>(2 * m_max, 5); t += 2)
      halves.push_back(HalfInt::from_twice(Int(t)));
    std::vector<std::vector<HalfInt>> rests = {
        {}, {HalfInt(1)}, {HalfInt(2)}, {HalfInt(1), HalfInt(1)}};
    const long kcap = std::min<long>(k_max, 4);
    for (const HalfInt& m1 : halves) {
      for (const HalfInt& m2 : halves) {
        for (const auto& rest : rests) {
          for (long k = 0; k <= kcap; ++k) {
            if (m2.twice == 1) {
              Rat uni = 0;
              for_each_weak_composition(k, rest.size() + 1, [&](const std::vector<long>& ks) {
                Rat term = ptilde_k(ks[0], m1);
                for (std::size_t i = 0; i < rest.size() && term != 0; ++i)
                  term *= q_k(ks[i + 1], rest[i]);
                uni += term;
              });
              rep.expect_eq(uni, ptilde_multi(k, m1, m2, rest), [&] {
                return "tildep-at-half k=" + std::to_string(k) + " m1=" + m1.str() +
                       " rest=" + ms_str(rest);
              });
            }
            if (m1.twice == 1 && m2.twice == 1) {
              rep.expect_eq(q_multi(k, rest), ptilde_multi(k, m1, m2, rest), [&] {
                return "tildep-two-halves k=" + std::to_string(k) + " rest=" + ms_str(rest);
              });
            }

            std::vector<HalfInt> r0 = rest, r1 = rest;
            r0.push_back(HalfInt(0));
            r1.push_back(HalfInt(1));
            rep.expect_eq(ptilde_multi(k, m1, m2, r1) - ptilde_multi(k, m1, m2, r0),
                          ptilde_multi(k - 1, m1, m2, rest), [&] {
                            return "tildepdil k=" + std::to_string(k) + " m1=" + m1.str() +
                                   " m2=" + m2.str() + " rest=" + ms_str(rest);
                          });

            Rat msum = m1.value() + m2.value();
            for (const HalfInt& mi : rest) msum += mi.value();
            Rat inner = 0;
            for (long u = 1; u < m1.twice; u += 2)
              inner += Rat(u) * ptilde_multi(k, HalfInt::from_twice(Int(u)), m2, rest);
            for (long u = 1; u < m2.twice; u += 2)
              inner += Rat(u) * ptilde_multi(k, m1, HalfInt::from_twice(Int(u)), rest);
            for (std::size_t i = 0; i < rest.size(); ++i) {
              for (Int j = 1; j < rest[i].whole(); ++j) {
                std::vector<HalfInt> sub = rest;
                sub[i] = HalfInt(j);
                inner += Rat(2 * j) * ptilde_multi(k, m1, m2, sub);
              }
            }
            rep.expect_eq((msum - k - 1) * ptilde_multi(k, m1, m2, rest) + inner,
                          Rat(k + 1) * ptilde_multi(k + 1, m1, m2, rest), [&] {
                            return "tildepstr k=" + std::to_string(k) + " m1=" + m1.str() +
                                   " m2=" + m2.str() + " rest=" + ms_str(rest);
                          });
          }
        }
      }
    }
  }

  // pi special values at m = 0 and m = 1/2.
  for (long r = 0; r <= k_max; ++r) {
    for (long s = 0; s <= k_max; ++s) {
      const Rat at0 = pi_rse(r, s, 1, HalfInt(0));
      rep.expect_eq(Rat(r == 0 && s == 0 ? 1 : 0), at0,
                    [&] { return "pi1-at-0 r=" + std::to_string(r) + " s=" + std::to_string(s); });
      rep.expect_eq(Rat(0), pi_rse(r, s, 0, HalfInt(0)),
                    [&] { return "pi0-at-0 r=" + std::to_string(r) + " s=" + std::to_string(s); });
      const HalfInt half = HalfInt::from_twice(Int(1));
      rep.expect_eq(Rat(r == 0 && s == 0 ? 1 : 0), pi_rse(r, s, 0, half), [&] {
        return "pi0-at-half r=" + std::to_string(r) + " s=" + std::to_string(s);
      });
      rep.expect_eq(Rat(0), pi_rse(r, s, 1, half), [&] {
        return "pi1-at-half r=" + std::to_string(r) + " s=" + std::to_string(s);
      });
      rep.expect_eq(Rat(0), pi_rse(r, s, -1, half), [&] {
        return "pim1-at-half r=" + std::to_string(r) + " s=" + std::to_string(s);
      });
    }
  }

  // pi shift relations.
  for (const HalfInt& m : grid) {
    for (long r = 0; r <= k_max; ++r) {
      for (long s = 0; s <= k_max; ++s) {
        for (long e = -1; e <= 1; ++e) {
          rep.expect_eq(Rat(s) * pi_rse(r, s, e, m), Rat(r + 1) * pi_rse(r + 1, s - 1, e + 1, m),
                        [&] {
                          return "nspieps r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                 " eps=" + std::to_string(e) + " m=" + m.str();
                        });
        }
        rep.expect_eq(pi_rse(r, s, -1, m) + pi_rse(r - 1, s, -1, m), pi_rse(r, s, 1, m), [&] {
          return "npi1 r=" + std::to_string(r) + " s=" + std::to_string(s) + " m=" + m.str();
        });
        rep.expect_eq(Rat(r + 1) * pi_rse(r + 1, s - 1, 0, m) + Rat(r) * pi_rse(r, s - 1, 0, m),
                      Rat(s) * pi_rse(r, s, 1, m), [&] {
                        return "nspi1 r=" + std::to_string(r) + " s=" + std::to_string(s) +
                               " m=" + m.str();
                      });
      }
    }
  }

  // Two-face convolution: the r >= 1 and s >= 1 closed forms agree.
  for (long r = 1; r <= std::min<long>(k_max, 3); ++r) {
    for (long s = 1; s <= std::min<long>(k_max, 3); ++s) {
      for (long t1 = 1; t1 <= std::min<long>(2 * m_max, 4); ++t1) {
        for (long t2 = t1; t2 <= std::min<long>(2 * m_max, 4); ++t2) {
          const HalfInt m1 = HalfInt::from_twice(Int(t1));
          const HalfInt m2 = HalfInt::from_twice(Int(t2));
          const Rat lhs = Rat(factorial(r - 1) * factorial(s)) * pi_twoface(0, r - 1, s, m1, m2);
          const Rat rhs = Rat(factorial(r) * factorial(s - 1)) * pi_twoface(1, r, s - 1, m1, m2);
          rep.expect_eq(lhs, rhs, [&] {
            return "twoface r=" + std::to_string(r) + " s=" + std::to_string(s) +
                   " m1=" + m1.str() + " m2=" + m2.str();
          });
        }
      }
    }
  }

  // Transmutation identities on index-family sums.
  {
    std::vector<std::vector<HalfInt>> tuples;
    auto add_grid = [&tuples](std::size_t n, long tcap) {
      std::vector<long> cur(n, 0);
      auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n) {
          std::vector<HalfInt> ms;
          for (long t : cur) ms.push_back(HalfInt::from_twice(Int(t)));
          tuples.push_back(std::move(ms));
          return;
        }
        for (long t = 0; t <= tcap; ++t) {
          cur[pos] = t;
          self(self, pos + 1);
        }
      };
      rec(rec, 0);
    };
    add_grid(3, std::min<long>(2 * m_max, 4));
    add_grid(4, std::min<long>(2 * m_max, 3));
    add_grid(5, std::min<long>(2 * m_max, 2));
    if (m_max >= 3) {
      auto six = [](std::initializer_list<int> ts) {
        std::vector<HalfInt> ms;
        for (int t : ts) ms.push_back(HalfInt::from_twice(Int(t)));
        return ms;
      };
      tuples.push_back(six({5, 4, 1, 2, 3, 0}));
      tuples.push_back(six({1, 5, 2, 4, 0, 3}));
      tuples.push_back(six({3, 3, 1, 1, 5, 2}));
      tuples.push_back(six({2, 1, 5, 3, 4, 1}));
      tuples.push_back(six({4, 2, 2, 1, 1, 5}));
    }

    for (const auto& ms : tuples) {
      const std::size_t n = ms.size();
      auto side = [&](const TransSide& t) { return detail::trans_side(ms, t); };

      for (std::size_t j : {std::size_t{0}, std::size_t{2}}) {
        rep.expect_eq(side({kFreeEps, kFreeEps, true, 0, j, 0, j}),
                      side({kFreeEps, kFreeEps, false, 1, j, 1, j}),
                      [&] { return "trans1 j=" + std::to_string(j + 1) + " ms=" + ms_str(ms); });
      }

      rep.expect_eq(side({-1, 1, true, 1, 2, 0, 0}), side({0, 1, false, 1, 2, 1, 0}),
                    [&] { return "trans2a ms=" + ms_str(ms); });

      const Rat b1 = side({-1, 1, true, 1, 2, 0, 1});
      const Rat b2 = side({1, -1, true, 1, 2, 0, 1});
      const Rat b3 = side({1, 0, false, 1, 2, 1, 1});
      rep.expect_eq(b1, b2, [&] { return "trans2b-star ms=" + ms_str(ms); });
      rep.expect_eq(b2, b3, [&] { return "trans2b ms=" + ms_str(ms); });

      rep.expect_eq(side({1, 0, false, 0, 2, 1, 0}), side({0, 0, true, 0, 2, 0, 0}),
                    [&] { return "trans2c ms=" + ms_str(ms); });
      rep.expect_eq(side({0, 1, false, 0, 2, 1, 1}), side({0, 0, true, 0, 2, 0, 1}),
                    [&] { return "trans2d ms=" + ms_str(ms); });

      for (std::size_t j = 2; j < std::min<std::size_t>(n, 4); ++j) {
        rep.expect_eq(side({-1, 1, true, 1, j, 0, j}), side({1, 1, false, 0, j, 1, j}),
                      [&] { return "trans3 j=" + std::to_string(j + 1) + " ms=" + ms_str(ms); });
      }
    }
  }

  return rep;
}

}  // namespace tightmaps
