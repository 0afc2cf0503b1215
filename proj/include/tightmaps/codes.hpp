#pragma once

#include "tightmaps/numeric.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightmaps {

// ---------------------------------------------------------------------------
// Dressed words.
//
// Alphabet: U (up), D_MARK (marked down), D_PLAIN (plain down), E (petal).
// The factor (U, D_PLAIN) is never allowed. Forms:
//   UDFORM1  D. Dp^a1 U^b1 D. ... D. Dp^a{k+1} U^b{k+1}   sum a = m-k-1, sum b = m
//   UDFORM2  Dp^a1 U^b1 D. ... D. Dp^a{k+1} U^b{k+1} U    sum a = m-k,   sum b = m-1
//   UDFORM3  Dp^a1 U^b1 D. ... D. Dp^a{k+1} U^b{k+1}      sum a = m-k-1/2, sum b = m-1/2
//   PETAL    arrangements of {U, D., Dp, E} with prescribed letter counts
// (D. = D_MARK, Dp = D_PLAIN). Words of forms 1-3 are balanced bridges that
// may dip below their starting height; petal-tree contour words are
// nonnegative excursions.
// ---------------------------------------------------------------------------

enum class Letter : char { U = 'U', D_MARK = 'O', D_PLAIN = 'D', E = 'E' };

enum class WordForm { UDFORM1, UDFORM2, UDFORM3, PETAL };

struct DressedWord {
  std::vector<Letter> letters;

  bool operator==(const DressedWord&) const = default;
  bool operator<(const DressedWord& o) const { return letters < o.letters; }

  std::string str() const {
    std::string s;
    for (Letter l : letters) s.push_back(static_cast<char>(l));
    return s;
  }
};

// m, k parameterize forms 1-3; (m, r, s, eps) parameterize PETAL.
struct WordParams {
  HalfInt m{0};
  long k = 0;
  long r = 0;
  long s = 0;
  int eps = 0;
};

namespace detail {

inline int increment(Letter l) {
  switch (l) {
    case Letter::U:
      return 1;
    case Letter::E:
      return 0;
    default:
      return -1;
  }
}

// Appends block i of a form word: a down-run, then an up-run.
inline void append_block(std::vector<Letter>& w, long a, long b) {
  for (long j = 0; j < a; ++j) w.push_back(Letter::D_PLAIN);
  for (long j = 0; j < b; ++j) w.push_back(Letter::U);
}

// twice/2 as a long when even and nonnegative; -1 otherwise.
inline long as_count(const Int& twice) {
  if (twice < 0 || twice % 2 != 0) return -1;
  return static_cast<long>(Int(twice / 2));
}

}  // namespace detail

inline std::vector<DressedWord> enumerate_words(WordForm form, const WordParams& p) {
  std::vector<DressedWord> out;
  const long k = p.k;
  if (k < 0) return out;

  if (form == WordForm::PETAL) {
    if (p.r < 0 || p.s < 0) return out;
    const long u = detail::as_count(p.m.twice - (p.s + 1 + p.eps));
    const long v = detail::as_count(p.m.twice - 2 * p.r - (p.s + 1 - p.eps));
    if (u < 0 || v < 0) return out;
    std::vector<Letter> cur;
    long left_u = u, left_do = p.r, left_dp = v, left_e = p.s;
    auto rec = [&](auto&& self) -> void {
      if (left_u + left_do + left_dp + left_e == 0) {
        out.push_back({cur});
        return;
      }
      const bool after_u = !cur.empty() && cur.back() == Letter::U;
      auto push = [&](Letter l, long& left) {
        cur.push_back(l);
        --left;
        self(self);
        ++left;
        cur.pop_back();
      };
      if (left_u > 0) push(Letter::U, left_u);
      if (left_do > 0) push(Letter::D_MARK, left_do);
      if (left_dp > 0 && !after_u) push(Letter::D_PLAIN, left_dp);
      if (left_e > 0) push(Letter::E, left_e);
    };
    rec(rec);
    return out;
  }

  long ta, tb;
  bool lead_mark = false, trail_up = false;
  switch (form) {
    case WordForm::UDFORM1:
      ta = detail::as_count(p.m.twice - 2 * k - 2);
      tb = detail::as_count(p.m.twice);
      lead_mark = true;
      break;
    case WordForm::UDFORM2:
      ta = detail::as_count(p.m.twice - 2 * k);
      tb = detail::as_count(p.m.twice - 2);
      trail_up = true;
      break;
    default:  // UDFORM3
      ta = detail::as_count(p.m.twice - 2 * k - 1);
      tb = detail::as_count(p.m.twice - 1);
      break;
  }
  if (ta < 0 || tb < 0) return out;

  for_each_weak_composition(ta, static_cast<std::size_t>(k) + 1, [&](const std::vector<long>& as) {
    for_each_weak_composition(
        tb, static_cast<std::size_t>(k) + 1, [&](const std::vector<long>& bs) {
          std::vector<Letter> w;
          for (long i = 0; i <= k; ++i) {
            if (lead_mark || i > 0) w.push_back(Letter::D_MARK);
            detail::append_block(w, as[i], bs[i]);
          }
          if (trail_up) w.push_back(Letter::U);
          out.push_back({std::move(w)});
        });
  });
  return out;
}

// ---------------------------------------------------------------------------
// Marked lattice paths.
// ---------------------------------------------------------------------------

struct MarkedPath {
  std::vector<int> steps;   // increments in {+1, 0, -1}
  std::vector<int> marked;  // marked step indices, increasing

  bool operator==(const MarkedPath&) const = default;
};

inline bool is_valid_marked_path(const MarkedPath& p) {
  std::vector<char> is_marked(p.steps.size(), 0);
  long prev = -1;
  for (int i : p.marked) {
    if (i <= prev || i >= static_cast<long>(p.steps.size())) return false;
    prev = i;
    is_marked[i] = 1;
    if (p.steps[i] == -1) return false;
  }
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (p.steps[i] == 0 && !is_marked[i]) return false;
    if (i > 0 && p.steps[i] == 1 && p.steps[i - 1] == -1 && !is_marked[i]) return false;
  }
  return true;
}

// Number of marked paths of d-1 steps from height 0 to eps whose marked-step
// increments match marks in order. Marked steps carry increments {0, +1}; an
// up step directly after a down step must be marked, horizontal steps always.
inline Int count_marked_paths(long d, int eps, const std::vector<int>& marks) {
  if (d < 1) return Int(0);
  const long L = d - 1;
  if (eps > L || eps < -L) return Int(0);
  const long K = static_cast<long>(marks.size());
  const long H = 2 * L + 1;  // heights -L..L
  // state: (height, marks consumed, previous step was down)
  std::vector<Int> cur(static_cast<std::size_t>(H * (K + 1) * 2), Int(0));
  auto at = [&](std::vector<Int>& tab, long h, long c, int down) -> Int& {
    return tab[static_cast<std::size_t>(((h + L) * (K + 1) + c) * 2 + down)];
  };
  at(cur, 0, 0, 0) = 1;
  for (long step = 0; step < L; ++step) {
    std::vector<Int> next(cur.size(), Int(0));
    for (long h = -step; h <= step; ++h) {
      for (long c = 0; c <= K; ++c) {
        for (int down = 0; down < 2; ++down) {
          const Int& v = at(cur, h, c, down);
          if (v == 0) continue;
          if (c < K && marks[c] == 1) at(next, h + 1, c + 1, 0) += v;  // marked up
          if (!down) at(next, h + 1, c, 0) += v;                      // plain up
          if (c < K && marks[c] == 0) at(next, h, c + 1, 0) += v;     // marked flat
          at(next, h - 1, c, 1) += v;                                 // down
        }
      }
    }
    cur.swap(next);
  }
  return at(cur, eps, K, 0) + at(cur, eps, K, 1);
}

// Explicit version of the same family, for round-trip and DP cross-checks.
inline std::vector<MarkedPath> enumerate_marked_paths(long d, int eps,
                                                      const std::vector<int>& marks) {
  std::vector<MarkedPath> out;
  if (d < 1) return out;
  const long L = d - 1;
  const long K = static_cast<long>(marks.size());
  MarkedPath cur;
  auto rec = [&](auto&& self, long pos, long h, long c, bool down) -> void {
    if (pos == L) {
      if (h == eps && c == K) out.push_back(cur);
      return;
    }
    auto push = [&](int inc, bool mark, long nc) {
      cur.steps.push_back(inc);
      if (mark) cur.marked.push_back(static_cast<int>(pos));
      self(self, pos + 1, h + inc, nc, inc == -1);
      if (mark) cur.marked.pop_back();
      cur.steps.pop_back();
    };
    if (c < K && marks[c] == 1) push(1, true, c + 1);
    if (!down) push(1, false, c);
    if (c < K && marks[c] == 0) push(0, true, c + 1);
    push(-1, false, c);
  };
  rec(rec, 0, 0, 0, false);
  return out;
}

// ---------------------------------------------------------------------------
// Marked trees and the word codings.
// ---------------------------------------------------------------------------

struct MarkedTree {
  // children[v] in planar order; vertex 0 is the root the contour heights are
  // measured from; ids follow the contour (preorder).
  std::vector<std::vector<int>> children;
  std::vector<char> marked;

  // UDFORM1: second distinguished vertex (its closing letter starts the word).
  int special_vertex = -1;
  // UDFORM2: deeper endpoint of the root edge.
  int root_edge_child = -1;
  // UDFORM3: deep endpoint of the distinguished oriented edge, and whether the
  // orientation points toward the root. -1 when the tree has no edge.
  int corner_edge_vertex = -1;
  bool corner_edge_toward_root = false;
  // PETAL: per-vertex ordered items, child id or -1 for a petal. Unused (all
  // empty) in the other variants.
  std::vector<std::vector<int>> items;

  bool operator==(const MarkedTree&) const = default;

  std::size_t size() const { return children.size(); }
};

namespace detail {

struct Contour {
  std::vector<Letter> w;
  std::vector<int> open_at;   // vertex -> index of its U (-1 for the root)
  std::vector<int> close_at;  // vertex -> index of its D (-1 for the root)
};

inline void contour_walk(const MarkedTree& t, int v, Contour& c) {
  for (int ch : t.children[v]) {
    c.open_at[ch] = static_cast<int>(c.w.size());
    c.w.push_back(Letter::U);
    contour_walk(t, ch, c);
    c.close_at[ch] = static_cast<int>(c.w.size());
    c.w.push_back(t.marked[ch] ? Letter::D_MARK : Letter::D_PLAIN);
  }
}

inline std::vector<Letter> rotate(const std::vector<Letter>& w, std::size_t i) {
  std::vector<Letter> out(w.begin() + static_cast<long>(i), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(i));
  return out;
}

[[noreturn]] inline void bad_word(const std::string& what, std::size_t index) {
  throw std::invalid_argument("word_to_tree: " + what + " at index " + std::to_string(index));
}

}  // namespace detail

inline DressedWord tree_to_word(const MarkedTree& t, WordForm form) {
  if (form == WordForm::PETAL) {
    std::vector<Letter> w;
    auto walk = [&](auto&& self, int v) -> void {
      for (int item : t.items[v]) {
        if (item < 0) {
          w.push_back(Letter::E);
        } else {
          w.push_back(Letter::U);
          self(self, item);
          w.push_back(t.marked[item] ? Letter::D_MARK : Letter::D_PLAIN);
        }
      }
    };
    walk(walk, 0);
    return {std::move(w)};
  }

  detail::Contour c;
  c.open_at.assign(t.size(), -1);
  c.close_at.assign(t.size(), -1);
  detail::contour_walk(t, 0, c);
  std::size_t cut = 0;
  switch (form) {
    case WordForm::UDFORM1:
      cut = static_cast<std::size_t>(c.close_at[t.special_vertex]);
      break;
    case WordForm::UDFORM2:
      cut = static_cast<std::size_t>(c.open_at[t.root_edge_child]) + 1;
      break;
    default:  // UDFORM3
      if (t.corner_edge_vertex < 0) return {{}};
      cut = static_cast<std::size_t>(t.corner_edge_toward_root
                                         ? c.close_at[t.corner_edge_vertex]
                                         : c.open_at[t.corner_edge_vertex]);
      break;
  }
  if (cut >= c.w.size()) cut = 0;
  return {detail::rotate(c.w, cut)};
}

inline MarkedTree word_to_tree(const DressedWord& word, WordForm form) {
  const auto& w = word.letters;
  const std::size_t L = w.size();

  for (std::size_t i = 0; i + 1 < L; ++i) {
    if (w[i] == Letter::U && w[i + 1] == Letter::D_PLAIN)
      detail::bad_word("forbidden factor U D_PLAIN", i + 1);
  }

  if (form == WordForm::PETAL) {
    MarkedTree t;
    t.children.push_back({});
    t.marked.push_back(0);
    t.items.push_back({});
    std::vector<int> stack = {0};
    for (std::size_t i = 0; i < L; ++i) {
      switch (w[i]) {
        case Letter::U: {
          const int v = static_cast<int>(t.size());
          t.children.push_back({});
          t.marked.push_back(0);
          t.items.push_back({});
          t.children[stack.back()].push_back(v);
          t.items[stack.back()].push_back(v);
          stack.push_back(v);
          break;
        }
        case Letter::E:
          t.items[stack.back()].push_back(-1);
          break;
        default: {
          if (stack.size() == 1) detail::bad_word("negative height", i);
          const int v = stack.back();
          stack.pop_back();
          t.marked[v] = (w[i] == Letter::D_MARK);
          break;
        }
      }
    }
    if (stack.size() != 1) detail::bad_word("unbalanced word", L);
    return t;
  }

  // Forms 1-3: balanced bridges over {U, D_MARK, D_PLAIN}.
  long sum = 0;
  for (std::size_t i = 0; i < L; ++i) {
    if (w[i] == Letter::E) detail::bad_word("letter E outside petal form", i);
    sum += detail::increment(w[i]);
  }
  if (sum != 0) detail::bad_word("unbalanced word", L);
  if (form == WordForm::UDFORM1) {
    if (L == 0 || w[0] != Letter::D_MARK) detail::bad_word("expected a marked down letter", 0);
  }
  if (form == WordForm::UDFORM2) {
    if (L == 0 || w[L - 1] != Letter::U) detail::bad_word("expected a final up letter", L - 1);
  }

  MarkedTree t;
  t.children.push_back({});
  t.marked.push_back(0);
  if (L == 0) return t;  // UDFORM3 with m = 1/2

  // Rotate at the first prefix minimum to obtain a nonnegative excursion.
  long h = 0, best = 0;
  std::size_t tstar = 0;
  for (std::size_t i = 0; i < L; ++i) {
    h += detail::increment(w[i]);
    if (h < best) {
      best = h;
      tstar = i + 1;
    }
  }
  const std::vector<Letter> rot = detail::rotate(w, tstar % L);
  const std::size_t j0 = (L - tstar) % L;  // position of the original w[0]

  std::vector<int> opened(L, -1), closed(L, -1);
  std::vector<int> stack = {0};
  for (std::size_t i = 0; i < L; ++i) {
    if (rot[i] == Letter::U) {
      const int v = static_cast<int>(t.size());
      t.children.push_back({});
      t.marked.push_back(0);
      t.children[stack.back()].push_back(v);
      opened[i] = v;
      stack.push_back(v);
    } else {
      if (stack.size() == 1) detail::bad_word("negative height", i);
      const int v = stack.back();
      stack.pop_back();
      t.marked[v] = (rot[i] == Letter::D_MARK);
      closed[i] = v;
    }
  }
  if (stack.size() != 1) detail::bad_word("unbalanced word", L);

  switch (form) {
    case WordForm::UDFORM1:
      t.special_vertex = closed[j0];
      break;
    case WordForm::UDFORM2:
      t.root_edge_child = opened[(j0 + L - 1) % L];
      break;
    default:
      if (opened[j0] >= 0) {
        t.corner_edge_vertex = opened[j0];
        t.corner_edge_toward_root = false;
      } else {
        t.corner_edge_vertex = closed[j0];
        t.corner_edge_toward_root = true;
      }
      break;
  }
  return t;
}

// ---------------------------------------------------------------------------
// Independent tree-side enumerators (used to cross-check the codings).
// ---------------------------------------------------------------------------

namespace detail {

using PlaneShape = std::vector<std::vector<int>>;  // children lists, preorder ids

inline std::vector<PlaneShape> plane_tree_shapes(int vertices) {
  std::vector<PlaneShape> out;
  if (vertices <= 0) return out;
  if (vertices == 1) {
    out.push_back({{}});
    return out;
  }
  // Ordered forests over `total` vertices, as lists of shapes.
  auto forests = [](auto&& self, int total) -> std::vector<std::vector<PlaneShape>> {
    std::vector<std::vector<PlaneShape>> res;
    if (total == 0) {
      res.push_back({});
      return res;
    }
    for (int a = 1; a <= total; ++a) {
      for (const PlaneShape& first : plane_tree_shapes(a)) {
        for (const auto& rest : self(self, total - a)) {
          std::vector<PlaneShape> f;
          f.push_back(first);
          f.insert(f.end(), rest.begin(), rest.end());
          res.push_back(std::move(f));
        }
      }
    }
    return res;
  };
  for (const auto& f : forests(forests, vertices - 1)) {
    PlaneShape s(static_cast<std::size_t>(vertices));
    int offset = 1;
    for (const PlaneShape& sub : f) {
      s[0].push_back(offset);
      for (std::size_t u = 0; u < sub.size(); ++u) {
        for (int ch : sub[u]) s[static_cast<std::size_t>(offset) + u].push_back(offset + ch);
      }
      offset += static_cast<int>(sub.size());
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<int> shape_parents(const PlaneShape& s) {
  std::vector<int> par(s.size(), -1);
  for (std::size_t v = 0; v < s.size(); ++v) {
    for (int ch : s[v]) par[static_cast<std::size_t>(ch)] = static_cast<int>(v);
  }
  return par;
}

// Subsets of {1, ..., n-1} containing `required`, of the given size, as
// marked flags.
template <class F>
inline void for_each_mark_set(std::size_t n, const std::vector<char>& required, long size,
                              F&& fn) {
  std::vector<char> marked(n, 0);
  long need = size;
  for (std::size_t v = 1; v < n; ++v) {
    if (required[v]) {
      marked[v] = 1;
      --need;
    }
  }
  if (need < 0) return;
  std::vector<std::size_t> free_vs;
  for (std::size_t v = 1; v < n; ++v) {
    if (!required[v]) free_vs.push_back(v);
  }
  const std::vector<char>& view = marked;
  auto rec = [&](auto&& self, std::size_t idx, long left) -> void {
    if (left == 0) {
      fn(view);
      return;
    }
    if (idx >= free_vs.size() || static_cast<long>(free_vs.size() - idx) < left) return;
    marked[free_vs[idx]] = 1;
    self(self, idx + 1, left - 1);
    marked[free_vs[idx]] = 0;
    self(self, idx + 1, left);
  };
  rec(rec, 0, need);
}

}  // namespace detail

// All marked trees of the given form and parameters, built independently of
// the word machinery. Vertex ids are preorder, matching word_to_tree.
inline std::vector<MarkedTree> enumerate_marked_trees(WordForm form, const WordParams& p) {
  std::vector<MarkedTree> out;
  const long k = p.k;
  if (k < 0) return out;

  long edges;
  if (form == WordForm::UDFORM3) {
    if (!p.m.is_half_odd()) return out;
    edges = detail::as_count(p.m.twice - 1);
  } else {
    if (!p.m.is_integer()) return out;
    edges = detail::as_count(p.m.twice);
  }
  if (edges < 0) return out;

  const int n = static_cast<int>(edges) + 1;
  for (const auto& shape : detail::plane_tree_shapes(n)) {
    const std::size_t N = shape.size();
    const auto parent = detail::shape_parents(shape);
    std::vector<char> leaves(N, 0);
    for (std::size_t v = 1; v < N; ++v) leaves[v] = shape[v].empty();
    // Preorder ids make the last root subtree the final contiguous block.
    const int last_sub = shape[0].empty() ? static_cast<int>(N) : shape[0].back();

    MarkedTree base;
    base.children = shape;
    base.marked.assign(N, 0);

    if (form == WordForm::UDFORM1) {
      detail::for_each_mark_set(N, leaves, k + 1, [&](const std::vector<char>& marked) {
        for (int v2 = last_sub; v2 < static_cast<int>(N); ++v2) {
          if (!marked[static_cast<std::size_t>(v2)]) continue;
          MarkedTree t = base;
          t.marked = marked;
          t.special_vertex = v2;
          out.push_back(std::move(t));
        }
      });
    } else if (form == WordForm::UDFORM2) {
      for (int v = last_sub; v < static_cast<int>(N); ++v) {
        std::vector<char> required = leaves;
        required[static_cast<std::size_t>(v)] = 0;  // far endpoint may stay unmarked
        detail::for_each_mark_set(N, required, k, [&](const std::vector<char>& marked) {
          MarkedTree t = base;
          t.marked = marked;
          t.root_edge_child = v;
          out.push_back(std::move(t));
        });
      }
    } else {
      // UDFORM3: distinguished oriented edge, three cases.
      struct EdgeOpt {
        int v;
        bool down;
      };
      std::vector<EdgeOpt> opts;
      if (edges == 0) {
        if (k == 0) out.push_back(base);  // bare vertex, no edge
        continue;
      }
      opts.push_back({shape[0][0], false});  // away from the root, at the root
      for (int v = last_sub; v < static_cast<int>(N); ++v) {
        if (parent[static_cast<std::size_t>(v)] != 0) opts.push_back({v, false});
        opts.push_back({v, true});
      }
      for (const EdgeOpt& e : opts) {
        std::vector<char> required = leaves;
        if (e.down) required[static_cast<std::size_t>(e.v)] = 0;
        detail::for_each_mark_set(N, required, k, [&](const std::vector<char>& marked) {
          MarkedTree t = base;
          t.marked = marked;
          t.corner_edge_vertex = e.v;
          t.corner_edge_toward_root = e.down;
          out.push_back(std::move(t));
        });
      }
    }
  }
  return out;
}

// All petal trees with at most the given numbers of tree edges and petals.
// Marking rule: the root is unmarked; a non-root vertex with no items at all
// must be marked (its closing letter would otherwise follow its opening one).
inline std::vector<MarkedTree> enumerate_petal_trees(long max_edges, long max_petals) {
  // Item-list skeletons are built recursively; ids are preorder.
  struct Skel {
    std::vector<std::vector<int>> items;
    std::vector<std::vector<int>> children;
  };
  auto build = [](auto&& self, long edge_budget, long petal_budget) -> std::vector<Skel> {
    std::vector<Skel> res;
    // Item lists at the root of this fragment: sequences of petals and
    // subtrees. Enumerate by first item.
    res.push_back({{{}}, {{}}});  // no items
    std::vector<Skel> singles;
    if (petal_budget > 0) {
      for (const Skel& rest : self(self, edge_budget, petal_budget - 1)) {
        Skel s = rest;
        s.items[0].insert(s.items[0].begin(), -1);
        res.push_back(std::move(s));
      }
    }
    if (edge_budget > 0) {
      for (long sub_e = 0; sub_e <= edge_budget - 1; ++sub_e) {
        for (long sub_p = 0; sub_p <= petal_budget; ++sub_p) {
          for (const Skel& sub : self(self, sub_e, sub_p)) {
            if (static_cast<long>(sub.items.size()) - 1 != sub_e) continue;
            long sub_petals = 0;
            for (const auto& it : sub.items)
              for (int x : it) sub_petals += (x == -1);
            if (sub_petals != sub_p) continue;
            for (const Skel& rest :
                 self(self, edge_budget - 1 - sub_e, petal_budget - sub_p)) {
              Skel s;
              const int off = 1;
              const int sub_n = static_cast<int>(sub.items.size());
              s.items.resize(1);
              s.children.resize(1);
              s.items[0].push_back(off);
              s.children[0].push_back(off);
              for (int u = 0; u < sub_n; ++u) {
                std::vector<int> it, ch;
                for (int x : sub.items[static_cast<std::size_t>(u)])
                  it.push_back(x == -1 ? -1 : x + off);
                for (int x : sub.children[static_cast<std::size_t>(u)]) ch.push_back(x + off);
                s.items.push_back(std::move(it));
                s.children.push_back(std::move(ch));
              }
              const int off2 = 1 + sub_n;
              for (std::size_t u = 0; u < rest.items.size(); ++u) {
                std::vector<int> it, ch;
                for (int x : rest.items[u]) {
                  if (x == -1) {
                    it.push_back(-1);
                  } else {
                    it.push_back(x == 0 ? 0 : x + off2 - 1);
                  }
                }
                for (int x : rest.children[u]) ch.push_back(x == 0 ? 0 : x + off2 - 1);
                if (u == 0) {
                  for (int x : it) s.items[0].push_back(x);
                  for (int x : ch) s.children[0].push_back(x);
                } else {
                  s.items.push_back(std::move(it));
                  s.children.push_back(std::move(ch));
                }
              }
              res.push_back(std::move(s));
            }
          }
        }
      }
    }
    return res;
  };

  std::vector<MarkedTree> out;
  std::vector<Skel> skels;
  {
    // Deduplicate: the generator above can produce the same skeleton through
    // different budget splits.
    std::vector<Skel> raw = build(build, max_edges, max_petals);
    std::vector<std::vector<std::vector<int>>> seen;
    for (Skel& s : raw) {
      if (std::find(seen.begin(), seen.end(), s.items) == seen.end()) {
        seen.push_back(s.items);
        skels.push_back(std::move(s));
      }
    }
  }
  for (const Skel& s : skels) {
    const std::size_t N = s.items.size();
    std::vector<char> required(N, 0);
    for (std::size_t v = 1; v < N; ++v) required[v] = s.items[v].empty();
    for (long size = 0; size <= static_cast<long>(N) - 1; ++size) {
      detail::for_each_mark_set(N, required, size, [&](const std::vector<char>& marked) {
        MarkedTree t;
        t.children = s.children;
        t.items = s.items;
        t.marked = marked;
        out.push_back(std::move(t));
      });
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decorated tree families.
// ---------------------------------------------------------------------------

// A labeled typed plane tree together with one marked path per vertex. The
// marked increments of the path at vertex i are the types of its children in
// planar order (+1 for type 1, 0 for type 0).
struct DecoratedMember {
  int root = 0;
  std::vector<std::vector<int>> children;  // by label
  std::vector<int> type;                   // 0 or 1, by label
  std::vector<MarkedPath> path;            // by label

  bool operator==(const DecoratedMember&) const = default;
};

// Exhaustive enumeration of the family with root type eps and per-vertex
// lengths 2 ms[i]. A vertex with ms[i] = 0 must have type 1, no children and
// the empty path.
inline std::vector<DecoratedMember> enumerate_decorated_families(int eps,
                                                                 const std::vector<HalfInt>& ms,
                                                                 std::size_t size_cap) {
  if (ms.size() > size_cap)
    throw std::invalid_argument("enumerate_decorated_families: size cap exceeded");
  std::vector<DecoratedMember> out;
  const std::size_t n = ms.size();
  if (n == 0) return out;

  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(i);

  for (const auto& shape : detail::plane_tree_shapes(static_cast<int>(n))) {
    std::vector<int> perm(labels);
    std::sort(perm.begin(), perm.end());
    do {
      // perm[pos] = label of the vertex at preorder position pos.
      DecoratedMember base;
      base.root = perm[0];
      base.children.assign(n, {});
      base.type.assign(n, 0);
      base.path.assign(n, {});
      for (std::size_t pos = 0; pos < n; ++pos) {
        for (int ch : shape[pos]) {
          base.children[static_cast<std::size_t>(perm[pos])].push_back(
              perm[static_cast<std::size_t>(ch)]);
        }
      }

      // Types: root fixed to eps, zero-length vertices fixed to 1.
      std::vector<std::size_t> free_types;
      bool feasible = true;
      for (std::size_t v = 0; v < n; ++v) {
        if (ms[v].twice == 0) {
          base.type[v] = 1;
          if (!base.children[v].empty()) feasible = false;
          if (static_cast<int>(v) == base.root && eps != 1) feasible = false;
        } else if (static_cast<int>(v) == base.root) {
          base.type[v] = eps;
        } else {
          free_types.push_back(v);
        }
      }
      if (!feasible) continue;

      auto types_rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == free_types.size()) {
          // Enumerate the path products.
          std::vector<std::vector<MarkedPath>> choices(n);
          for (std::size_t v = 0; v < n; ++v) {
            if (ms[v].twice == 0) {
              choices[v] = {MarkedPath{}};
              continue;
            }
            std::vector<int> marks;
            for (int ch : base.children[v]) marks.push_back(base.type[static_cast<std::size_t>(ch)]);
            choices[v] = enumerate_marked_paths(static_cast<long>(Int(ms[v].twice)),
                                                base.type[v], marks);
            if (choices[v].empty()) return;
          }
          auto prod_rec = [&](auto&& pself, std::size_t v) -> void {
            if (v == n) {
              out.push_back(base);
              return;
            }
            for (const MarkedPath& p : choices[v]) {
              base.path[v] = p;
              pself(pself, v + 1);
            }
          };
          prod_rec(prod_rec, 0);
          return;
        }
        for (int ty : {0, 1}) {
          base.type[free_types[idx]] = ty;
          self(self, idx + 1);
        }
      };
      types_rec(types_rec, 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace tightmaps
