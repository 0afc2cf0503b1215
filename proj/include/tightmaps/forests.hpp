#pragma once

#include "tightmaps/numeric.hpp"
#include "tightmaps/report.hpp"

#include <array>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tightmaps {

// ---------------------------------------------------------------------------
// Labeled plane forests with one or two vertex types.
//
// A type array lists, for each vertex i = 1..n, its own type followed by the
// types of its children in planar order, and in row 0 the types of the tree
// roots behind a super-root of type O. Counts depend on the array only
// through a handful of statistics.
// ---------------------------------------------------------------------------

struct TypeArray {
  // rows[i][j] = type of the j-th child of i for j >= 1; rows[i][0] is the
  // own type of i ('A' or 'B'), except rows[0][0] which is 'O'.
  std::vector<std::string> rows;
};

struct ForestStats {
  long n = 0;   // labeled vertices
  long k0 = 0;  // trees
  long a = 0, b = 0;
  long aO = 0, bO = 0;  // roots of each type
  long aB = 0, bA = 0;  // vertices of one type with a parent of the other
};

// Recomputes all statistics and checks both counting identities: the number
// of vertices of each type must match the number of child slots asking for
// that type. Throws naming the violated relation.
inline ForestStats validate_type_array(const TypeArray& w) {
  if (w.rows.empty() || w.rows[0].empty() || w.rows[0][0] != 'O')
    throw std::invalid_argument("type array: row 0 must start with the super-root type O");
  ForestStats st;
  st.n = static_cast<long>(w.rows.size()) - 1;
  st.k0 = static_cast<long>(w.rows[0].size()) - 1;
  long a_slots = 0, b_slots = 0;
  for (std::size_t i = 0; i < w.rows.size(); ++i) {
    const std::string& row = w.rows[i];
    if (row.empty()) throw std::invalid_argument("type array: empty row");
    for (std::size_t j = (i == 0 ? 1 : 0); j < row.size(); ++j) {
      if (row[j] != 'A' && row[j] != 'B')
        throw std::invalid_argument("type array: entries must be A or B");
    }
    if (i == 0) {
      for (std::size_t j = 1; j < row.size(); ++j) (row[j] == 'A' ? st.aO : st.bO)++;
    } else {
      (row[0] == 'A' ? st.a : st.b)++;
      for (std::size_t j = 1; j < row.size(); ++j) {
        (row[j] == 'A' ? a_slots : b_slots)++;
        if (row[0] == 'B' && row[j] == 'A') st.aB++;
        if (row[0] == 'A' && row[j] == 'B') st.bA++;
      }
    }
  }
  a_slots += st.aO;
  b_slots += st.bO;
  if (st.a != a_slots)
    throw std::invalid_argument("type array: A-type count mismatch (" + std::to_string(st.a) +
                                " own-type entries vs " + std::to_string(a_slots) +
                                " child slots)");
  if (st.b != b_slots)
    throw std::invalid_argument("type array: B-type count mismatch (" + std::to_string(st.b) +
                                " own-type entries vs " + std::to_string(b_slots) +
                                " child slots)");
  return st;
}

// Forests with n vertices, vertex i having k[i-1] children and vertex 1 in
// the first tree. The number of trees is forced to n - sum(k).
inline Int count_onetype(long n, const std::vector<long>& k) {
  if (n <= 0 || static_cast<long>(k.size()) != n)
    throw std::invalid_argument("count_onetype: need one child count per vertex");
  long total = 0;
  for (long ki : k) total += ki;
  if (total >= n) return Int(0);
  return factorial(n - 1);
}

inline Int count_twotype(const TypeArray& w) {
  const ForestStats st = validate_type_array(w);
  if (st.a == 0 && st.b == 0) return Int(1);
  if (st.b == 0) return Int(st.aO) * factorial(st.a - 1);
  if (st.a == 0) return Int(st.bO) * factorial(st.b - 1);
  return Int(st.aO * st.bO + st.aO * st.bA + st.aB * st.bO) * factorial(st.a - 1) *
         factorial(st.b - 1);
}

// Same family restricted to forests whose first tree contains vertex 1;
// vertex 1 must have type A. The three cases are keyed on the type of the
// first root.
inline Int count_twotype_constrained(const TypeArray& w) {
  const ForestStats st = validate_type_array(w);
  if (st.n < 1 || w.rows[1][0] != 'A')
    throw std::invalid_argument("count_twotype_constrained: vertex 1 must have type A");
  if (st.k0 == 0) return Int(0);  // no trees to contain vertex 1
  if (st.b == 0) return factorial(st.a - 1);
  if (w.rows[0][1] == 'A') return Int(st.bO + st.bA) * factorial(st.a - 1) * factorial(st.b - 1);
  return Int(st.aB) * factorial(st.a - 1) * factorial(st.b - 1);
}

// Preorder serialization of a labeled typed plane forest: one (label, type,
// child count) triple per vertex, trees in order.
struct Forest {
  std::vector<std::array<int, 3>> cells;

  bool operator==(const Forest&) const = default;
  bool operator<(const Forest& o) const { return cells < o.cells; }
};

// Index of the tree containing the given label, or -1 if absent.
inline int tree_index_of(const Forest& f, int label) {
  int tree = -1;
  std::vector<int> remaining;
  for (const auto& c : f.cells) {
    while (!remaining.empty() && remaining.back() == 0) remaining.pop_back();
    if (remaining.empty()) {
      ++tree;
    } else {
      --remaining.back();
    }
    if (c[0] == label) return tree;
    remaining.push_back(c[2]);
  }
  return -1;
}

// Exhaustive generation by recursive placement of labels into child slots,
// super-root first, depth first. With `constrained`, keeps only forests whose
// first tree contains vertex 1.
inline std::vector<Forest> enumerate_forests(const TypeArray& w, bool constrained) {
  const ForestStats st = validate_type_array(w);
  if (st.n > 8) throw std::invalid_argument("enumerate_forests: size cap exceeded");
  std::vector<Forest> out;
  std::vector<char> used(static_cast<std::size_t>(st.n) + 1, 0);
  Forest cur;
  // Agenda of (vertex, next slot index); vertex 0 is the super-root.
  std::vector<std::pair<int, std::size_t>> agenda = {{0, 1}};
  auto rec = [&](auto&& self) -> void {
    if (agenda.empty()) {
      // All slots filled; a forest must also use every label (arrays with no
      // trees but positive n fill nothing).
      if (static_cast<long>(cur.cells.size()) != st.n) return;
      if (!constrained || tree_index_of(cur, 1) == 0) out.push_back(cur);
      return;
    }
    auto [v, j] = agenda.back();
    const std::string& row = w.rows[static_cast<std::size_t>(v)];
    if (j >= row.size()) {
      agenda.pop_back();
      self(self);
      agenda.push_back({v, j});
      return;
    }
    const char want = row[j];
    agenda.back().second = j + 1;
    for (long i = 1; i <= st.n; ++i) {
      if (used[static_cast<std::size_t>(i)] || w.rows[static_cast<std::size_t>(i)][0] != want)
        continue;
      used[static_cast<std::size_t>(i)] = 1;
      cur.cells.push_back({static_cast<int>(i), want,
                           static_cast<int>(w.rows[static_cast<std::size_t>(i)].size()) - 1});
      agenda.push_back({static_cast<int>(i), 1});
      self(self);
      agenda.pop_back();
      cur.cells.pop_back();
      used[static_cast<std::size_t>(i)] = 0;
    }
    agenda.back().second = j;
  };
  rec(rec);
  return out;
}

// ---------------------------------------------------------------------------
// Identity suite: closed forms against the brute-force enumerator.
// ---------------------------------------------------------------------------

namespace detail {

// All consistent type arrays with n labeled vertices.
template <class F>
inline void for_each_consistent_array(long n, F&& fn) {
  for_each_weak_composition(n, static_cast<std::size_t>(n) + 1, [&](const std::vector<long>& ks) {
    // ks[0] = number of trees, ks[i] = children of vertex i.
    const long own_lim = 1L << n;
    for (long own = 0; own < own_lim; ++own) {
      const long a_own = n - __builtin_popcountl(static_cast<unsigned long>(own));
      for (long slots = 0; slots < own_lim; ++slots) {
        if (n - __builtin_popcountl(static_cast<unsigned long>(slots)) != a_own) continue;
        TypeArray w;
        w.rows.resize(static_cast<std::size_t>(n) + 1);
        std::size_t next = 0;
        auto slot_char = [&]() {
          const char c = (slots >> next) & 1 ? 'B' : 'A';
          ++next;
          return c;
        };
        w.rows[0] = "O";
        for (long j = 0; j < ks[0]; ++j) w.rows[0].push_back(slot_char());
        for (long i = 1; i <= n; ++i) {
          std::string row(1, (own >> (i - 1)) & 1 ? 'B' : 'A');
          for (long j = 0; j < ks[static_cast<std::size_t>(i)]; ++j) row.push_back(slot_char());
          w.rows[static_cast<std::size_t>(i)] = std::move(row);
        }
        fn(w);
      }
    }
  });
}

inline std::string array_str(const TypeArray& w) {
  std::string s;
  for (const auto& row : w.rows) {
    if (!s.empty()) s.push_back('|');
    s += row;
  }
  return s;
}

}  // namespace detail

// Checks, for every consistent array with up to n_max vertices: the general
// and constrained closed forms against brute force, the partition of the
// general count by the tree containing vertex 1, uniqueness of serialized
// forests, and the one-type specialization.
inline CheckReport verify_forest_identities(long n_max) {
  CheckReport rep;
  rep.name = "forests";
  for (long n = 0; n <= n_max; ++n) {
    detail::for_each_consistent_array(n, [&](const TypeArray& w) {
      const auto all = enumerate_forests(w, false);
      std::set<Forest> distinct(all.begin(), all.end());
      rep.expect_eq(Int(static_cast<long>(all.size())), Int(static_cast<long>(distinct.size())),
                    [&] { return "dedup " + detail::array_str(w); });
      rep.expect_eq(count_twotype(w), Int(static_cast<long>(all.size())),
                    [&] { return "general " + detail::array_str(w); });

      if (n >= 1 && w.rows[1][0] == 'A') {
        const auto first = enumerate_forests(w, true);
        rep.expect_eq(count_twotype_constrained(w), Int(static_cast<long>(first.size())),
                      [&] { return "constrained " + detail::array_str(w); });

        // Partition by the tree holding vertex 1: each block is counted by
        // the constrained formula keyed on that tree's root type.
        const ForestStats st = validate_type_array(w);
        if (st.b > 0) {
          std::vector<long> block(static_cast<std::size_t>(st.k0), 0);
          for (const auto& f : all) block[static_cast<std::size_t>(tree_index_of(f, 1))]++;
          for (long j = 0; j < st.k0; ++j) {
            const Int want = w.rows[0][static_cast<std::size_t>(j) + 1] == 'A'
                                 ? Int(st.bO + st.bA) * factorial(st.a - 1) * factorial(st.b - 1)
                                 : Int(st.aB) * factorial(st.a - 1) * factorial(st.b - 1);
            rep.expect_eq(want, Int(block[static_cast<std::size_t>(j)]), [&] {
              return "partition tree " + std::to_string(j) + " of " + detail::array_str(w);
            });
          }
        }
      }
    });

    // One-type counts via all-A arrays, constrained to vertex 1 first.
    if (n >= 1) {
      for_each_weak_composition(n, static_cast<std::size_t>(n) + 1,
                                [&](const std::vector<long>& ks) {
                                  TypeArray w;
                                  w.rows.resize(static_cast<std::size_t>(n) + 1);
                                  w.rows[0] = "O" + std::string(static_cast<std::size_t>(ks[0]), 'A');
                                  std::vector<long> kvec;
                                  for (long i = 1; i <= n; ++i) {
                                    w.rows[static_cast<std::size_t>(i)] =
                                        std::string(static_cast<std::size_t>(ks[i]) + 1, 'A');
                                    kvec.push_back(ks[static_cast<std::size_t>(i)]);
                                  }
                                  const auto first = enumerate_forests(w, true);
                                  rep.expect_eq(count_onetype(n, kvec),
                                                Int(static_cast<long>(first.size())), [&] {
                                                  return "one-type " + detail::array_str(w);
                                                });
                                });
    }
  }
  return rep;
}

}  // namespace tightmaps
