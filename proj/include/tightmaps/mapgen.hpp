#pragma once

#include "tightmaps/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightmaps {

// ---------------------------------------------------------------------------
// Ground-truth map oracle.
//
// A candidate map on darts 1..D is a pair of permutations: phi rotates each
// labeled face (cycles (1..d_1)(d_1+1..d_1+d_2)... in label order) and alpha
// is a fixed-point-free involution pairing darts into edges. The vertex
// permutation is derived as sigma = alpha o phi. A map is accepted when it is
// connected and V - E + F = 2. Boundaries of length 0 become labels assigned
// injectively to vertices; the tight filter insists every vertex of degree 1
// carries a label.
// ---------------------------------------------------------------------------

struct dart_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration ceiling on the number of darts; (cap-1)!! involutions are
// visited in the worst case. Overridable via TIGHTMAPS_DART_CAP.
inline long dart_cap() {
  if (const char* env = std::getenv("TIGHTMAPS_DART_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 16;
}

namespace detail {

// Completes a partial fixed-point-free involution (0 = unpaired) and calls fn
// on every completion. alpha is 1-indexed; alpha[0] is unused.
template <class F>
inline void complete_involutions(std::vector<int>& alpha, F&& fn) {
  int i = 1;
  const int n = static_cast<int>(alpha.size()) - 1;
  while (i <= n && alpha[i] != 0) ++i;
  if (i > n) {
    const std::vector<int>& done = alpha;
    fn(done);
    return;
  }
  for (int j = i + 1; j <= n; ++j) {
    if (alpha[j] != 0) continue;
    alpha[i] = j;
    alpha[j] = i;
    complete_involutions(alpha, fn);
    alpha[i] = 0;
    alpha[j] = 0;
  }
}

struct Scanner {
  std::vector<int> phi;   // 1-indexed successor-in-face
  long darts = 0;
  long faces = 0;

  // scratch
  std::vector<int> sigma;
  std::vector<int> comp;
  std::vector<char> seen;

  explicit Scanner(const std::vector<long>& positive_degrees) {
    for (long d : positive_degrees) darts += d;
    phi.assign(static_cast<std::size_t>(darts) + 1, 0);
    long next = 1;
    for (long d : positive_degrees) {
      for (long j = 0; j < d; ++j)
        phi[static_cast<std::size_t>(next + j)] = static_cast<int>(next + (j + 1) % d);
      next += d;
      ++faces;
    }
    sigma.assign(phi.size(), 0);
    comp.assign(phi.size(), 0);
    seen.assign(phi.size(), 0);
  }

  int find(int x) {
    while (comp[static_cast<std::size_t>(x)] != x) {
      comp[static_cast<std::size_t>(x)] =
          comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
      x = comp[static_cast<std::size_t>(x)];
    }
    return x;
  }

  // Returns the number of vertices, or -1 if the map is rejected
  // (disconnected or not of genus 0). Vertex degrees land in `degrees`.
  long scan(const std::vector<int>& alpha, std::vector<long>& degrees) {
    const long D = darts;
    for (long d = 1; d <= D; ++d)
      sigma[static_cast<std::size_t>(d)] =
          alpha[static_cast<std::size_t>(phi[static_cast<std::size_t>(d)])];
    // Vertex cycles.
    degrees.clear();
    std::fill(seen.begin(), seen.end(), 0);
    long V = 0;
    for (long d = 1; d <= D; ++d) {
      if (seen[static_cast<std::size_t>(d)]) continue;
      ++V;
      long len = 0;
      int x = static_cast<int>(d);
      while (!seen[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = 1;
        ++len;
        x = sigma[static_cast<std::size_t>(x)];
      }
      degrees.push_back(len);
    }
    if (V - D / 2 + faces != 2) return -1;
    // Connectivity of the group generated by phi and alpha.
    for (long d = 1; d <= D; ++d) comp[static_cast<std::size_t>(d)] = static_cast<int>(d);
    long parts = D;
    auto unite = [&](int x, int y) {
      x = find(x);
      y = find(y);
      if (x != y) {
        comp[static_cast<std::size_t>(x)] = y;
        --parts;
      }
    };
    for (long d = 1; d <= D; ++d) {
      unite(static_cast<int>(d), phi[static_cast<std::size_t>(d)]);
      unite(static_cast<int>(d), alpha[static_cast<std::size_t>(d)]);
    }
    if (parts != 1) return -1;
    return V;
  }
};

// Number of ways to assign `labels` distinct labels to distinct vertices;
// with `tight`, every degree-1 vertex must receive one.
inline Int count_markings(long vertices, const std::vector<long>& degrees, long labels,
                          bool tight) {
  if (labels > vertices) return Int(0);
  if (!tight) {
    Int ways(1);
    for (long i = 0; i < labels; ++i) ways *= Int(vertices - i);
    return ways;
  }
  long deg1 = 0;
  for (long d : degrees) deg1 += (d == 1);
  if (labels < deg1) return Int(0);
  return rat_to_int(binom(Int(vertices - deg1), labels - deg1)) * factorial(labels);
}

inline void split_spec(const std::vector<long>& boundary_degrees, std::vector<long>& positives,
                       long& zeros) {
  zeros = 0;
  positives.clear();
  for (long d : boundary_degrees) {
    if (d < 0) throw std::invalid_argument("oracle: negative boundary length");
    if (d == 0) {
      ++zeros;
    } else {
      positives.push_back(d);
    }
  }
  if (positives.empty()) throw std::invalid_argument("oracle: all boundary lengths are zero");
}

}  // namespace detail

// Diagnostic scan of one candidate: alpha is a 1-indexed fixed-point-free
// involution array of the total positive degree.
struct MapScan {
  bool accepted = false;
  long vertices = 0;
  std::vector<long> vertex_degrees;
};

inline MapScan scan_map(const std::vector<long>& positive_degrees,
                        const std::vector<int>& alpha) {
  detail::Scanner sc(positive_degrees);
  if (static_cast<long>(alpha.size()) != sc.darts + 1)
    throw std::invalid_argument("scan_map: alpha size mismatch");
  MapScan out;
  const long v = sc.scan(alpha, out.vertex_degrees);
  out.accepted = v >= 0;
  out.vertices = v >= 0 ? v : 0;
  if (v < 0) out.vertex_degrees.clear();
  return out;
}

// All fixed-point-free involutions of {1..n_darts} as 1-indexed arrays.
inline std::vector<std::vector<int>> enumerate_involutions(long n_darts) {
  if (n_darts <= 0 || n_darts % 2 != 0)
    throw std::invalid_argument("enumerate_involutions: need a positive even dart count");
  if (n_darts > dart_cap())
    throw dart_cap_error("enumerate_involutions: dart cap exceeded: " +
                         std::to_string(n_darts) + " > " + std::to_string(dart_cap()));
  std::vector<std::vector<int>> out;
  std::vector<int> alpha(static_cast<std::size_t>(n_darts) + 1, 0);
  detail::complete_involutions(alpha, [&](const std::vector<int>& a) { out.push_back(a); });
  return out;
}

// Sum over accepted maps, restricted to involutions pairing dart 1 with the
// given partner, of the number of valid label assignments.
inline Int oracle_accepted(const std::vector<long>& boundary_degrees, bool tight,
                           long partner_of_first) {
  std::vector<long> positives;
  long zeros = 0;
  detail::split_spec(boundary_degrees, positives, zeros);
  detail::Scanner sc(positives);
  if (sc.darts > dart_cap())
    throw dart_cap_error("oracle: dart cap exceeded: " + std::to_string(sc.darts) + " > " +
                         std::to_string(dart_cap()));
  if (partner_of_first < 2 || partner_of_first > sc.darts) return Int(0);
  Int total(0);
  std::vector<int> alpha(static_cast<std::size_t>(sc.darts) + 1, 0);
  alpha[1] = static_cast<int>(partner_of_first);
  alpha[static_cast<std::size_t>(partner_of_first)] = 1;
  std::vector<long> degrees;
  detail::complete_involutions(alpha, [&](const std::vector<int>& a) {
    const long v = sc.scan(a, degrees);
    if (v >= 0) total += detail::count_markings(v, degrees, zeros, tight);
  });
  return total;
}

// 1/|Aut|-weighted number of genus-0 maps with the given labeled boundary
// lengths (zeros = marked vertices). Exact rational; an integer whenever
// there are at least three boundaries.
inline Rat oracle_count(const std::vector<long>& boundary_degrees, bool tight) {
  std::vector<long> positives;
  long zeros = 0;
  detail::split_spec(boundary_degrees, positives, zeros);
  detail::Scanner sc(positives);
  if (sc.darts > dart_cap())
    throw dart_cap_error("oracle: dart cap exceeded: " + std::to_string(sc.darts) + " > " +
                         std::to_string(dart_cap()));
  Int total(0);
  std::vector<int> alpha(static_cast<std::size_t>(sc.darts) + 1, 0);
  std::vector<long> degrees;
  detail::complete_involutions(alpha, [&](const std::vector<int>& a) {
    const long v = sc.scan(a, degrees);
    if (v >= 0) total += detail::count_markings(v, degrees, zeros, tight);
  });
  Int weight(1);
  for (long d : positives) weight *= Int(d);
  return Rat(total, weight);
}

// Every boundary multiset (non-increasing tuples, zeros allowed, at least one
// positive entry) with n_min..n_max parts and total degree at most the bound.
struct OracleRow {
  std::vector<long> degrees;
  Rat value;
};

inline std::vector<OracleRow> oracle_sweep(long max_total_degree, long n_min, long n_max,
                                           bool tight) {
  std::vector<OracleRow> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long remaining, long last) -> void {
    const long n = static_cast<long>(cur.size());
    if (n >= n_min && n <= n_max && !cur.empty() && cur[0] > 0) {
      out.push_back({cur, oracle_count(cur, tight)});
    }
    if (n == n_max) return;
    for (long d = std::min(remaining, last); d >= 0; --d) {
      cur.push_back(d);
      self(self, remaining - d, d);
      cur.pop_back();
    }
  };
  rec(rec, max_total_degree, max_total_degree);
  return out;
}

}  // namespace tightmaps
