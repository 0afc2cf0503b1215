#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tightmaps {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

// Converts a rational known to be integral; throws if it is not.
inline Int rat_to_int(const Rat& r) {
  if (denominator(r) != 1) {
    throw std::logic_error("expected an integer, got " + r.str());
  }
  return numerator(r);
}

// A half-integer stored as twice its value, so parity is one evenness test
// and no caller ever constructs a fraction.
struct HalfInt {
  Int twice{};

  HalfInt() = default;
  HalfInt(int v) : twice(2 * Int(v)) {}
  explicit HalfInt(Int v) : twice(2 * std::move(v)) {}

  static HalfInt from_twice(Int t) {
    HalfInt h;
    h.twice = std::move(t);
    return h;
  }

  bool is_integer() const { return twice % 2 == 0; }
  bool is_half_odd() const { return !is_integer(); }

  Rat value() const { return Rat(twice, 2); }

  // Integer value; only meaningful when is_integer().
  Int whole() const {
    if (!is_integer()) throw std::logic_error("whole() on half-odd value " + str());
    return twice / 2;
  }

  std::string str() const {
    return is_integer() ? Int(twice / 2).str() : twice.str() + "/2";
  }

  HalfInt& operator+=(const HalfInt& o) {
    twice += o.twice;
    return *this;
  }
  HalfInt& operator-=(const HalfInt& o) {
    twice -= o.twice;
    return *this;
  }

  friend HalfInt operator+(HalfInt a, const HalfInt& b) { return a += b; }
  friend HalfInt operator-(HalfInt a, const HalfInt& b) { return a -= b; }
  friend HalfInt operator-(const HalfInt& a) { return from_twice(-a.twice); }

  friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.twice == b.twice; }
  friend bool operator!=(const HalfInt& a, const HalfInt& b) { return a.twice != b.twice; }
  friend bool operator<(const HalfInt& a, const HalfInt& b) { return a.twice < b.twice; }
  friend bool operator<=(const HalfInt& a, const HalfInt& b) { return a.twice <= b.twice; }
  friend bool operator>(const HalfInt& a, const HalfInt& b) { return a.twice > b.twice; }
  friend bool operator>=(const HalfInt& a, const HalfInt& b) { return a.twice >= b.twice; }
};

inline Int factorial(const Int& k) {
  if (k < 0) throw std::invalid_argument("factorial: negative argument " + k.str());
  Int r = 1;
  for (Int i = 2; i <= k; ++i) r *= i;
  return r;
}

inline Int factorial(long k) { return factorial(Int(k)); }

// x(x-1)...(x-k+1); the empty product for k = 0.
inline Rat falling(const Rat& x, long k) {
  if (k < 0) throw std::invalid_argument("falling: negative length");
  Rat r = 1;
  Rat f = x;
  for (long i = 0; i < k; ++i) {
    r *= f;
    f -= 1;
  }
  return r;
}

inline Rat falling(const HalfInt& x, long k) { return falling(x.value(), k); }

// Generalized binomial falling(x,k)/k!; 0 for negative k.
inline Rat binom(const Rat& x, long k) {
  if (k < 0) return Rat(0);
  return falling(x, k) / Rat(factorial(k));
}

inline Rat binom(const HalfInt& x, long k) { return binom(x.value(), k); }
inline Rat binom(const Int& x, long k) { return binom(Rat(x), k); }
inline Rat binom(long x, long k) { return binom(Rat(x), k); }

// n! / prod(parts_i!); 0 when some part is negative.
inline Int multinomial(const Int& n, const std::vector<Int>& parts) {
  Int sum = 0;
  for (const Int& p : parts) sum += p;
  if (sum != n) {
    throw std::invalid_argument("multinomial: parts sum to " + sum.str() + ", expected " +
                                n.str());
  }
  for (const Int& p : parts) {
    if (p < 0) return Int(0);
  }
  Int r = factorial(n);
  for (const Int& p : parts) r /= factorial(p);
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  Rat r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= base;
  return r;
}

// Calls fn(parts) for every (k_1,...,k_parts) of nonnegative integers summing
// to total, in ascending lexicographic order. parts == 0 yields the empty
// tuple exactly when total == 0.
template <class F>
inline void for_each_weak_composition(long total, std::size_t parts, F&& fn) {
  if (total < 0) return;
  std::vector<long> cur(parts, 0);
  if (parts == 0) {
    if (total == 0) fn(cur);
    return;
  }
  auto rec = [&](auto&& self, std::size_t pos, long left) -> void {
    if (pos + 1 == parts) {
      cur[pos] = left;
      fn(cur);
      return;
    }
    for (long v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
}

}  // namespace tightmaps
