#pragma once

// Independent combinatorial models used as test oracles: permutations and
// signed permutations in one-line notation, with their classical statistics.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

namespace fixtures {

using Perm = std::vector<int>;

inline std::vector<Perm> all_permutations(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<Perm> all_signed_permutations(int n) {
  std::vector<Perm> out;
  for (const auto& p : all_permutations(n))
    for (int mask = 0; mask < (1 << n); ++mask) {
      Perm s = p;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) s[static_cast<std::size_t>(i)] = -s[static_cast<std::size_t>(i)];
      out.push_back(s);
    }
  return out;
}

/// (uw)(i) = u(w(i)), with u(-k) = -u(k) for signed permutations.
inline Perm compose(const Perm& u, const Perm& w) {
  Perm out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int v = w[i];
    const int image = u[static_cast<std::size_t>(std::abs(v) - 1)];
    out[i] = v > 0 ? image : -image;
  }
  return out;
}

inline Perm identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

inline Perm power(const Perm& w, int k) {
  Perm out = identity(static_cast<int>(w.size()));
  for (int i = 0; i < k; ++i) out = compose(out, w);
  return out;
}

/// The long cycle 1 -> 2 -> ... -> n -> 1, i.e. 2 3 ... n 1.
inline Perm long_cycle(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 2 > n ? 1 : i + 2;
  return p;
}

inline int des(const Perm& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

inline int maj(const Perm& w) {
  int m = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) m += static_cast<int>(i + 1);
  return m;
}

/// (d_0, d_1, ..., d_{n-1}) for S_n: classical descents plus the circular one
/// at n (stored as d_0) when w_n > w_1.
inline std::vector<int> circular_descents(const Perm& w) {
  std::vector<int> d{w.back() > w.front() ? 1 : 0};
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d.push_back(w[i] > w[i + 1]);
  return d;
}

/// Rank of a signed letter in the order 1 < 2 < ... < n < -n < ... < -1.
inline int signed_rank(int x, int n) { return x > 0 ? x : 2 * n + 1 + x; }

/// (d_0, ..., d_n) for signed permutations: d_0 iff w_1 > 0, d_n iff w_n < 0,
/// and d_i iff w_i > w_{i+1} for 0 < i < n, letters compared by signed_rank.
inline std::vector<int> signed_descents(const Perm& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> d{w.front() > 0 ? 1 : 0};
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d.push_back(signed_rank(w[i], n) > signed_rank(w[i + 1], n));
  d.push_back(w.back() < 0);
  return d;
}

/// The same rule with letters compared as integers.
inline std::vector<int> signed_descents_integer_order(const Perm& w) {
  std::vector<int> d{w.front() > 0 ? 1 : 0};
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d.push_back(w[i] > w[i + 1]);
  d.push_back(w.back() < 0);
  return d;
}

/// (-n, -(n-1), ..., -1).
inline Perm signed_c(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = -(n - i);
  return p;
}

/// Eulerian polynomial by brute force: coefficient k counts permutations of
/// [n] with k - 1 descents.
inline std::vector<std::int64_t> brute_eulerian(int n) {
  if (n == 0) return {1};
  std::vector<std::int64_t> c(static_cast<std::size_t>(n + 1), 0);
  for (const auto& w : all_permutations(n)) ++c[static_cast<std::size_t>(des(w) + 1)];
  return c;
}

}  // namespace fixtures
