#pragma once

#include <vector>

#include "qg/errors.hpp"

namespace qg {

/// A permutation of {0..n-1}, stored as its image list: p[i] is where i maps.
using Perm = std::vector<int>;

inline bool is_permutation(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline Perm inverse_perm(const Perm& p) {
  Perm inv(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) inv[p[i]] = i;
  return inv;
}

/// (a then b): result[i] = b[a[i]].
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (int i = 0; i < static_cast<int>(a.size()); ++i) r[i] = b[a[i]];
  return r;
}

/// Disjoint cycles covering {0..n-1}. Each cycle starts at its smallest
/// element; cycles are ordered by that element.
inline std::vector<std::vector<int>> cycle_decomposition(const Perm& p) {
  if (!is_permutation(p)) fail(errc::not_permutation);
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> cycles;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit;
    int x = s;
    while (!seen[x]) {
      seen[x] = 1;
      orbit.push_back(x);
      x = p[x];
    }
    cycles.push_back(std::move(orbit));
  }
  return cycles;
}

}  // namespace qg
