#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "qg/errors.hpp"
#include "qg/perm.hpp"

namespace qg {

/// A validated Latin square: the multiplication table of a finite quasigroup
/// on indices 0..n-1. cells(i, j) = x_i * x_j.
///
/// Construction verifies both Latin conditions, which is exactly what makes
/// a*x = b and y*a = b uniquely solvable; the inverse row and column
/// permutations are precomputed so both divisions are O(1).
///
/// Immutable after validation; all queries are const and pure.
class Table {
 public:
  explicit Table(const std::vector<std::vector<int>>& cells) {
    n_ = static_cast<int>(cells.size());
    if (n_ == 0) fail(errc::bad_shape, "empty table");
    cells_.resize(static_cast<size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i) {
      if (static_cast<int>(cells[i].size()) != n_)
        fail(errc::bad_shape, "row " + std::to_string(i) + " has wrong length");
      for (int j = 0; j < n_; ++j) {
        const int v = cells[i][j];
        if (v < 0 || v >= n_)
          fail(errc::bad_shape, "entry out of range at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
        cells_[static_cast<size_t>(i) * n_ + j] = v;
      }
    }
    std::vector<char> seen(n_);
    for (int i = 0; i < n_; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int j = 0; j < n_; ++j) {
        char& s = seen[mul(i, j)];
        if (s) fail(errc::row_not_permutation, "row " + std::to_string(i), i);
        s = 1;
      }
    }
    for (int j = 0; j < n_; ++j) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int i = 0; i < n_; ++i) {
        char& s = seen[mul(i, j)];
        if (s) fail(errc::col_not_permutation, "column " + std::to_string(j), j);
        s = 1;
      }
    }
    // ldiv_[a][b] = x with a*x = b;  rdiv_[a][b] = y with y*a = b.
    ldiv_.resize(cells_.size());
    rdiv_.resize(cells_.size());
    for (int a = 0; a < n_; ++a)
      for (int x = 0; x < n_; ++x) ldiv_[static_cast<size_t>(a) * n_ + mul(a, x)] = x;
    for (int a = 0; a < n_; ++a)
      for (int y = 0; y < n_; ++y) rdiv_[static_cast<size_t>(a) * n_ + mul(y, a)] = y;
  }

  int n() const { return n_; }

  int mul(int a, int b) const { return cells_[static_cast<size_t>(a) * n_ + b]; }

  /// Unique x with a*x = b.
  int ldiv(int a, int b) const { return ldiv_[static_cast<size_t>(a) * n_ + b]; }

  /// Unique y with y*a = b.
  int rdiv(int b, int a) const { return rdiv_[static_cast<size_t>(a) * n_ + b]; }

  /// Left translation sigma_i: y -> i*y (the i-th row).
  Perm row_perm(int i) const {
    Perm p(n_);
    for (int y = 0; y < n_; ++y) p[y] = mul(i, y);
    return p;
  }

  /// Right translation tau_j: x -> x*j (the j-th column).
  Perm col_perm(int j) const {
    Perm p(n_);
    for (int x = 0; x < n_; ++x) p[x] = mul(x, j);
    return p;
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out[i][j] = mul(i, j);
    return out;
  }

  friend bool operator==(const Table& a, const Table& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  int n_;
  std::vector<int> cells_;
  std::vector<int> ldiv_;
  std::vector<int> rdiv_;
};

/// x*y = pi(pi1^-1(x) . pi2^-1(y)). Identity permutations give an equal table.
inline Table isotope(const Table& Q, const Perm& pi, const Perm& pi1,
                     const Perm& pi2) {
  const int n = Q.n();
  for (const Perm* p : {&pi, &pi1, &pi2})
    if (static_cast<int>(p->size()) != n || !is_permutation(*p))
      fail(errc::not_permutation);
  const Perm inv1 = inverse_perm(pi1);
  const Perm inv2 = inverse_perm(pi2);
  std::vector<std::vector<int>> cells(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) cells[x][y] = pi[Q.mul(inv1[x], inv2[y])];
  return Table(cells);
}

/// Size of the orbit of one ordered pair of distinct points under the
/// generators {sigma_i, tau_j} of Mult(Q), by breadth-first closure.
/// Equals n(n-1) iff Mult(Q) is doubly transitive. 0 when n < 2.
inline long mult_group_orbit_pairs(const Table& Q) {
  const int n = Q.n();
  if (n < 2) return 0;
  std::vector<Perm> gens;
  gens.reserve(2 * static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) gens.push_back(Q.row_perm(i));
  for (int j = 0; j < n; ++j) gens.push_back(Q.col_perm(j));
  std::vector<char> seen(static_cast<size_t>(n) * n, 0);
  std::vector<std::pair<int, int>> frontier{{0, 1}};
  seen[1] = 1;
  long count = 1;
  while (!frontier.empty()) {
    std::vector<std::pair<int, int>> next;
    for (const auto& [u, v] : frontier) {
      for (const Perm& g : gens) {
        const int gu = g[u], gv = g[v];
        char& s = seen[static_cast<size_t>(gu) * n + gv];
        if (!s) {
          s = 1;
          ++count;
          next.emplace_back(gu, gv);
        }
      }
    }
    frontier = std::move(next);
  }
  return count;
}

/// Generators sigma_i sigma_j^-1 and tau_i tau_j^-1 of the subgroup G(Q) of
/// Mult(Q), as a deduplicated, deterministically ordered permutation list.
inline std::vector<Perm> translation_quotient_generators(const Table& Q) {
  const int n = Q.n();
  std::vector<Perm> rows(n), cols(n), row_inv(n), col_inv(n);
  for (int i = 0; i < n; ++i) {
    rows[i] = Q.row_perm(i);
    cols[i] = Q.col_perm(i);
    row_inv[i] = inverse_perm(rows[i]);
    col_inv[i] = inverse_perm(cols[i]);
  }
  std::vector<Perm> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      gens.push_back(compose(row_inv[j], rows[i]));
      gens.push_back(compose(col_inv[j], cols[i]));
    }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace qg
