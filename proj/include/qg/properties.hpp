#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "qg/errors.hpp"
#include "qg/perm.hpp"
#include "qg/table.hpp"

namespace qg {

/// A partition of {0..n-1}: classes sorted ascending, ordered by smallest
/// member.
struct Partition {
  std::vector<std::vector<int>> classes;

  bool trivial_full() const { return classes.size() == 1; }
};

struct CongruenceClosure {
  Partition partition;
  int a = 0;
  int b = 0;
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[x] = y;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// Smallest multiplication-stable equivalence containing (a,b): whenever
/// x ~ y gets merged, x*t ~ y*t and t*x ~ t*y are merged for every t. In a
/// finite quasigroup translations are bijections of finite order, so the
/// result is stable under both divisions as well, i.e. a congruence.
inline CongruenceClosure principal_congruence(const Table& Q, int a, int b) {
  const int n = Q.n();
  if (a == b) fail(errc::equal_pair);
  if (a < 0 || a >= n || b < 0 || b >= n) fail(errc::out_of_range);
  detail::UnionFind uf(n);
  std::vector<std::pair<int, int>> worklist;
  uf.unite(a, b);
  worklist.emplace_back(a, b);
  while (!worklist.empty()) {
    const auto [x, y] = worklist.back();
    worklist.pop_back();
    for (int t = 0; t < n; ++t) {
      if (uf.unite(Q.mul(x, t), Q.mul(y, t)))
        worklist.emplace_back(Q.mul(x, t), Q.mul(y, t));
      if (uf.unite(Q.mul(t, x), Q.mul(t, y)))
        worklist.emplace_back(Q.mul(t, x), Q.mul(t, y));
    }
  }
  std::vector<std::vector<int>> buckets(n);
  for (int x = 0; x < n; ++x) buckets[uf.find(x)].push_back(x);
  CongruenceClosure out;
  out.a = a;
  out.b = b;
  for (auto& c : buckets)
    if (!c.empty()) out.partition.classes.push_back(std::move(c));
  std::sort(out.partition.classes.begin(), out.partition.classes.end(),
            [](const auto& u, const auto& v) { return u[0] < v[0]; });
  return out;
}

/// Only trivial congruences: every principal congruence collapses to one
/// class. Orders 1 and 2 are simple by the literal definition.
inline bool is_simple(const Table& Q) {
  const int n = Q.n();
  if (n <= 2) return true;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!principal_congruence(Q, a, b).partition.trivial_full()) return false;
  return true;
}

/// Certificate that Q is affine: x*y = alpha_map(x) (+) beta_map(y) (+)
/// constant over the abelian group `group`, with both maps automorphisms.
struct AffinityWitness {
  std::vector<std::vector<int>> group;  // (+) table
  int identity = 0;
  Perm alpha_map;
  Perm beta_map;
  int constant = 0;
};

/// Decides affineness through the principal isotope at u = v = 0:
/// x (+) y = rdiv(x, 0) * ldiv(0, y), which always satisfies
/// x*y = (x*0) (+) (0*y). Q is affine iff (+) is an abelian group and the
/// centered translation maps are its automorphisms; for a genuinely affine
/// quasigroup every principal isotope works, so one choice of (u, v)
/// decides.
inline std::optional<AffinityWitness> is_affine(const Table& Q) {
  const int n = Q.n();
  const int u = 0, v = 0;
  std::vector<std::vector<int>> plus(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) plus[x][y] = Q.mul(Q.rdiv(x, v), Q.ldiv(u, y));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (plus[x][y] != plus[y][x]) return std::nullopt;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (plus[plus[x][y]][z] != plus[x][plus[y][z]]) return std::nullopt;
  // Commutative + associative + isotope of a quasigroup => abelian group
  // with identity u*v.
  const int e = Q.mul(u, v);
  Perm negate(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (plus[x][y] == e) negate[x] = y;
  AffinityWitness w;
  w.group = plus;
  w.identity = e;
  w.alpha_map.resize(n);
  w.beta_map.resize(n);
  for (int x = 0; x < n; ++x) w.alpha_map[x] = plus[Q.mul(x, v)][negate[Q.mul(e, v)]];
  for (int y = 0; y < n; ++y) w.beta_map[y] = plus[Q.mul(u, y)][negate[Q.mul(u, e)]];
  w.constant = plus[Q.mul(e, v)][Q.mul(u, e)];
  for (const Perm* f : {&w.alpha_map, &w.beta_map}) {
    if (!is_permutation(*f)) return std::nullopt;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if ((*f)[plus[x][y]] != plus[(*f)[x]][(*f)[y]]) return std::nullopt;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (Q.mul(x, y) != plus[plus[w.alpha_map[x]][w.beta_map[y]]][w.constant])
        return std::nullopt;
  return w;
}

/// The construction x*y = alpha x^m + beta y^d + c over GF(p^r) is affine
/// iff m d^-1 is a power of p modulo q-1.
inline bool affine_criterion(long m, long d, int p, int r) {
  long q = 1;
  for (int i = 0; i < r; ++i) q *= p;
  const long n = q - 1;
  if (n == 1) return true;
  if (std::gcd(m, n) != 1) fail(errc::not_coprime, "m");
  if (std::gcd(d, n) != 1) fail(errc::not_coprime, "d");
  // d^-1 mod n by extended Euclid
  long t = 0, new_t = 1, rr = n, new_r = d % n;
  while (new_r != 0) {
    const long quot = rr / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    rr = std::exchange(new_r, rr - quot * new_r);
  }
  const long dinv = ((t % n) + n) % n;
  const long val = (m % n) * dinv % n;
  long pw = 1 % n;
  for (int i = 0; i < r; ++i) {
    if (val == pw) return true;
    pw = pw * p % n;
  }
  return false;
}

/// Polynomially complete = simple and non-affine.
inline bool is_polynomially_complete(const Table& Q) {
  return is_simple(Q) && !is_affine(Q).has_value();
}

/// Cross-checking variant for tables built from known construction
/// parameters: the table-level decisions must agree with the parameter-level
/// theorems (affineness criterion; beta a generator forces simplicity).
/// Disagreement is an implementation bug, never an expected outcome.
inline bool is_polynomially_complete(const Table& Q, long m, long d, int p,
                                     int r, bool beta_is_generator) {
  const bool simple = is_simple(Q);
  const bool affine = is_affine(Q).has_value();
  if (affine_criterion(m, d, p, r) != affine)
    fail(errc::cross_check_mismatch, "affine criterion vs decision");
  if (beta_is_generator && !simple)
    fail(errc::cross_check_mismatch, "generator beta but not simple");
  return simple && !affine;
}

inline long count_associative_triples(const Table& Q) {
  const int n = Q.n();
  long count = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int xy = Q.mul(x, y);
      for (int z = 0; z < n; ++z)
        if (Q.mul(xy, z) == Q.mul(x, Q.mul(y, z))) ++count;
    }
  return count;
}

/// True iff every pair of distinct elements generates Q (closure under
/// multiplication from two seeds, frontier-expanded, early exit past n/2).
inline bool two_generation_check(const Table& Q) {
  const int n = Q.n();
  std::vector<char> member(n);
  std::vector<int> elems;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::fill(member.begin(), member.end(), 0);
      elems.assign({a, b});
      member[a] = member[b] = 1;
      size_t old_begin = 0;
      bool generates = false;
      while (true) {
        std::vector<int> fresh;
        for (size_t i = 0; i < elems.size(); ++i)
          for (size_t j = 0; j < elems.size(); ++j) {
            if (i < old_begin && j < old_begin) continue;
            const int prod = Q.mul(elems[i], elems[j]);
            if (!member[prod]) {
              member[prod] = 1;
              fresh.push_back(prod);
            }
          }
        if (fresh.empty()) {
          generates = static_cast<int>(elems.size()) == n;
          break;
        }
        old_begin = elems.size();
        elems.insert(elems.end(), fresh.begin(), fresh.end());
        if (2 * elems.size() > static_cast<size_t>(n)) {
          generates = true;  // a closed set above n/2 can only grow to Q
          break;
        }
      }
      if (!generates) return false;
    }
  return true;
}

}  // namespace qg
