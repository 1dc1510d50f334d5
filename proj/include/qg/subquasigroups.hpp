#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "qg/errors.hpp"
#include "qg/properties.hpp"
#include "qg/table.hpp"

namespace qg {

/// True iff W is closed under multiplication. In a finite quasigroup that
/// already certifies a full subquasigroup: left/right translations by
/// members have finite order, so both divisions stay inside W.
inline bool is_closed(const Table& Q, const std::vector<int>& W) {
  if (W.empty()) fail(errc::empty_set);
  std::vector<char> member(Q.n(), 0);
  for (int x : W) {
    if (x < 0 || x >= Q.n()) fail(errc::out_of_range, std::to_string(x));
    member[x] = 1;
  }
  for (int a : W)
    for (int b : W)
      if (!member[Q.mul(a, b)]) return false;
  return true;
}

namespace detail {

// Shared state of the proper-subquasigroup search.
struct SubqSearch {
  const Table& Q;
  int n;
  std::set<std::vector<int>> found;

  void consider(std::vector<int> W) {
    std::sort(W.begin(), W.end());
    if (found.count(W)) return;
    if (is_closed(Q, W)) found.insert(std::move(W));
  }

  // Candidates at row `pivot`: unions of sigma_pivot-cycles that contain the
  // cycle of `pivot` itself, where every used cycle lies inside `allowed`
  // and the union size stays within n/2. Enumeration is a lexicographic
  // power-set walk over the admissible cycles with size pruning.
  void enumerate(int pivot, const std::vector<char>& allowed) {
    const auto cycles = cycle_decomposition(Q.row_perm(pivot));
    size_t k = 0;
    while (std::find(cycles[k].begin(), cycles[k].end(), pivot) == cycles[k].end())
      ++k;
    const auto& kcyc = cycles[k];
    auto inside = [&](const std::vector<int>& cyc) {
      return std::all_of(cyc.begin(), cyc.end(),
                         [&](int x) { return allowed[x]; });
    };
    if (!inside(kcyc) || 2 * kcyc.size() > static_cast<size_t>(n)) return;
    std::vector<const std::vector<int>*> others;
    for (size_t j = 0; j < cycles.size(); ++j) {
      if (j == k) continue;
      if (inside(cycles[j]) &&
          2 * (cycles[j].size() + kcyc.size()) <= static_cast<size_t>(n))
        others.push_back(&cycles[j]);
    }
    std::vector<int> current(kcyc);
    walk(others, 0, current);
  }

  void walk(const std::vector<const std::vector<int>*>& others, size_t start,
            std::vector<int>& current) {
    consider(current);
    for (size_t t = start; t < others.size(); ++t) {
      const auto& cyc = *others[t];
      if (2 * (current.size() + cyc.size()) > static_cast<size_t>(n)) continue;
      current.insert(current.end(), cyc.begin(), cyc.end());
      walk(others, t + 1, current);
      current.resize(current.size() - cyc.size());
    }
  }
};

}  // namespace detail

/// All proper subquasigroups of Q (idempotent singletons included), each
/// sorted ascending, the list sorted by (size, lexicographic). An empty list
/// certifies that none exist.
///
/// The search walks rows the way the recognition theorem allows: any
/// subquasigroup containing element i is a union of cycles of sigma_i, one
/// of them the cycle of i, of total size at most n/2. Processed restart rows
/// accumulate in sigma_done and prune later candidate cycles; rows of found
/// subquasigroups are expanded against the shrinking seen-set S before the
/// next restart row min(Q \ processed) is taken.
inline std::vector<std::vector<int>> find_all_subquasigroups(const Table& Q) {
  const int n = Q.n();
  if (n <= 1) return {};
  detail::SubqSearch search{Q, n, {}};
  std::vector<char> processed(n, 0);      // Sigma
  std::vector<char> restart_done(n, 0);   // Sigma'
  int processed_count = 0;
  int pivot = 0;
  std::vector<char> allowed(n);
  while (true) {
    processed[pivot] = 1;
    ++processed_count;
    for (int x = 0; x < n; ++x) allowed[x] = !restart_done[x];
    search.enumerate(pivot, allowed);

    std::vector<char> in_s(n, 0);
    for (const auto& W : search.found)
      for (int x : W)
        if (!processed[x]) in_s[x] = 1;
    while (true) {
      int j = -1;
      for (int x = 0; x < n; ++x)
        if (in_s[x]) { j = x; break; }
      if (j < 0) break;
      processed[j] = 1;
      ++processed_count;
      search.enumerate(j, in_s);
      in_s[j] = 0;
    }

    restart_done[pivot] = 1;
    if (processed_count == n) break;
    pivot = 0;
    while (processed[pivot]) ++pivot;
  }
  std::vector<std::vector<int>> out(search.found.begin(), search.found.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

/// The growing chain A_0 = {a}, A_{k+1} = A_k A_k union A_k, up to the
/// closure fixpoint. The final chain entry is the result; when a step
/// exceeds n/2 the result jumps straight to Q.
struct GenerationTrace {
  std::vector<std::vector<int>> chain;
  std::vector<int> result;
};

inline GenerationTrace generated_by(const Table& Q, int a) {
  const int n = Q.n();
  if (a < 0 || a >= n) fail(errc::out_of_range, std::to_string(a));
  GenerationTrace trace;
  std::vector<char> member(n, 0);
  member[a] = 1;
  std::vector<int> elems{a};
  size_t old_begin = 0;  // elems[old_begin..) is the newest frontier
  trace.chain.push_back(elems);
  while (true) {
    // products touching the frontier: new*new, new*old, old*new
    std::vector<int> fresh;
    const size_t sz = elems.size();
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = 0; j < sz; ++j) {
        if (i < old_begin && j < old_begin) continue;
        const int p = Q.mul(elems[i], elems[j]);
        if (!member[p]) {
          member[p] = 1;
          fresh.push_back(p);
        }
      }
    if (fresh.empty()) break;
    old_begin = elems.size();
    elems.insert(elems.end(), fresh.begin(), fresh.end());
    if (2 * elems.size() > static_cast<size_t>(n)) {
      std::vector<int> all(n);
      for (int x = 0; x < n; ++x) all[x] = x;
      trace.chain.push_back(all);
      trace.result = std::move(all);
      return trace;
    }
    std::vector<int> snapshot(elems);
    std::sort(snapshot.begin(), snapshot.end());
    trace.chain.push_back(std::move(snapshot));
  }
  trace.result = trace.chain.back();
  return trace;
}

/// Fixpoint of D_1 = diagonal entries, D_{k+1} = squares of D_k. The chain
/// descends (each D
/// is the image of the previous under x -> x*x), so it terminates.
inline std::vector<int> diagonal_core(const Table& Q) {
  const int n = Q.n();
  std::vector<char> member(n, 0);
  std::vector<int> D;
  for (int i = 0; i < n; ++i) {
    const int d = Q.mul(i, i);
    if (!member[d]) {
      member[d] = 1;
      D.push_back(d);
    }
  }
  while (true) {
    std::fill(member.begin(), member.end(), 0);
    std::vector<int> next;
    for (int x : D) {
      const int s = Q.mul(x, x);
      if (!member[s]) {
        member[s] = 1;
        next.push_back(s);
      }
    }
    std::sort(next.begin(), next.end());
    std::sort(D.begin(), D.end());
    if (next == D) return D;
    D = std::move(next);
  }
}

/// Q has no proper subquasigroup iff every element of the diagonal core
/// generates Q.
inline bool no_proper_subq_via_diagonal(const Table& Q) {
  for (int a : diagonal_core(Q))
    if (static_cast<int>(generated_by(Q, a).result.size()) != Q.n())
      return false;
  return true;
}

/// Order-4 dichotomy: a quasigroup of order 4 has a subquasigroup of size 2
/// iff it is not simple. Returns the simplicity verdict after checking both
/// routes agree.
inline bool order4_simplicity(const Table& Q) {
  if (Q.n() != 4) fail(errc::wrong_order, "order must be 4");
  bool has_pair = false;
  for (const auto& W : find_all_subquasigroups(Q))
    if (W.size() == 2) has_pair = true;
  const bool simple = is_simple(Q);
  if (has_pair == simple)
    fail(errc::cross_check_mismatch,
         "order-4 subquasigroup/congruence disagreement");
  return simple;
}

}  // namespace qg
