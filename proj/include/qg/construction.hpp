#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "qg/errors.hpp"
#include "qg/field.hpp"
#include "qg/table.hpp"

namespace qg {

/// Parameters of the field-based multiplication x*y = alpha x^m + beta y^d + c.
/// The certified family fixes alpha = 1 - beta, d = 1, beta a generator,
/// c != 0; the general form is exposed for experimentation and only promises
/// a valid Latin square.
struct ConstructionParams {
  Field field;
  long m = 1;
  long d = 1;
  Field::Elem alpha;
  Field::Elem beta;
  Field::Elem c;
};

inline ConstructionParams make_params(Field field, long m, long d,
                                      Field::Elem alpha, Field::Elem beta,
                                      Field::Elem c) {
  const long n = field.q() - 1;
  if (m < 1 || d < 1 || std::gcd(m, n) != 1 || std::gcd(d, n) != 1)
    fail(errc::invalid_params, "exponents must be >=1 and coprime with q-1");
  if (field.is_zero(alpha) || field.is_zero(beta))
    fail(errc::invalid_params, "alpha and beta must be nonzero");
  return ConstructionParams{std::move(field), m, d, std::move(alpha),
                            std::move(beta), std::move(c)};
}

/// cells[tag x][tag y] = tag(alpha x^m + beta y^d + c). Because m and d are
/// coprime with q-1 the power maps are permutations, so the result is always
/// a Latin square (revalidated on construction anyway).
inline Table build_table(const ConstructionParams& params) {
  const Field& F = params.field;
  const long q = F.q();
  if (q <= 2) fail(errc::q_too_small, "construction requires q > 2");
  std::vector<Field::Elem> xm(q), yd(q);
  for (long t = 0; t < q; ++t) {
    const Field::Elem e = F.from_tag(t);
    xm[t] = F.mul(params.alpha, F.pow(e, params.m));
    yd[t] = F.mul(params.beta, F.pow(e, params.d));
  }
  std::vector<std::vector<int>> cells(q, std::vector<int>(q));
  for (long x = 0; x < q; ++x)
    for (long y = 0; y < q; ++y)
      cells[x][y] = static_cast<int>(F.tag(F.add(F.add(xm[x], yd[y]), params.c)));
  return Table(cells);
}

/// Root data for x^m - x + gamma over F_q via the Koenig-Rados circulant:
/// rank r of the (q-1)x(q-1) left circulant of the coefficient vector gives
/// q-1-r roots. Roots are also collected by direct evaluation and the two
/// counts must agree.
struct RootCount {
  Field::Elem gamma;
  long circulant_rank = 0;
  long count = 0;
  std::vector<Field::Elem> roots;
};

/// First circulant row: gamma in the constant slot, -1 in the degree-1 slot,
/// +1 in the degree-m slot; following rows are left cyclic shifts.
inline std::vector<std::vector<Field::Elem>> konig_rados_matrix(
    const Field& F, long m, const Field::Elem& gamma) {
  const long n = F.q() - 1;
  std::vector<Field::Elem> row(n, F.zero());
  row[0] = gamma;
  row[1 % n] = F.sub(row[1 % n], F.one());
  row[m % n] = F.add(row[m % n], F.one());
  std::vector<std::vector<Field::Elem>> M;
  M.reserve(n);
  for (long i = 0; i < n; ++i) {
    M.push_back(row);
    std::rotate(row.begin(), row.begin() + 1, row.end());
  }
  return M;
}

inline RootCount konig_rados_count(const Field& F, long m,
                                   const Field::Elem& gamma) {
  if (F.is_zero(gamma)) fail(errc::zero_gamma);
  if (m < 1 || m > F.q() - 2)
    fail(errc::invalid_params, "m must lie in [1, q-2]");
  RootCount rc;
  rc.gamma = gamma;
  rc.circulant_rank = rank(F, konig_rados_matrix(F, m, gamma));
  rc.count = F.q() - 1 - rc.circulant_rank;
  for (long t = 0; t < F.q(); ++t) {
    const Field::Elem x = F.from_tag(t);
    if (F.is_zero(F.add(F.sub(F.pow(x, m), x), gamma))) rc.roots.push_back(x);
  }
  if (static_cast<long>(rc.roots.size()) != rc.count)
    fail(errc::cross_check_mismatch, "circulant rank vs direct root count");
  return rc;
}

/// Range of f(x) = x^m - x, deduplicated, ascending by tag. f(0) = f(1) = 0,
/// so the complement in F_q is never empty.
inline std::vector<Field::Elem> range_of_f(const Field& F, long m) {
  if (std::gcd(m, F.q() - 1) != 1) fail(errc::not_coprime, "m");
  std::vector<char> seen(F.q(), 0);
  for (long t = 0; t < F.q(); ++t) {
    const Field::Elem x = F.from_tag(t);
    seen[F.tag(F.sub(F.pow(x, m), x))] = 1;
  }
  std::vector<Field::Elem> out;
  for (long t = 0; t < F.q(); ++t)
    if (seen[t]) out.push_back(F.from_tag(t));
  return out;
}

enum class CStrategy { rank, range };

/// Smallest-tag nonzero c whose gamma = c/(1-beta) makes x^m - x + gamma
/// rootless; decided either by full circulant rank or by gamma falling
/// outside range(f). The two strategies agree (tested exhaustively).
inline Field::Elem choose_c(const Field& F, long m, const Field::Elem& beta,
                            CStrategy strategy = CStrategy::range) {
  const Field::Elem one_minus_beta = F.sub(F.one(), beta);
  if (F.is_zero(one_minus_beta))
    fail(errc::invalid_params, "beta = 1 leaves gamma undefined");
  std::vector<char> in_range(F.q(), 0);
  if (strategy == CStrategy::range)
    for (const auto& v : range_of_f(F, m)) in_range[F.tag(v)] = 1;
  for (long t = 1; t < F.q(); ++t) {
    const Field::Elem c = F.from_tag(t);
    const Field::Elem gamma = F.mul(c, F.inv(one_minus_beta));
    const bool suitable =
        strategy == CStrategy::range
            ? !in_range[F.tag(gamma)]
            : konig_rados_count(F, m, gamma).circulant_rank == F.q() - 1;
    if (suitable) return c;
  }
  fail(errc::no_suitable_c);  // unreachable: range(f) misses some gamma
}

inline Field::Elem choose_c(const Field& F, long m,
                            CStrategy strategy = CStrategy::range) {
  return choose_c(F, m, F.beta(), strategy);
}

/// Valid construction exponents: 1 < m < q-1, coprime with q-1, and not a
/// power of p modulo q-1 (those give affine tables).
inline std::vector<long> valid_m_values(const Field& F) {
  const long n = F.q() - 1;
  std::vector<char> ppower(n, 0);
  long pw = 1 % n;
  for (int i = 0; i < F.r(); ++i) {
    ppower[pw] = 1;
    pw = pw * F.p() % n;
  }
  std::vector<long> out;
  for (long m = 2; m < n; ++m)
    if (std::gcd(m, n) == 1 && !ppower[m % n]) out.push_back(m);
  return out;
}

struct Construction {
  ConstructionParams params;
  Table table;
  RootCount roots;
};

/// Algorithm front door: builds GF(p^r), picks the smallest valid m and the
/// smallest suitable c unless forced, fixes alpha = 1 - beta and d = 1, and
/// returns the table with its root certificate. Zero roots certify the
/// absence of proper subquasigroups; forcing an unsuitable c is allowed and
/// simply shows up in the certificate.
inline Construction construct_suitable(
    int p, int r, std::optional<long> forced_m = std::nullopt,
    std::optional<long> forced_c_tag = std::nullopt,
    std::optional<long> forced_beta_tag = std::nullopt,
    std::optional<std::vector<int>> modulus = std::nullopt) {
  Field F(p, r, std::move(modulus));
  if (F.q() <= 2) fail(errc::q_too_small, "construction requires q > 2");
  Field::Elem beta = F.beta();
  if (forced_beta_tag) {
    beta = F.from_tag(*forced_beta_tag);
    if (F.is_zero(beta) || F.element_order(beta) != F.q() - 1)
      fail(errc::invalid_params, "beta must generate the multiplicative group");
  }
  const auto valid = valid_m_values(F);
  long m;
  if (forced_m) {
    m = *forced_m;
    if (std::find(valid.begin(), valid.end(), m) == valid.end())
      fail(errc::invalid_params, "m = " + std::to_string(m) +
                                     " is not a valid construction exponent");
  } else {
    if (valid.empty())
      fail(errc::no_valid_m, "no admissible exponent for q = " +
                                 std::to_string(F.q()));
    m = valid.front();
  }
  const Field::Elem alpha = F.sub(F.one(), beta);
  Field::Elem c;
  if (forced_c_tag) {
    c = F.from_tag(*forced_c_tag);
    if (F.is_zero(c)) fail(errc::invalid_params, "c must be nonzero");
  } else {
    c = choose_c(F, m, beta);
  }
  const Field::Elem gamma = F.mul(c, F.inv(alpha));
  RootCount roots = konig_rados_count(F, m, gamma);
  ConstructionParams params = make_params(std::move(F), m, 1, alpha, beta, c);
  Table table = build_table(params);
  return Construction{std::move(params), std::move(table), std::move(roots)};
}

/// Closed form of the k-th left-multiplication iterate under
/// x (.) y = alpha x^{m d^-1} + beta y + c:
///   (L_x)^k (y) = alpha (1-beta^k)/(1-beta) x^{m d^-1}
///               + (1-beta^k)/(1-beta) c + beta^k y.
inline Field::Elem iterated_left_mul_closed_form(const ConstructionParams& P,
                                                 const Field::Elem& x,
                                                 const Field::Elem& y, long k) {
  const Field& F = P.field;
  if (k < 1) fail(errc::invalid_params, "k must be >= 1");
  if (P.beta == F.one()) fail(errc::invalid_params, "beta must differ from 1");
  const long n = F.q() - 1;
  // m d^-1 mod (q-1); both are units, so the exponent lands in [1, q-2].
  long t = 0, nt = 1, rr = n, nr = P.d % n;
  while (nr != 0) {
    const long quot = rr / nr;
    const long tmp_t = t - quot * nt;
    t = nt;
    nt = tmp_t;
    const long tmp_r = rr - quot * nr;
    rr = nr;
    nr = tmp_r;
  }
  const long dinv = ((t % n) + n) % n;
  long e = (P.m % n) * dinv % n;
  if (e == 0) e = n;
  const Field::Elem beta_k = F.pow(P.beta, k);
  const Field::Elem ratio =
      F.mul(F.sub(F.one(), beta_k), F.inv(F.sub(F.one(), P.beta)));
  Field::Elem out = F.mul(F.mul(P.alpha, ratio), F.pow(x, e));
  out = F.add(out, F.mul(ratio, P.c));
  out = F.add(out, F.mul(beta_k, y));
  return out;
}

}  // namespace qg
