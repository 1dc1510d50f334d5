#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "qg/construction.hpp"
#include "qg/field.hpp"
#include "qg/properties.hpp"

using qg::Table;
using qg::errc;
using SetList = std::vector<std::vector<int>>;

TEST_CASE("principal congruences", "[properties]") {
  const auto z4 = qg::principal_congruence(corpus::cyclic_group(4), 0, 2);
  CHECK(z4.partition.classes == SetList{{0, 2}, {1, 3}});
  const auto z4b = qg::principal_congruence(corpus::cyclic_group(4), 0, 1);
  CHECK(z4b.partition.trivial_full());
  const Table pc = corpus::gf8_m3_table();
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      CHECK(qg::principal_congruence(pc, a, b).partition.trivial_full());
  CHECK(qg::principal_congruence(corpus::cyclic_group(2), 0, 1)
            .partition.trivial_full());
  try {
    qg::principal_congruence(corpus::cyclic_group(4), 2, 2);
    FAIL("expected EqualPair");
  } catch (const qg::error& e) {
    CHECK(e.code() == errc::equal_pair);
  }
}

TEST_CASE("returned partitions are multiplication-stable",
          "[properties][property]") {
  for (const Table& Q : {corpus::cyclic_group(8), corpus::klein_group(),
                         corpus::order8_nested()}) {
    const int n = Q.n();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        const auto cc = qg::principal_congruence(Q, a, b);
        std::vector<int> cls(n);
        for (size_t k = 0; k < cc.partition.classes.size(); ++k)
          for (int x : cc.partition.classes[k]) cls[x] = static_cast<int>(k);
        CHECK(cls[a] == cls[b]);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            if (cls[x] != cls[y]) continue;
            for (int t = 0; t < n; ++t) {
              CHECK(cls[Q.mul(x, t)] == cls[Q.mul(y, t)]);
              CHECK(cls[Q.mul(t, x)] == cls[Q.mul(t, y)]);
            }
          }
      }
  }
}

TEST_CASE("simplicity verdicts", "[properties]") {
  CHECK(qg::is_simple(corpus::gf8_m3_table()));
  CHECK(qg::is_simple(corpus::gf8_m5_table()));
  CHECK(qg::is_simple(corpus::order8_nosubq()));
  CHECK_FALSE(qg::is_simple(corpus::cyclic_group(4)));
  CHECK_FALSE(qg::is_simple(corpus::order8_nested()));
  CHECK(qg::is_simple(Table(corpus::Cells{{0}})));
  CHECK(qg::is_simple(corpus::cyclic_group(2)));
}

TEST_CASE("affineness decisions with verified witnesses", "[properties]") {
  const auto z4 = qg::is_affine(corpus::cyclic_group(4));
  REQUIRE(z4.has_value());
  CHECK(z4->alpha_map == qg::identity_perm(4));
  CHECK(z4->beta_map == qg::identity_perm(4));
  CHECK(z4->constant == 0);
  CHECK(z4->identity == 0);
  CHECK(qg::is_affine(corpus::klein_group()).has_value());
  CHECK_FALSE(qg::is_affine(corpus::gf8_m3_table()).has_value());
  CHECK_FALSE(qg::is_affine(corpus::gf8_m5_table()).has_value());
  CHECK_FALSE(qg::is_affine(corpus::order8_nested()).has_value());
}

TEST_CASE("affine witness reconstructs the table", "[properties][property]") {
  qg::Field F(2, 3);
  const auto params = qg::make_params(F, 2, 1, F.sub(F.one(), F.beta()),
                                      F.beta(), F.one());
  const Table Q = qg::build_table(params);  // m = p: affine by the criterion
  const auto w = qg::is_affine(Q);
  REQUIRE(w.has_value());
  const int n = Q.n();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      CHECK(Q.mul(x, y) ==
            w->group[w->group[w->alpha_map[x]][w->beta_map[y]]][w->constant]);
  // the witness group is abelian with the stated identity
  for (int x = 0; x < n; ++x) {
    CHECK(w->group[x][w->identity] == x);
    for (int y = 0; y < n; ++y) CHECK(w->group[x][y] == w->group[y][x]);
  }
}

TEST_CASE("affineness criterion on exponents", "[properties]") {
  CHECK_FALSE(qg::affine_criterion(3, 1, 2, 3));
  CHECK(qg::affine_criterion(2, 1, 2, 3));
  CHECK_FALSE(qg::affine_criterion(5, 1, 2, 3));
  CHECK(qg::affine_criterion(1, 1, 5, 1));
  CHECK(qg::affine_criterion(6, 3, 2, 3));  // 6*3^-1 = 2 mod 7
  try {
    qg::affine_criterion(7, 1, 2, 3);
    FAIL("expected NotCoprime");
  } catch (const qg::error& e) {
    CHECK(e.code() == errc::not_coprime);
  }
}

TEST_CASE("criterion matches the table-level decision for q <= 32, any d",
          "[properties][oracle]") {
  for (auto [p, r] :
       {std::pair{3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1},
        {13, 1}, {2, 4}, {17, 1}, {19, 1}, {23, 1}, {5, 2}, {3, 3}, {29, 1},
        {31, 1}, {2, 5}}) {
    qg::Field F(p, r);
    const long q = F.q();
    const auto beta = F.beta();
    const auto alpha = F.sub(F.one(), beta);
    for (long m = 1; m < q - 1; ++m) {
      if (std::gcd(m, q - 1) != 1) continue;
      for (long d = 1; d < q - 1; ++d) {
        if (std::gcd(d, q - 1) != 1) continue;
        const Table Q = qg::build_table(
            qg::make_params(F, m, d, alpha, beta, F.one()));
        CHECK(qg::affine_criterion(m, d, p, r) == qg::is_affine(Q).has_value());
      }
    }
  }
}

TEST_CASE("polynomial completeness", "[properties]") {
  CHECK(qg::is_polynomially_complete(corpus::gf8_m3_table()));
  CHECK(qg::is_polynomially_complete(corpus::order8_nosubq()));
  CHECK_FALSE(qg::is_polynomially_complete(corpus::cyclic_group(4)));
  qg::Field F(2, 3);
  const Table affine_q = qg::build_table(
      qg::make_params(F, 2, 1, F.sub(F.one(), F.beta()), F.beta(), F.one()));
  CHECK_FALSE(qg::is_polynomially_complete(affine_q));
  // cross-checking overload agrees on both reference tables
  CHECK(qg::is_polynomially_complete(corpus::gf8_m3_table(), 3, 1, 2, 3, true));
  CHECK_FALSE(qg::is_polynomially_complete(affine_q, 2, 1, 2, 3, true));
}

TEST_CASE("associative triple counts", "[properties]") {
  CHECK(qg::count_associative_triples(corpus::gf8_m3_table()) == 64);
  CHECK(qg::count_associative_triples(corpus::gf8_m5_table()) == 64);
  for (int n : {2, 3, 4, 5})
    CHECK(qg::count_associative_triples(corpus::cyclic_group(n)) ==
          static_cast<long>(n) * n * n);
}

TEST_CASE("two-element generation", "[properties]") {
  CHECK(qg::two_generation_check(corpus::gf8_m3_table()));
  CHECK(qg::two_generation_check(corpus::gf8_m5_table()));
  CHECK_FALSE(qg::two_generation_check(corpus::order8_nested()));
  CHECK(qg::two_generation_check(Table(corpus::Cells{{0}})));
}

TEST_CASE("double transitivity implies simplicity on the corpus",
          "[properties][property]") {
  std::mt19937 rng(31);
  std::vector<Table> tables{corpus::gf8_m3_table(), corpus::gf8_m5_table(),
                            corpus::order8_nested(), corpus::order8_nosubq(),
                            corpus::klein_group()};
  for (int n = 2; n <= 8; ++n) tables.push_back(corpus::cyclic_group(n));
  for (int k = 0; k < 5; ++k)
    tables.push_back(corpus::random_isotope(corpus::gf8_m3_table(), rng));
  for (const Table& Q : tables) {
    const long orbit = qg::mult_group_orbit_pairs(Q);
    if (orbit == static_cast<long>(Q.n()) * (Q.n() - 1))
      CHECK(qg::is_simple(Q));
  }
}
