#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "corpus.hpp"
#include "qg/table.hpp"
#include "qg/table_io.hpp"

using qg::Table;
using qg::errc;

TEST_CASE("validation accepts Latin squares", "[table]") {
  CHECK(corpus::order8_nested().n() == 8);
  CHECK(Table(corpus::Cells{{0, 1}, {1, 0}}).n() == 2);
  CHECK(Table(corpus::Cells{{0}}).n() == 1);
}

TEST_CASE("validation rejects non-Latin input", "[table][errors]") {
  try {
    Table(corpus::Cells{{0, 1}, {0, 1}});
    FAIL("expected ColNotPermutation");
  } catch (const qg::error& e) {
    CHECK(e.code() == errc::col_not_permutation);
    CHECK(e.index() == 0);
  }
  try {
    Table(corpus::Cells{{0, 0}, {1, 1}});
    FAIL("expected RowNotPermutation");
  } catch (const qg::error& e) {
    CHECK(e.code() == errc::row_not_permutation);
    CHECK(e.index() == 0);
  }
  try {
    Table(corpus::Cells{{0, 1}, {1}});
    FAIL("expected BadShape");
  } catch (const qg::error& e) {
    CHECK(e.code() == errc::bad_shape);
  }
  try {
    Table(corpus::Cells{{0, 2}, {2, 0}});
    FAIL("expected BadShape");
  } catch (const qg::error& e) {
    CHECK(e.code() == errc::bad_shape);
  }
}

TEST_CASE("multiplication and division spot values", "[table]") {
  const Table Q5 = corpus::order5_diag();
  CHECK(Q5.mul(1, 1) == 4);  // 2*2 = 5 one-based
  CHECK(Q5.mul(4, 1) == 3);  // 5*2 = 4 one-based
  const Table Q8 = corpus::order8_nested();
  CHECK(Q8.mul(0, 0) == 1);  // 1*1 = 2 one-based
}

TEST_CASE("division identities hold exhaustively", "[table][property]") {
  for (const Table& Q :
       {corpus::order8_nested(), corpus::order5_diag(), corpus::order8_nosubq(),
        corpus::gf8_m3_table(), corpus::cyclic_group(6)}) {
    for (int a = 0; a < Q.n(); ++a)
      for (int b = 0; b < Q.n(); ++b) {
        CHECK(Q.rdiv(Q.mul(a, b), b) == a);
        CHECK(Q.ldiv(a, Q.mul(a, b)) == b);
        CHECK(Q.mul(a, Q.ldiv(a, b)) == b);
        CHECK(Q.mul(Q.rdiv(b, a), a) == b);
      }
  }
}

TEST_CASE("row and column permutations with cycle structure", "[table]") {
  const Table Q = corpus::order8_nested();
  using Cycles = std::vector<std::vector<int>>;
  CHECK(qg::cycle_decomposition(Q.row_perm(0)) ==
        Cycles{{0, 1}, {2, 3}, {4}, {5}, {6}, {7}});
  CHECK(qg::cycle_decomposition(Q.row_perm(1)) ==
        Cycles{{0}, {1, 2}, {3}, {4, 5, 6, 7}});
  CHECK(qg::cycle_decomposition(Q.row_perm(4)) ==
        Cycles{{0, 4}, {1, 5}, {2, 6}, {3, 7}});
  // traversal order: 0 -> 5 -> 2 -> 7 -> 0; orbit membership {0,2,5,7}
  CHECK(qg::cycle_decomposition(Q.row_perm(5)) ==
        Cycles{{0, 5, 2, 7}, {1, 6, 3, 4}});
  {
    auto orbits = qg::cycle_decomposition(Q.row_perm(5));
    for (auto& orbit : orbits) std::sort(orbit.begin(), orbit.end());
    CHECK(orbits == Cycles{{0, 2, 5, 7}, {1, 3, 4, 6}});
  }
  // column permutation reads down the column
  const qg::Perm tau0 = Q.col_perm(0);
  for (int x = 0; x < 8; ++x) CHECK(tau0[x] == Q.mul(x, 0));
  CHECK(qg::cycle_decomposition(qg::identity_perm(3)) ==
        Cycles{{0}, {1}, {2}});
}

TEST_CASE("cycles of a validated table partition the index set",
          "[table][property]") {
  const Table Q = corpus::gf8_m5_table();
  for (int i = 0; i < Q.n(); ++i) {
    const auto cycles = qg::cycle_decomposition(Q.row_perm(i));
    std::vector<char> seen(Q.n(), 0);
    size_t total = 0;
    for (const auto& orbit : cycles) {
      total += orbit.size();
      for (int x : orbit) {
        CHECK(!seen[x]);
        seen[x] = 1;
      }
      // applying the permutation rotates the orbit by one
      const auto perm = Q.row_perm(i);
      for (size_t s = 0; s < orbit.size(); ++s)
        CHECK(perm[orbit[s]] == orbit[(s + 1) % orbit.size()]);
    }
    CHECK(total == static_cast<size_t>(Q.n()));
  }
}

TEST_CASE("isotopy by identities is the identity", "[table]") {
  const Table Q = corpus::order5_diag();
  const qg::Perm id = qg::identity_perm(5);
  CHECK(qg::isotope(Q, id, id, id) == Q);
}

TEST_CASE("isotopes of Latin squares stay Latin and invert", "[table][property]") {
  std::mt19937 rng(23);
  for (const Table& Q : {corpus::order8_nested(), corpus::cyclic_group(7)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto pi = corpus::random_perm(Q.n(), rng);
      const auto pi1 = corpus::random_perm(Q.n(), rng);
      const auto pi2 = corpus::random_perm(Q.n(), rng);
      const Table iso = qg::isotope(Q, pi, pi1, pi2);  // ctor validates
      CHECK(qg::isotope(iso, qg::inverse_perm(pi), qg::inverse_perm(pi1),
                        qg::inverse_perm(pi2)) == Q);
    }
  }
  try {
    qg::isotope(corpus::order5_diag(), {0, 0, 1, 2, 3}, qg::identity_perm(5),
                qg::identity_perm(5));
    FAIL("expected NotPermutation");
  } catch (const qg::error& e) {
    CHECK(e.code() == errc::not_permutation);
  }
}

TEST_CASE("pair-orbit size under Mult(Q) generators", "[table]") {
  CHECK(qg::mult_group_orbit_pairs(corpus::gf8_m3_table()) == 56);
  CHECK(qg::mult_group_orbit_pairs(corpus::cyclic_group(4)) == 4);
  CHECK(qg::mult_group_orbit_pairs(corpus::cyclic_group(2)) == 2);
}

TEST_CASE("translation quotient generators of a cyclic group", "[table]") {
  const auto gens = qg::translation_quotient_generators(corpus::cyclic_group(5));
  CHECK(gens.size() == 5);  // all translations x -> x + k
  for (const auto& g : gens) CHECK(qg::is_permutation(g));
}

TEST_CASE("text and JSON round trips", "[table][io]") {
  const Table Q = corpus::order8_nosubq();
  std::ostringstream text;
  qg::write_table_text(text, Q);
  CHECK(qg::parse_table(text.str()) == Q);
  const auto doc = qg::table_to_json(Q);
  CHECK(qg::parse_table(doc.dump()) == Q);
}

TEST_CASE("parser rejects malformed input", "[table][io][errors]") {
  for (const char* bad : {"", "3\n0 1 2\n1 2 0\n", "0\n", "{\"n\": 2}"}) {
    try {
      qg::parse_table(bad);
      FAIL("expected ParseError");
    } catch (const qg::error& e) {
      CHECK(e.code() == errc::parse_error);
    }
  }
  try {
    qg::parse_table("2\n0 1\n0 1\n");
    FAIL("expected ColNotPermutation");
  } catch (const qg::error& e) {
    CHECK(e.code() == errc::col_not_permutation);
  }
}
