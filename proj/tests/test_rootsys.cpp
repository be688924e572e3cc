#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "errors.hpp"
#include "rootsys.hpp"

using namespace alcoved;

namespace {

struct TypeCase {
  const char* type;
  int rank;
};

const std::vector<TypeCase> kAllSmall = {{"A", 1}, {"A", 2}, {"A", 3}, {"A", 4}, {"A", 5}, {"B", 2}, {"B", 3},
                                        {"B", 4}, {"C", 2}, {"C", 3}, {"C", 4}, {"D", 4}, {"D", 5}, {"E", 6},
                                        {"E", 7}, {"E", 8}, {"F", 4}, {"G", 2}};

std::int64_t f_of(const RootSystem& rs) {
  std::int64_t f = 1;  // a_0
  for (int i = 1; i <= rs.rank(); ++i) f += rs.mark(i) == 1;
  return f;
}

}  // namespace

TEST_SUITE("rootsys") {
  TEST_CASE("A2 data") {
    const auto rs = RootSystem::build("A", 2);
    CHECK(rs.num_positive_roots() == 3);
    CHECK(rs.marks() == make_vector({1, 1}));
    CHECK(rs.h_star() == 3);
    CHECK(rs.index_of_connection() == 3);
    CHECK(f_of(rs) == 3);
  }

  TEST_CASE("C3 highest root and marks") {
    const auto rs = RootSystem::build("C", 3);
    CHECK(rs.theta() == make_vector({2, 2, 1}));
    CHECK(rs.marks() == make_vector({2, 2, 1}));
    CHECK(rs.index_of_connection() == 2);
    CHECK(f_of(rs) == 2);
  }

  TEST_CASE("G2 and A1") {
    const auto g2 = RootSystem::build("G", 2);
    CHECK(g2.index_of_connection() == 1);
    CHECK(f_of(g2) == 1);
    const auto a1 = RootSystem::build("A", 1);
    CHECK(a1.num_positive_roots() == 1);
    CHECK(a1.h_star() == 2);
    CHECK(a1.index_of_connection() == 2);
  }

  TEST_CASE("invalid types are rejected") {
    CHECK_THROWS_AS(RootSystem::build("D", 3), InvalidArgument);
    CHECK_THROWS_AS(RootSystem::build("B", 1), InvalidArgument);
    CHECK_THROWS_AS(RootSystem::build("E", 5), InvalidArgument);
    CHECK_THROWS_AS(RootSystem::build("F", 3), InvalidArgument);
    CHECK_THROWS_AS(RootSystem::build("X", 2), InvalidArgument);
    CHECK_THROWS_AS(RootSystem::build("A", 0), InvalidArgument);
  }

  TEST_CASE("pairing examples") {
    for (const auto& tc : kAllSmall) {
      CAPTURE(tc.type);
      CAPTURE(tc.rank);
      const auto rs = RootSystem::build(tc.type, tc.rank);
      CHECK(rs.pairing(rs.rho(), rs.theta()) == rs.h_star() - 1);
      CHECK(rs.pairing(IntVector(IntVector::Zero(rs.rank())), rs.theta()) == 0);
    }
    const auto a2 = RootSystem::build("A", 2);
    CHECK(a2.pairing(a2.fundamental_coweight(1), a2.root(0)) == 1);
    CHECK(a2.pairing(a2.fundamental_coweight(1), a2.root(1)) == 0);
  }

  TEST_CASE("coroot coordinates") {
    // Oracle: solve the 2x2 systems by Cramer's rule.
    const auto a2 = RootSystem::build("A", 2);
    CHECK(a2.coroot_coordinates(a2.fundamental_coweight(1)) == QVector{Rational(2, 3), Rational(1, 3)});
    const auto c2 = RootSystem::build("C", 2);
    const auto& A = c2.cartan();
    const std::int64_t det = A(0, 0) * A(1, 1) - A(0, 1) * A(1, 0);
    const QVector expected{Rational(-A(0, 1), det), Rational(A(0, 0), det)};  // A x = e_2
    const QVector got = c2.coroot_coordinates(c2.fundamental_coweight(2));
    CHECK(got == expected);
    CHECK(got == QVector{Rational(1, 2), Rational(1)});
    // Re-multiplying gives back omega_2.
    for (int i = 0; i < 2; ++i) CHECK(A(i, 0) * got[0] + A(i, 1) * got[1] == (i == 1 ? 1 : 0));
    // Coroots have integral coordinates.
    for (const auto& tc : kAllSmall) {
      const auto rs = RootSystem::build(tc.type, tc.rank);
      for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) CHECK(is_integral(rs.coroot_coordinates(rs.coroot(k))));
    }
  }

  TEST_CASE("structural invariants for every type") {
    for (const auto& tc : kAllSmall) {
      CAPTURE(tc.type);
      CAPTURE(tc.rank);
      const auto rs = RootSystem::build(tc.type, tc.rank);
      const int r = rs.rank();
      const auto& A = rs.cartan();
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
          if (i == j) CHECK(A(i, j) == 2);
          else {
            CHECK(A(i, j) <= 0);
            CHECK((A(i, j) == 0) == (A(j, i) == 0));
            CHECK(rs.symmetrizer()[static_cast<std::size_t>(i)] * A(i, j) ==
                  rs.symmetrizer()[static_cast<std::size_t>(j)] * A(j, i));
          }
        }
      CHECK(rs.num_positive_roots() == RootSystem::expected_positive_root_count(rs.type(), r));
      for (const auto& alpha : rs.positive_roots()) CHECK(is_nonnegative(alpha));
      for (int i = 0; i < r; ++i) {
        IntVector e = IntVector::Zero(r);
        e(i) = 1;
        CHECK(rs.root(static_cast<std::size_t>(i)) == e);
      }
      CHECK(rs.theta_index() == rs.num_positive_roots() - 1);
      // -theta + sum a_i alpha_i = 0
      CHECK(rs.theta() == rs.marks());
      CHECK(rs.h_star() == 1 + rs.marks().sum());
      CHECK(rs.index_of_connection() == f_of(rs));
      CHECK(std::llabs(determinant(A)) == rs.index_of_connection());
      CHECK(rs.pairing(rs.theta_covector(), rs.theta()) == 2);
      // heights strictly below h_star
      for (const auto& alpha : rs.positive_roots()) CHECK(alpha.sum() < rs.h_star());
      // closure under simple reflections
      for (const auto& alpha : rs.positive_roots())
        for (int i = 0; i < r; ++i) {
          IntVector image = alpha;
          image(i) -= rs.pairing(rs.simple_coroot(i), alpha);
          CHECK(rs.is_root(image));
        }
    }
  }

  TEST_CASE("index of connection matches the classical table") {
    CHECK(RootSystem::build("A", 4).index_of_connection() == 5);
    CHECK(RootSystem::build("B", 3).index_of_connection() == 2);
    CHECK(RootSystem::build("C", 4).index_of_connection() == 2);
    CHECK(RootSystem::build("D", 4).index_of_connection() == 4);
    CHECK(RootSystem::build("D", 5).index_of_connection() == 4);
    CHECK(RootSystem::build("E", 6).index_of_connection() == 3);
    CHECK(RootSystem::build("E", 7).index_of_connection() == 2);
    CHECK(RootSystem::build("E", 8).index_of_connection() == 1);
    CHECK(RootSystem::build("F", 4).index_of_connection() == 1);
  }

  TEST_CASE("h_star is one plus the sum of marks") {
    CHECK(RootSystem::build("A", 4).h_star() == 5);
    CHECK(RootSystem::build("B", 3).h_star() == 6);
    CHECK(RootSystem::build("C", 3).h_star() == 6);
    CHECK(RootSystem::build("D", 4).h_star() == 6);
    CHECK(RootSystem::build("E", 6).h_star() == 12);
    CHECK(RootSystem::build("E", 8).h_star() == 30);
    CHECK(RootSystem::build("F", 4).h_star() == 12);
    CHECK(RootSystem::build("G", 2).h_star() == 6);
  }

  TEST_CASE("positive root lookup") {
    const auto rs = RootSystem::build("B", 3);
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) CHECK(rs.root_index(rs.root(k)) == k);
    CHECK_FALSE(rs.root_index(make_vector({1, 0, 1})).has_value());
    CHECK_THROWS_AS(rs.require_positive_root(make_vector({-1, 0, 0})), InvalidArgument);
    CHECK(rs.is_root(make_vector({-1, -1, 0})));
  }
}
