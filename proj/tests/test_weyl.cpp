#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "errors.hpp"
#include "fixtures.hpp"
#include "geometry.hpp"
#include "statistics.hpp"
#include "weyl.hpp"

using namespace alcoved;

namespace {

// s_alpha as a root-coordinate matrix: beta -> beta - <beta, alpha^vee> alpha.
IntMatrix reflection_matrix(const RootSystem& rs, std::size_t root_index) {
  const int r = rs.rank();
  const IntVector& alpha = rs.root(root_index);
  IntMatrix m = IntMatrix::Identity(r, r);
  for (int j = 0; j < r; ++j) m.col(j) -= rs.coroot(root_index)(j) * alpha;
  return m;
}

}  // namespace

TEST_SUITE("weyl") {
  TEST_CASE("simple reflections of A2 and C2") {
    const auto a2 = RootSystem::build("A", 2);
    const auto s1 = simple_reflection(a2, 1);
    CHECK(act_on_root(s1, make_vector({1, 0})) == make_vector({-1, 0}));
    CHECK(act_on_root(s1, make_vector({0, 1})) == make_vector({1, 1}));
    CHECK(compose(s1, s1) == identity_element(a2));

    const auto c2 = RootSystem::build("C", 2);
    const auto s2 = simple_reflection(c2, 2);
    // s_2(alpha_1) = alpha_1 - A[1][2] alpha_2 with A(i,j) = <alpha_i, alpha_j^vee>.
    CHECK(act_on_root(s2, make_vector({1, 0})) == make_vector({1, -c2.cartan()(0, 1)}));
    CHECK(compose(s2, s2) == identity_element(c2));
    CHECK_THROWS_AS(simple_reflection(c2, 3), InvalidArgument);
  }

  TEST_CASE("group orders") {
    CHECK(WeylGroup(RootSystem::build("A", 2)).size() == 6);
    const WeylGroup c2(RootSystem::build("C", 2));
    CHECK(c2.size() == 8);
    CHECK(c2.weyl_formula_order() == 8);
    const WeylGroup d4(RootSystem::build("D", 4));
    CHECK(d4.size() == 192);
    CHECK(d4.weyl_formula_order() == 192);
    CHECK(WeylGroup(RootSystem::build("F", 4)).size() == 1152);
    CHECK(WeylGroup(RootSystem::build("E", 6)).size() == 51840);
  }

  TEST_CASE("budget") {
    CHECK_THROWS_AS(WeylGroup(RootSystem::build("E", 7)), BudgetExceeded);
    CHECK_THROWS_AS(WeylGroup(RootSystem::build("A", 3), 10), BudgetExceeded);
  }

  TEST_CASE("element invariants") {
    for (const auto& [type, rank] : std::vector<std::pair<const char*, int>>{{"A", 3}, {"B", 3}, {"C", 3}, {"G", 2}}) {
      CAPTURE(type);
      const WeylGroup group(RootSystem::build(type, rank));
      const auto& rs = group.root_system();
      const auto rho_h = scale(to_rational(rs.rho()), Rational(1, rs.h_star()));
      for (std::size_t idx = 0; idx < group.size(); ++idx) {
        const auto& w = group[idx];
        CHECK(std::llabs(determinant(w.root_action)) == 1);
        CHECK(inversion_count(rs, w) == w.length);
        // w permutes the roots
        for (const auto& alpha : rs.positive_roots()) CHECK(rs.is_root(act_on_root(w, alpha)));
        // invariant pairing
        for (int i = 1; i <= rs.rank(); ++i)
          for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
            CHECK(rs.pairing(act_on_coweight(w, rs.fundamental_coweight(i)), act_on_root(w, rs.root(k))) ==
                  rs.pairing(rs.fundamental_coweight(i), rs.root(k)));
        // w(lambda) - lambda lies in the coroot lattice
        for (int i = 1; i <= rs.rank(); ++i) {
          const IntVector lambda = rs.fundamental_coweight(i);
          const IntVector diff = act_on_coweight(w, lambda) - lambda;
          CHECK(is_integral(rs.coroot_coordinates(diff)));
        }
        // inv(w, alpha) = -floor((w^-1(rho/h), alpha))
        const auto p = act_on_coweight(inverse(w), rho_h);
        for (std::size_t k = 0; k < rs.num_positive_roots(); ++k)
          CHECK(inv_at(rs, w, k) == -floor(dot(p, rs.root(k))));
        // length changes by one under right multiplication
        for (int i = 1; i <= rs.rank(); ++i) {
          const auto ws = group[group.multiply(idx, group.simple(i))];
          const int expected = inv_at(rs, w, static_cast<std::size_t>(i - 1)) ? w.length - 1 : w.length + 1;
          CHECK(ws.length == expected);
        }
      }
    }
  }

  TEST_CASE("inv, descents and the longest element") {
    const WeylGroup group(RootSystem::build("A", 2));
    const auto& rs = group.root_system();
    const auto& id = group[0];
    for (const auto& alpha : rs.positive_roots()) CHECK(inv(rs, id, alpha) == 0);
    const auto& w0 = longest_element(group);
    for (const auto& alpha : rs.positive_roots()) CHECK(inv(rs, w0, alpha) == 1);
    CHECK(w0.length == 3);
    const auto s1 = simple_reflection(rs, 1);
    CHECK(inv(rs, s1, make_vector({1, 0})) == 1);
    CHECK(inv(rs, s1, make_vector({0, 1})) == 0);
    CHECK(descents(rs, id) == std::vector<int>{1, 0, 0});
    CHECK(descents(rs, w0) == std::vector<int>{0, 1, 1});
    CHECK(descents(rs, s1) == std::vector<int>{1, 1, 0});
    CHECK_THROWS_AS(inv(rs, s1, make_vector({1, -1})), InvalidArgument);

    for (const char* type : {"B", "C"}) {
      const WeylGroup g(RootSystem::build(type, 3));
      std::vector<int> expected(4, 1);
      expected[0] = 0;
      CHECK(descents(g.root_system(), longest_element(g)) == expected);
    }
  }

  TEST_CASE("reflection in theta") {
    for (const char* type : {"A", "B", "C", "G"}) {
      const WeylGroup group(RootSystem::build(type, 2));
      const auto& rs = group.root_system();
      const IntMatrix m = reflection_matrix(rs, rs.theta_index());
      const auto idx = group.find(m);
      REQUIRE(idx.has_value());
      CHECK(act_on_root(group[*idx], rs.theta()) == IntVector(-rs.theta()));
    }
  }

  TEST_CASE("group operations") {
    const WeylGroup group(RootSystem::build("B", 3));
    for (std::size_t a = 0; a < group.size(); a += 7) {
      CHECK(group.multiply(a, group.inverse(a)) == 0);
      CHECK(group.power(a, 0) == 0);
      CHECK(group.power(a, 2) == group.multiply(a, a));
      CHECK(group.power(a, -1) == group.inverse(a));
    }
    CHECK_THROWS_AS(group.index_of(IntMatrix::Identity(3, 3) * 2), DefectError);
  }
}

TEST_SUITE("models") {
  TEST_CASE("type A permutations: round trip, descents, inversions") {
    for (int n = 2; n <= 5; ++n) {
      CAPTURE(n);
      const WeylGroup group(RootSystem::build("A", n - 1));
      const auto& rs = group.root_system();
      std::set<std::size_t> seen;
      for (const auto& w : fixtures::all_permutations(n)) {
        const auto el = from_permutation(rs, w);
        CHECK(to_permutation(rs, el) == w);
        seen.insert(group.index_of(el));
        CHECK(descents(rs, el) == fixtures::circular_descents(w));
        int inversions = 0;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) inversions += w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)];
        CHECK(inversion_count(rs, el) == inversions);
      }
      CHECK(seen.size() == group.size());
      // composition is compatible
      const auto perms = fixtures::all_permutations(n);
      for (std::size_t i = 0; i < perms.size(); i += 5)
        for (std::size_t j = 0; j < perms.size(); j += 3)
          CHECK(compose(from_permutation(rs, perms[i]), from_permutation(rs, perms[j])) ==
                from_permutation(rs, fixtures::compose(perms[i], perms[j])));
      CHECK(from_permutation(rs, fixtures::identity(n)) == identity_element(rs));
    }
  }

  TEST_CASE("type A: cdes, C and cmaj") {
    for (int n = 2; n <= 5; ++n) {
      CAPTURE(n);
      const WeylStatistics stats{WeylGroup(RootSystem::build("A", n - 1))};
      const auto& group = stats.group();
      const auto& rs = stats.root_system();
      const auto c = fixtures::long_cycle(n);
      const std::size_t c_index = group.index_of(from_permutation(rs, c));
      // C is cyclic, generated by the long cycle
      std::set<std::size_t> generated;
      for (int k = 0; k < n; ++k) generated.insert(group.power(c_index, k));
      CHECK(generated == std::set<std::size_t>(stats.c_group().elements().begin(), stats.c_group().elements().end()));
      // delta(c^-i) = omega_i: c = 2 3 ... n 1 has its only descent at n-1.
      // This is the convention under which cmaj(w) = c^(-maj(w) mod n).
      for (int i = 1; i < n; ++i)
        CHECK(stats.delta(group.power(c_index, -i)) == rs.fundamental_coweight(i));
      for (const auto& w : fixtures::all_permutations(n)) {
        const std::size_t idx = group.index_of(from_permutation(rs, w));
        const auto d = fixtures::circular_descents(w);
        CHECK(stats.cdes(idx) == std::accumulate(d.begin(), d.end(), 0));
        const int m = fixtures::maj(w);
        const int e = ((-m) % n + n) % n;
        CHECK(stats.cmaj(idx) == group.index_of(from_permutation(rs, fixtures::power(c, e))));
        // right multiplication by c rotates the window
        fixtures::Perm rotated(w.begin() + 1, w.end());
        rotated.push_back(w.front());
        CHECK(fixtures::compose(w, c) == rotated);
      }
    }
  }

  TEST_CASE("type C signed permutations: round trip and descents") {
    for (int n = 2; n <= 4; ++n) {
      CAPTURE(n);
      const WeylGroup group(RootSystem::build("C", n));
      const auto& rs = group.root_system();
      std::set<std::size_t> seen;
      for (const auto& w : fixtures::all_signed_permutations(n)) {
        const auto el = from_signed_permutation(rs, w);
        CHECK(to_signed_permutation(rs, el) == w);
        seen.insert(group.index_of(el));
        CHECK(descents(rs, el) == fixtures::signed_descents(w));
      }
      CHECK(seen.size() == group.size());
      CHECK(from_signed_permutation(rs, fixtures::identity(n)) == identity_element(rs));
    }
    // the example (2, -1) of C_2
    const auto c2 = RootSystem::build("C", 2);
    const fixtures::Perm w{2, -1};
    CHECK(descents(c2, from_signed_permutation(c2, w)) == fixtures::signed_descents(w));
  }

  TEST_CASE("type C: interior descents need the order 1 < ... < n < -n < ... < -1") {
    // Comparing letters as integers gives cdes = 0 for some elements, which is
    // impossible since d_0 or some d_i is always set.
    const int n = 2;
    const auto rs = RootSystem::build("C", n);
    int zero = 0;
    for (const auto& w : fixtures::all_signed_permutations(n)) {
      const auto d = fixtures::signed_descents_integer_order(w);
      int total = 0;
      for (std::size_t i = 0; i < d.size(); ++i) total += d[i] * static_cast<int>(rs.mark(static_cast<int>(i)));
      zero += total == 0;
    }
    CHECK(zero > 0);
  }

  TEST_CASE("type C: cdes, C and cmaj") {
    for (int n = 2; n <= 3; ++n) {
      CAPTURE(n);
      const WeylStatistics stats{WeylGroup(RootSystem::build("C", n))};
      const auto& group = stats.group();
      const auto& rs = stats.root_system();
      const std::size_t c = group.index_of(from_signed_permutation(rs, fixtures::signed_c(n)));
      CHECK(stats.c_group().elements() == std::vector<std::size_t>{0, c});
      for (const auto& w : fixtures::all_signed_permutations(n)) {
        const std::size_t idx = group.index_of(from_signed_permutation(rs, w));
        const auto d = fixtures::signed_descents(w);
        int total = 0;
        for (std::size_t i = 0; i < d.size(); ++i) total += d[i] * static_cast<int>(rs.mark(static_cast<int>(i)));
        CHECK(stats.cdes(idx) == total);
        CHECK((stats.cmaj(idx) == 0) == (w.back() > 0));
      }
    }
  }
}
