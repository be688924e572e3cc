#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "polynomial.hpp"
#include "polytope.hpp"
#include "statistics.hpp"

using namespace alcoved;

namespace {

// Odometer over the box given by the simple-root bounds, scaled by `scale`.
void for_each_in_box(const AlcovedPolytope& p, std::int64_t scale, const std::function<void(const IntVector&)>& f) {
  const int r = p.root_system().rank();
  IntVector lo(r), hi(r);
  for (int i = 0; i < r; ++i) {
    lo(i) = scale * p.bounds(static_cast<std::size_t>(i)).lo;
    hi(i) = scale * p.bounds(static_cast<std::size_t>(i)).hi;
    if (lo(i) > hi(i)) return;
  }
  IntVector x = lo;
  while (true) {
    f(x);
    int i = r - 1;
    while (i >= 0 && x(i) == hi(i)) x(i) = lo(i), --i;
    if (i < 0) return;
    ++x(i);
  }
}

std::uint64_t naive_volume(const AlcovedPolytope& p) {
  const auto& rs = p.root_system();
  const auto h = rs.h_star();
  std::uint64_t n = 0;
  for_each_in_box(p, h, [&](const IntVector& y) {
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
      const auto v = rs.pairing(y, rs.root(k));
      if (v % h == 0 || v < h * p.bounds(k).lo || v > h * p.bounds(k).hi) return;
    }
    ++n;
  });
  return n;
}

std::uint64_t naive_lattice_count(const AlcovedPolytope& p) {
  const auto& rs = p.root_system();
  std::uint64_t n = 0;
  for_each_in_box(p, 1, [&](const IntVector& x) {
    for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
      const auto v = rs.pairing(x, rs.root(k));
      if (v < p.bounds(k).lo || v > p.bounds(k).hi) return;
    }
    ++n;
  });
  return n;
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

std::uint64_t weyl_formula_volume(const RootSystem& rs) {
  std::uint64_t v = factorial(rs.rank());
  for (int i = 1; i <= rs.rank(); ++i) v *= static_cast<std::uint64_t>(rs.mark(i));
  return v;
}

const std::vector<std::pair<const char*, int>> kRankAtMost4 = {
    {"A", 1}, {"A", 2}, {"A", 3}, {"A", 4}, {"B", 2}, {"B", 3}, {"B", 4}, {"C", 2},
    {"C", 3}, {"C", 4}, {"D", 4}, {"F", 4}, {"G", 2}};

}  // namespace

TEST_SUITE("polytope") {
  TEST_CASE("parallelepiped and origin star") {
    for (const auto& [type, rank] : kRankAtMost4) {
      CAPTURE(type);
      CAPTURE(rank);
      const auto rs = RootSystem::build(type, rank);
      const auto pi = parallelepiped(rs);
      CHECK(volume(pi) == weyl_formula_volume(rs));
      CHECK(lattice_point_count(pi) == (std::uint64_t{1} << rank));
      if (rank <= 3) {
        const WeylGroup group(rs);
        CHECK(volume(origin_star(rs)) == group.size());
      }
    }
    const auto a2 = RootSystem::build("A", 2);
    CHECK(volume(parallelepiped(a2)) == 2);
    const auto c2 = RootSystem::build("C", 2);
    CHECK(volume(parallelepiped(c2)) == 4);
    CHECK(volume(origin_star(c2)) == 8);
    // derived bounds: alpha gets 0 .. height(alpha)
    const auto pi = parallelepiped(c2);
    for (std::size_t k = 0; k < c2.num_positive_roots(); ++k) CHECK(pi.bounds(k) == Bounds{0, c2.root(k).sum()});
  }

  TEST_CASE("volume agrees with naive enumeration and with BFS") {
    std::mt19937_64 rng(11);
    for (const auto& [type, rank] : std::vector<std::pair<const char*, int>>{{"A", 2}, {"C", 2}, {"G", 2}, {"A", 3}, {"B", 3}}) {
      const auto rs = RootSystem::build(type, rank);
      for (int t = 0; t < 6; ++t) {
        const auto p = random_polytope(rs, rng);
        const auto v = volume(p);
        CHECK(v == naive_volume(p));
        CHECK(v == volume_by_bfs(p));
        CHECK(lattice_point_count(p) == naive_lattice_count(p));
        // translation invariance
        IntVector lambda(rank);
        for (int i = 0; i < rank; ++i) lambda(i) = (t + i) % 3 - 1;
        CHECK(volume(p.translated(lambda)) == v);
        // parallel enumeration matches
        EnumerationOptions opts;
        opts.jobs = 4;
        CHECK(volume(p, opts) == v);
        CHECK(lattice_point_count(p, opts) == lattice_point_count(p));
      }
    }
  }

  TEST_CASE("empty and degenerate polytopes") {
    const auto rs = RootSystem::build("A", 2);
    const std::vector<RootConstraint> cs{{make_vector({1, 0}), 2, 2}, {make_vector({0, 1}), 0, 0}, {make_vector({1, 1}), 5, 6}};
    const auto empty = make_polytope(rs, cs);
    CHECK(empty.is_empty());
    CHECK(volume(empty) == 0);
    CHECK(lattice_point_count(empty) == 0);
    CHECK(volume_by_bfs(empty) == 0);
    const std::vector<RootConstraint> point{{make_vector({1, 0}), 0, 0}, {make_vector({0, 1}), 0, 0}};
    const auto origin = make_polytope(rs, point);
    CHECK(volume(origin) == 0);
    CHECK(lattice_point_count(origin) == 1);
  }

  TEST_CASE("make_polytope errors") {
    const auto rs = RootSystem::build("A", 2);
    const std::vector<RootConstraint> unbounded{{make_vector({1, 0}), 0, 1}};
    CHECK_THROWS_AS(make_polytope(rs, unbounded), InvalidArgument);
    const std::vector<RootConstraint> not_root{{make_vector({1, 0}), 0, 1}, {make_vector({0, 1}), 0, 1}, {make_vector({2, 1}), 0, 1}};
    CHECK_THROWS_AS(make_polytope(rs, not_root), InvalidArgument);
    const std::vector<RootConstraint> reversed{{make_vector({1, 0}), 1, 0}, {make_vector({0, 1}), 0, 1}};
    CHECK_THROWS_AS(make_polytope(rs, reversed), InvalidArgument);
  }

  TEST_CASE("spec JSON") {
    const auto j = nlohmann::json::parse(R"({"type":"C","rank":2,"constraints":[{"root":[1,0],"min":0,"max":1},{"root":[0,1],"min":-1,"max":1}]})");
    const auto spec = PolytopeSpec::from_json(j);
    CHECK(spec.type == RootType::C);
    CHECK(spec.constraints.size() == 2);
    const auto p = make_polytope(spec);
    const auto round = make_polytope(PolytopeSpec::from_json(p.to_spec().to_json()));
    CHECK(round.bounds() == p.bounds());
    CHECK_THROWS_AS(PolytopeSpec::from_json(nlohmann::json::parse(R"({"type":"C"})")), InvalidArgument);
    CHECK_THROWS_AS(PolytopeSpec::from_json(nlohmann::json::parse(R"({"type":"C","rank":"2","constraints":[]})")), InvalidArgument);
    CHECK_THROWS_AS(PolytopeSpec::from_file("/nonexistent/spec.json"), InvalidArgument);
    const char* path = "alcoved_test_bad_spec.json";
    {
      std::ofstream out(path);
      out << "{ not json";
    }
    CHECK_THROWS_AS(PolytopeSpec::from_file(path), InvalidArgument);
    std::remove(path);
  }

  TEST_CASE("budget") {
    const auto rs = RootSystem::build("A", 3);
    EnumerationOptions opts;
    opts.budget = 5;
    CHECK_THROWS_AS(volume(origin_star(rs), opts), BudgetExceeded);
    CHECK_THROWS_AS(lattice_point_count(origin_star(rs), opts), BudgetExceeded);
  }

  TEST_CASE("hypersimplices") {
    for (const auto& [type, rank] : kRankAtMost4) {
      CAPTURE(type);
      const auto rs = RootSystem::build(type, rank);
      const auto h = rs.h_star();
      CHECK(volume(hypersimplex(rs, 1)) == 1);
      CHECK(volume(hypersimplex(rs, h - 1)) == 1);
      std::uint64_t total = 0;
      for (std::int64_t k = 1; k < h; ++k) total += volume(hypersimplex(rs, k));
      CHECK(total == volume(parallelepiped(rs)));
      CHECK_THROWS_AS(hypersimplex(rs, 0), InvalidArgument);
      CHECK_THROWS_AS(hypersimplex(rs, h), InvalidArgument);
    }
    const auto a3 = RootSystem::build("A", 3);
    CHECK(std::vector<std::uint64_t>{volume(hypersimplex(a3, 1)), volume(hypersimplex(a3, 2)), volume(hypersimplex(a3, 3))} ==
          std::vector<std::uint64_t>{1, 4, 1});
    const auto c2 = RootSystem::build("C", 2);
    CHECK(std::vector<std::uint64_t>{volume(hypersimplex(c2, 1)), volume(hypersimplex(c2, 2)), volume(hypersimplex(c2, 3))} ==
          std::vector<std::uint64_t>{1, 2, 1});
  }

  TEST_CASE("translated hypersimplices are empty or a single point") {
    for (const auto& [type, rank] : std::vector<std::pair<const char*, int>>{{"A", 3}, {"C", 3}, {"B", 3}, {"G", 2}}) {
      CAPTURE(type);
      const WeylStatistics stats{WeylGroup(RootSystem::build(type, rank))};
      const auto& group = stats.group();
      const auto& rs = stats.root_system();
      CHECK(lattice_points(translated_polytope(hypersimplex(rs, 1), group[0])) == std::vector<IntVector>{IntVector::Zero(rank)});
      for (std::int64_t k = 1; k < rs.h_star(); ++k) {
        const auto dk = hypersimplex(rs, k);
        for (std::size_t w = 0; w < group.size(); ++w) {
          const auto winv = group.inverse(w);
          const auto pts = lattice_points(translated_polytope(dk, group[w]));
          if (stats.cdes(winv) != k) CHECK(pts.empty());
          else {
            REQUIRE(pts.size() == 1);
            CHECK(pts[0] == stats.delta(winv));
          }
        }
      }
    }
  }

  TEST_CASE("volume equals the lattice point sum over coset representatives") {
    const WeylStatistics a2{WeylGroup(RootSystem::build("A", 2))};
    const auto reps = a2.coset_representatives();
    CHECK(reps.size() == 2);
    const auto pi = volume_identity_check(parallelepiped(a2.root_system()), a2.group(), reps);
    CHECK(pi.volume == 2);
    CHECK(pi.lattice_sum == 2);
    const auto single = volume_identity_check(hypersimplex(a2.root_system(), 1), a2.group(), reps);
    CHECK(single.volume == 1);
    CHECK(single.holds);
    CHECK(std::count(single.per_coset.begin(), single.per_coset.end(), 1u) == 1);

    std::mt19937_64 rng(2024);
    for (const auto& [type, rank] : std::vector<std::pair<const char*, int>>{{"C", 2}, {"A", 2}, {"A", 3}, {"G", 2}, {"B", 3}}) {
      CAPTURE(type);
      const WeylStatistics stats{WeylGroup(RootSystem::build(type, rank))};
      const auto r = stats.coset_representatives();
      for (int t = 0; t < 20; ++t) {
        const auto p = random_polytope(stats.root_system(), rng);
        const auto report = volume_identity_check(p, stats.group(), r);
        CHECK(report.holds);
      }
    }
  }

  TEST_CASE("thick hypersimplices") {
    for (const char* type : {"A", "C"}) {
      const auto rs = RootSystem::build(type, 2);
      const auto h = rs.h_star();
      const std::vector<std::int64_t> ones{1, 1};
      // the degenerate case is the parallelepiped
      const auto whole = thick_identity_check(rs, ones, 0, h - 1);
      CHECK(whole.holds);
      CHECK(whole.volume == volume(parallelepiped(rs)));
      for (auto c : whole.inner_lattice_counts) CHECK(c == 1);
      // empty range
      const auto empty = thick_identity_check(rs, ones, 2, 1);
      CHECK(empty.volume == 0);
      CHECK(empty.sum == 0);
      for (std::int64_t b1 = 1; b1 <= 2; ++b1)
        for (std::int64_t b2 = 1; b2 <= 2; ++b2) {
          const std::vector<std::int64_t> b{b1, b2};
          const std::int64_t top = rs.mark(1) * b1 + rs.mark(2) * b2;
          for (std::int64_t k = 0; k <= top; ++k)
            for (std::int64_t K = k; K <= top; ++K) {
              CAPTURE(k);
              CAPTURE(K);
              const auto report = thick_identity_check(rs, b, k, K);
              CHECK(report.holds);
              CHECK(report.volume == naive_volume(thick_hypersimplex(rs, b, k, K)));
            }
        }
    }
    // Negating the theta range of the inner polytopes breaks the identity.
    const auto c2 = RootSystem::build("C", 2);
    const std::vector<std::int64_t> ones{1, 1};
    const auto whole = thick_identity_check(c2, ones, 0, c2.h_star() - 1);
    CHECK(whole.negated_range_sum != whole.volume);
    const auto rs = RootSystem::build("A", 2);
    const std::vector<std::int64_t> bad{0, 1};
    CHECK_THROWS_AS(thick_identity_check(rs, bad, 0, 1), InvalidArgument);
    const std::vector<std::int64_t> wrong{1};
    CHECK_THROWS_AS(thick_hypersimplex(rs, wrong, 0, 1), InvalidArgument);
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("Eulerian polynomials and q-integers") {
    CHECK(eulerian_polynomial(0) == Polynomial::constant(1));
    CHECK(eulerian_polynomial(1) == Polynomial({0, 1}));
    CHECK(eulerian_polynomial(2) == Polynomial({0, 1, 1}));
    CHECK(eulerian_polynomial(3) == Polynomial({0, 1, 4, 1}));
    for (int n = 1; n <= 6; ++n) {
      CHECK(eulerian_polynomial(n).evaluate(1) == static_cast<std::int64_t>(factorial(n)));
    }
    CHECK(q_integer(1) == Polynomial::constant(1));
    CHECK(q_integer(3) == Polynomial({1, 1, 1}));
    CHECK_THROWS_AS(eulerian_polynomial(-1), InvalidArgument);
    CHECK((Polynomial({1, 1}) * Polynomial({1, 1})) == Polynomial({1, 2, 1}));
    CHECK(Polynomial({0, 0}).is_zero());
  }
}

#include "fixtures.hpp"

TEST_SUITE("polynomial") {
  TEST_CASE("Eulerian polynomials match brute force") {
    for (int n = 0; n <= 6; ++n) CHECK(alcoved::eulerian_polynomial(n).coeffs() == fixtures::brute_eulerian(n));
  }
}
