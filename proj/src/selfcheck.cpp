#include "selfcheck.hpp"

#include <functional>
#include <random>
#include <string>

#include "errors.hpp"
#include "groebner.hpp"
#include "polytope.hpp"
#include "statistics.hpp"
#include "weyl.hpp"

namespace alcoved {

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

constexpr std::size_t kRandomPolytopes = 5;

}  // namespace

nlohmann::json selfcheck(const RootSystem& rs, std::uint64_t seed, const EnumerationOptions& options) {
  nlohmann::json checks = nlohmann::json::array();
  bool all_passed = true;

  auto run = [&](const std::string& name, const std::function<Outcome()>& body) {
    Outcome out;
    try {
      out = body();
    } catch (const DefectError& e) {
      out = {false, e.what()};
    }
    all_passed = all_passed && out.passed;
    checks.push_back({{"name", name}, {"status", out.passed ? "pass" : "fail"}, {"detail", out.detail}});
  };
  auto skip = [&](const std::string& name, const std::string& why) {
    checks.push_back({{"name", name}, {"status", "skipped (" + why + ")"}, {"detail", ""}});
  };

  WeylGroup group(rs);
  run("weyl_order", [&]() -> Outcome {
    const auto expected = group.weyl_formula_order();
    return {group.size() == expected, std::to_string(group.size()) + " elements, formula " + std::to_string(expected)};
  });

  std::optional<WeylStatistics> stats;
  run("c_group", [&]() -> Outcome {
    stats.emplace(group);
    for (std::size_t w = 0; w < group.size(); ++w)
      if (!delta_translates_into_parallelepiped(rs, group[w])) return {false, "delta_w misplaces an alcove"};
    return {true, "|C| = " + std::to_string(stats->c_group().size())};
  });
  if (!stats) {
    return {{"type", std::string(1, type_letter(rs.type()))}, {"rank", rs.rank()}, {"seed", seed},
            {"checks", checks}, {"all_passed", false}};
  }

  DoubleCosetReport dc;
  run("double_coset", [&]() -> Outcome {
    dc = double_coset_check(*stats);
    return {dc.cdes_failures == 0, std::to_string(dc.checked) + " products checked"};
  });
  run("cmaj_twist", [&]() -> Outcome {
    return {dc.cmaj_failures == 0 && dc.remark_holds, dc.remark_holds ? "" : "cmaj and cmaj of inverse differ"};
  });
  run("qweyl", [&]() -> Outcome {
    const auto rep = qweyl_check(*stats);
    return {rep.holds, rep.scalar_lhs.to_string()};
  });
  run("hypersimplex_statistics", [&]() -> Outcome {
    const auto rep = hypersimplex_statistic_check(*stats, options);
    return {rep.holds, rep.generating_function.to_string()};
  });

  std::mt19937_64 rng(seed);
  run("volume_identity", [&]() -> Outcome {
    const auto reps = stats->coset_representatives();
    for (std::size_t s = 0; s < kRandomPolytopes; ++s) {
      const auto p = random_polytope(rs, rng);
      const auto rep = volume_identity_check(p, group, reps, options);
      if (!rep.holds) return {false, "Vol " + std::to_string(rep.volume) + " vs " + std::to_string(rep.lattice_sum)};
      if (volume_by_bfs(p, options) != rep.volume) return {false, "BFS alcove count differs from the volume"};
    }
    return {true, std::to_string(kRandomPolytopes) + " random polytopes"};
  });

  if (!groebner_supported(rs)) {
    skip("groebner", "unsupported type");
  } else {
    run("groebner", [&]() -> Outcome {
      if (const auto lattice = vertex_lattice_self_check(rs, rng, 200); !lattice.ok())
        return {false, "vertex lattice: " + lattice.example};
      std::vector<RootConstraint> cs;
      for (int i = 0; i < rs.rank(); ++i) cs.push_back({IntVector::Unit(rs.rank(), i), 0, 1});
      cs.push_back({rs.theta(), 0, std::min<std::int64_t>(2, rs.h_star() - 1)});
      const auto p = make_polytope(rs, cs);
      const GroebnerBasis basis(p, options);
      const auto simplices = basis.triangulate(options);
      return {true, std::to_string(simplices.size()) + " simplices, " + std::to_string(basis.binomials().size()) +
                        " binomials"};
    });
  }

  return {{"type", std::string(1, type_letter(rs.type()))}, {"rank", rs.rank()}, {"seed", seed},
          {"checks", checks}, {"all_passed", all_passed}};
}

}  // namespace alcoved
