#include "polytope.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace alcoved {

using nlohmann::json;

PolytopeSpec PolytopeSpec::from_json(const json& j) {
  try {
    PolytopeSpec spec;
    spec.type = parse_root_type(j.at("type").get<std::string>());
    spec.rank = j.at("rank").get<int>();
    for (const auto& c : j.at("constraints")) {
      RootConstraint rc;
      rc.root = make_vector(c.at("root").get<std::vector<std::int64_t>>());
      rc.min = c.at("min").get<std::int64_t>();
      rc.max = c.at("max").get<std::int64_t>();
      spec.constraints.push_back(std::move(rc));
    }
    return spec;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed polytope spec: ") + e.what());
  }
}

PolytopeSpec PolytopeSpec::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open spec file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InvalidArgument("spec file '" + path + "' is not valid JSON: " + e.what());
  }
  return from_json(j);
}

json PolytopeSpec::to_json() const {
  json constraints_json = json::array();
  for (const auto& c : constraints)
    constraints_json.push_back({{"root", to_std(c.root)}, {"min", c.min}, {"max", c.max}});
  return {{"type", std::string(1, type_letter(type))}, {"rank", rank}, {"constraints", constraints_json}};
}

AlcovedPolytope::AlcovedPolytope(RootSystem rs, std::vector<Bounds> bounds) : rs_(std::move(rs)), bounds_(std::move(bounds)) {
  if (bounds_.size() != rs_.num_positive_roots()) throw InvalidArgument("one bound pair per positive root is required");
}

bool AlcovedPolytope::is_empty() const {
  return std::any_of(bounds_.begin(), bounds_.end(), [](const Bounds& b) { return b.empty(); });
}

bool AlcovedPolytope::contains(const QVector& point) const {
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const Rational v = rs_.pairing(point, rs_.root(i));
    if (v < bounds_[i].lo || v > bounds_[i].hi) return false;
  }
  return true;
}

bool AlcovedPolytope::contains(const IntVector& coweight) const {
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const auto v = rs_.pairing(coweight, rs_.root(i));
    if (v < bounds_[i].lo || v > bounds_[i].hi) return false;
  }
  return true;
}

bool AlcovedPolytope::contains_alcove(const CentralPoint& z) const {
  const auto h = rs_.h_star();
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    const auto v = z.y.dot(rs_.root(i));
    if (v < h * bounds_[i].lo || v > h * bounds_[i].hi) return false;
  }
  return true;
}

AlcovedPolytope AlcovedPolytope::translated(const IntVector& lambda) const {
  std::vector<Bounds> b = bounds_;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto shift = rs_.pairing(lambda, rs_.root(i));
    b[i].lo += shift;
    b[i].hi += shift;
  }
  return {rs_, std::move(b)};
}

PolytopeSpec AlcovedPolytope::to_spec() const {
  PolytopeSpec spec{rs_.type(), rs_.rank(), {}};
  for (std::size_t i = 0; i < bounds_.size(); ++i) spec.constraints.push_back({rs_.root(i), bounds_[i].lo, bounds_[i].hi});
  return spec;
}

AlcovedPolytope make_polytope(const RootSystem& rs, std::span<const RootConstraint> constraints) {
  const auto r = static_cast<std::size_t>(rs.rank());
  std::vector<std::optional<Bounds>> user(rs.num_positive_roots());
  for (const auto& c : constraints) {
    const auto idx = rs.require_positive_root(c.root);
    if (c.min > c.max) throw InvalidArgument("constraint min exceeds max");
    Bounds b{c.min, c.max};
    if (user[idx]) b = {std::max(user[idx]->lo, b.lo), std::min(user[idx]->hi, b.hi)};
    user[idx] = b;
  }
  for (std::size_t i = 0; i < r; ++i)
    if (!user[i]) throw InvalidArgument("unbounded polytope: simple root alpha_" + std::to_string(i + 1) + " has no bounds");

  std::vector<Bounds> bounds(rs.num_positive_roots());
  for (std::size_t idx = 0; idx < bounds.size(); ++idx) {
    const auto& alpha = rs.root(idx);
    Bounds derived{0, 0};
    for (std::size_t i = 0; i < r; ++i) {
      derived.lo += alpha(static_cast<Eigen::Index>(i)) * user[i]->lo;
      derived.hi += alpha(static_cast<Eigen::Index>(i)) * user[i]->hi;
    }
    if (user[idx]) derived = {std::max(derived.lo, user[idx]->lo), std::min(derived.hi, user[idx]->hi)};
    bounds[idx] = derived;
  }
  return {rs, std::move(bounds)};
}

AlcovedPolytope make_polytope(const PolytopeSpec& spec) {
  return make_polytope(RootSystem::build(spec.type, spec.rank), spec.constraints);
}

AlcovedPolytope parallelepiped(const RootSystem& rs) {
  std::vector<RootConstraint> cs;
  for (int i = 0; i < rs.rank(); ++i) cs.push_back({IntVector::Unit(rs.rank(), i), 0, 1});
  return make_polytope(rs, cs);
}

AlcovedPolytope origin_star(const RootSystem& rs) {
  return {rs, std::vector<Bounds>(rs.num_positive_roots(), Bounds{-1, 1})};
}

AlcovedPolytope hypersimplex(const RootSystem& rs, std::int64_t k) {
  if (k < 1 || k > rs.h_star() - 1)
    throw InvalidArgument("hypersimplex index must lie in [1, " + std::to_string(rs.h_star() - 1) + "]");
  std::vector<RootConstraint> cs;
  for (int i = 0; i < rs.rank(); ++i) cs.push_back({IntVector::Unit(rs.rank(), i), 0, 1});
  cs.push_back({rs.theta(), k - 1, k});
  return make_polytope(rs, cs);
}

AlcovedPolytope thick_hypersimplex(const RootSystem& rs, std::span<const std::int64_t> b, std::int64_t k, std::int64_t K) {
  if (b.size() != static_cast<std::size_t>(rs.rank())) throw InvalidArgument("thick hypersimplex needs one b_i per simple root");
  std::vector<RootConstraint> cs;
  for (int i = 0; i < rs.rank(); ++i) {
    if (b[static_cast<std::size_t>(i)] < 0) throw InvalidArgument("thick hypersimplex side lengths must be nonnegative");
    cs.push_back({IntVector::Unit(rs.rank(), i), 0, b[static_cast<std::size_t>(i)]});
  }
  // An empty theta range yields an empty polytope rather than an error.
  std::vector<Bounds> bounds = make_polytope(rs, cs).bounds();
  auto& t = bounds[rs.theta_index()];
  t = {std::max(t.lo, k), std::min(t.hi, K)};
  return {rs, std::move(bounds)};
}

AlcovedPolytope random_polytope(const RootSystem& rs, std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (lo >= hi) throw InvalidArgument("random polytope range must have lo < hi");
  using Dist = std::uniform_int_distribution<std::int64_t>;
  std::vector<RootConstraint> cs;
  std::int64_t theta_lo = 0, theta_hi = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    const auto a = Dist(lo, hi - 1)(rng);
    const auto b = Dist(a + 1, hi)(rng);
    cs.push_back({IntVector::Unit(rs.rank(), i), a, b});
    theta_lo += rs.mark(i + 1) * a;
    theta_hi += rs.mark(i + 1) * b;
  }
  auto t1 = Dist(theta_lo, theta_hi)(rng);
  auto t2 = Dist(theta_lo, theta_hi)(rng);
  if (t1 > t2) std::swap(t1, t2);
  cs.push_back({rs.theta(), t1, t2});
  return make_polytope(rs, cs);
}

namespace {

BoxEnumerator central_enumerator(const AlcovedPolytope& p) {
  const auto& rs = p.root_system();
  const auto h = rs.h_star();
  const auto r = static_cast<std::size_t>(rs.rank());
  std::vector<std::int64_t> lo(r), hi(r);
  for (std::size_t i = 0; i < r; ++i) {
    lo[i] = h * p.bounds(i).lo;
    hi[i] = h * p.bounds(i).hi;
  }
  std::vector<LinearConstraint> cons;
  for (std::size_t idx = 0; idx < rs.num_positive_roots(); ++idx)
    cons.push_back({rs.root(idx), h * p.bounds(idx).lo, h * p.bounds(idx).hi});
  return {lo, hi, cons, h};
}

BoxEnumerator lattice_enumerator(const AlcovedPolytope& p) {
  const auto& rs = p.root_system();
  const auto r = static_cast<std::size_t>(rs.rank());
  std::vector<std::int64_t> lo(r), hi(r);
  for (std::size_t i = 0; i < r; ++i) {
    lo[i] = p.bounds(i).lo;
    hi[i] = p.bounds(i).hi;
  }
  std::vector<LinearConstraint> cons;
  for (std::size_t idx = r; idx < rs.num_positive_roots(); ++idx)
    cons.push_back({rs.root(idx), p.bounds(idx).lo, p.bounds(idx).hi});
  return {lo, hi, cons, 0};
}

}  // namespace

std::uint64_t volume(const AlcovedPolytope& p, const EnumerationOptions& options) {
  if (p.is_empty()) return 0;
  return central_enumerator(p).count(options);
}

std::vector<CentralPoint> central_points(const AlcovedPolytope& p, const EnumerationOptions& options) {
  std::vector<CentralPoint> out;
  if (p.is_empty()) return out;
  central_enumerator(p).for_each([&](const IntVector& y) { out.push_back({y}); }, options);
  return out;
}

std::uint64_t volume_by_bfs(const AlcovedPolytope& p, const EnumerationOptions& options) {
  if (p.is_empty()) return 0;
  const auto& rs = p.root_system();
  const auto first = central_enumerator(p).first(options);
  if (!first) return 0;
  const CentralPoint seed{*first};
  std::unordered_set<CentralPoint, CentralPointHash> seen{seed};
  std::deque<CentralPoint> queue{seed};
  while (!queue.empty()) {
    CentralPoint z = std::move(queue.front());
    queue.pop_front();
    for (auto& nb : neighbors(rs, z)) {
      if (!p.contains_alcove(nb) || seen.contains(nb)) continue;
      if (seen.size() >= options.budget) throw BudgetExceeded("alcove BFS exceeded the budget");
      seen.insert(nb);
      queue.push_back(std::move(nb));
    }
  }
  return seen.size();
}

std::uint64_t lattice_point_count(const AlcovedPolytope& p, const EnumerationOptions& options) {
  if (p.is_empty()) return 0;
  return lattice_enumerator(p).count(options);
}

std::vector<IntVector> lattice_points(const AlcovedPolytope& p, const EnumerationOptions& options) {
  std::vector<IntVector> out;
  if (p.is_empty()) return out;
  lattice_enumerator(p).for_each([&](const IntVector& x) { out.push_back(x); }, options);
  return out;
}

AlcovedPolytope translated_polytope(const AlcovedPolytope& p, const WeylElement& w) {
  const auto& rs = p.root_system();
  const WeylElement winv = inverse(w);
  std::vector<Bounds> b = p.bounds();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int d = inv_at(rs, winv, i);
    b[i].lo += d;
    b[i].hi += d - 1;
  }
  return {rs, std::move(b)};
}

VolumeIdentityReport volume_identity_check(const AlcovedPolytope& p, const WeylGroup& group,
                                           std::span<const std::size_t> representatives,
                                           const EnumerationOptions& options) {
  VolumeIdentityReport report;
  report.volume = volume(p, options);
  report.representatives.assign(representatives.begin(), representatives.end());
  for (auto w : representatives) {
    const auto count = lattice_point_count(translated_polytope(p, group[w]), options);
    report.per_coset.push_back(count);
    report.lattice_sum += count;
  }
  report.holds = report.volume == report.lattice_sum;
  return report;
}

ThickIdentityReport thick_identity_check(const RootSystem& rs, std::span<const std::int64_t> b, std::int64_t k,
                                         std::int64_t K, const EnumerationOptions& options) {
  ThickIdentityReport report;
  report.volume = volume(thick_hypersimplex(rs, b, k, K), options);
  std::vector<std::int64_t> inner(b.begin(), b.end());
  for (auto& x : inner) {
    if (x < 1) throw InvalidArgument("thick identity needs every b_i >= 1");
    x -= 1;
  }
  for (std::int64_t l = 1; l <= rs.h_star() - 1; ++l) {
    const auto vol = volume(hypersimplex(rs, l), options);
    const auto count = lattice_point_count(thick_hypersimplex(rs, inner, k - l + 1, K - l), options);
    report.slice_volumes.push_back(vol);
    report.inner_lattice_counts.push_back(count);
    report.sum += vol * count;
    report.negated_range_sum += vol * lattice_point_count(thick_hypersimplex(rs, inner, l - K + 1, l - k), options);
  }
  report.holds = report.volume == report.sum;
  return report;
}

}  // namespace alcoved
