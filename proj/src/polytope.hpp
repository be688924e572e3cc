#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "enumeration.hpp"
#include "geometry.hpp"
#include "linalg.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"

namespace alcoved {

struct Bounds {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool empty() const { return lo > hi; }
  bool operator==(const Bounds&) const = default;
};

struct RootConstraint {
  IntVector root;  // simple-root coordinates of a positive root
  std::int64_t min = 0;
  std::int64_t max = 0;
};

/// JSON input format:
///   {"type": "C", "rank": 2,
///    "constraints": [{"root": [1, 0], "min": 0, "max": 1}, ...]}
struct PolytopeSpec {
  RootType type = RootType::A;
  int rank = 0;
  std::vector<RootConstraint> constraints;

  static PolytopeSpec from_json(const nlohmann::json& j);
  static PolytopeSpec from_file(const std::string& path);
  nlohmann::json to_json() const;
};

/// {lambda : k_alpha <= (lambda, alpha) <= K_alpha for every positive root},
/// with one integer interval per positive root.
class AlcovedPolytope {
 public:
  AlcovedPolytope(RootSystem rs, std::vector<Bounds> bounds);

  const RootSystem& root_system() const { return rs_; }
  const std::vector<Bounds>& bounds() const { return bounds_; }
  const Bounds& bounds(std::size_t root_index) const { return bounds_.at(root_index); }
  /// Some interval is empty; the point set is then empty.
  bool is_empty() const;

  bool contains(const QVector& point) const;
  bool contains(const IntVector& coweight) const;
  /// Whether the closed alcove with this central point lies in the polytope.
  bool contains_alcove(const CentralPoint& z) const;

  /// P + lambda for an integral coweight lambda.
  AlcovedPolytope translated(const IntVector& lambda) const;

  PolytopeSpec to_spec() const;

 private:
  RootSystem rs_;
  std::vector<Bounds> bounds_;
};

/// Bounds missing for non-simple roots are completed from the simple-root box
/// (alpha = sum c_i alpha_i with c_i >= 0 gives sum c_i k_i .. sum c_i K_i);
/// user bounds on non-simple roots are intersected with the derived ones.
AlcovedPolytope make_polytope(const RootSystem& rs, std::span<const RootConstraint> constraints);
AlcovedPolytope make_polytope(const PolytopeSpec& spec);

/// 0 <= (lambda, alpha_i) <= 1.
AlcovedPolytope parallelepiped(const RootSystem& rs);
/// -1 <= (lambda, alpha) <= 1 for every positive root.
AlcovedPolytope origin_star(const RootSystem& rs);
/// Delta_k: the slice k-1 <= (lambda, theta) <= k of the parallelepiped, 1 <= k <= h-1.
AlcovedPolytope hypersimplex(const RootSystem& rs, std::int64_t k);
/// 0 <= (lambda, alpha_i) <= b_i and k <= (lambda, theta) <= K.
AlcovedPolytope thick_hypersimplex(const RootSystem& rs, std::span<const std::int64_t> b, std::int64_t k, std::int64_t K);

/// Simple-root bounds lo <= min < max <= hi drawn uniformly, and a theta
/// interval drawn inside the range those bounds allow.
AlcovedPolytope random_polytope(const RootSystem& rs, std::mt19937_64& rng, std::int64_t lo = -2, std::int64_t hi = 2);

/// Number of alcoves = number of central points inside.
std::uint64_t volume(const AlcovedPolytope& p, const EnumerationOptions& options = {});
std::vector<CentralPoint> central_points(const AlcovedPolytope& p, const EnumerationOptions& options = {});
/// Alcove count by breadth-first search over facet-adjacent alcoves, seeded at
/// the first central point found. Independent of the counting loop in volume().
std::uint64_t volume_by_bfs(const AlcovedPolytope& p, const EnumerationOptions& options = {});

/// I(P): number of integral coweights inside.
std::uint64_t lattice_point_count(const AlcovedPolytope& p, const EnumerationOptions& options = {});
std::vector<IntVector> lattice_points(const AlcovedPolytope& p, const EnumerationOptions& options = {});

/// P_(w): bounds k_alpha + inv_alpha(w^-1) .. K_alpha + inv_alpha(w^-1) - 1.
AlcovedPolytope translated_polytope(const AlcovedPolytope& p, const WeylElement& w);

struct VolumeIdentityReport {
  std::uint64_t volume = 0;
  std::vector<std::size_t> representatives;
  std::vector<std::uint64_t> per_coset;
  std::uint64_t lattice_sum = 0;
  bool holds = false;
};

/// Compares Vol(P) with the sum of I(P_(w)) over the given representatives of
/// the cosets W/C.
VolumeIdentityReport volume_identity_check(const AlcovedPolytope& p, const WeylGroup& group,
                                           std::span<const std::size_t> representatives,
                                           const EnumerationOptions& options = {});

struct ThickIdentityReport {
  std::uint64_t volume = 0;
  std::vector<std::uint64_t> slice_volumes;         // Vol(Delta_l), l = 1..h-1
  std::vector<std::uint64_t> inner_lattice_counts;  // I(H(b-1; k-l+1, K-l))
  std::uint64_t sum = 0;
  /// The same sum with the theta range negated, I(H(b-1; l-K+1, l-k)). It
  /// differs from the volume in general and is reported for comparison only.
  std::uint64_t negated_range_sum = 0;
  bool holds = false;
};

/// Vol(H(b; k, K)) = sum_l Vol(Delta_l) I(H(b-1; k-l+1, K-l)): an interior
/// point of Delta_l plus mu lies in H(b; k, K) iff 0 <= (mu, alpha_i) <= b_i-1
/// and k-l+1 <= (mu, theta) <= K-l.
ThickIdentityReport thick_identity_check(const RootSystem& rs, std::span<const std::int64_t> b, std::int64_t k,
                                         std::int64_t K, const EnumerationOptions& options = {});

}  // namespace alcoved
