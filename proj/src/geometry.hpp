#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linalg.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"

namespace alcoved {

/// The unique point of (1/h) * coweight lattice inside an alcove, stored as
/// the integer vector y with point = y / h_star.
struct CentralPoint {
  IntVector y;

  bool operator==(const CentralPoint& other) const { return y.size() == other.y.size() && y == other.y; }
};

struct CentralPointHash {
  std::size_t operator()(const CentralPoint& z) const noexcept { return IntVectorHash{}(z.y); }
};

/// m_alpha for every positive root (indexed as in RootSystem::positive_roots).
struct Alcove {
  std::vector<std::int64_t> m;

  bool operator==(const Alcove&) const = default;
};

/// x -> linear * x + translation on coweight coordinates. Maps produced by
/// reduction have a Weyl coweight action as linear part and a coroot lattice
/// translation, so both are integral.
struct AffineMap {
  IntMatrix linear;
  IntVector translation;

  static AffineMap identity(int rank);
  QVector apply(const QVector& x) const;
  /// this after `first`: x -> this(first(x)).
  AffineMap after(const AffineMap& first) const;
  bool is_identity() const;
};

struct Reduction {
  AffineMap map;      // sends the input into the closed fundamental alcove
  AffineMap inverse;  // map^-1
  QVector image;
  std::size_t steps = 0;
};

/// True iff no positive root pairs with y to a multiple of h_star.
bool is_central(const RootSystem& rs, const IntVector& y);

CentralPoint fundamental_central_point(const RootSystem& rs);
/// Throws InvalidArgument if y lies on a hyperplane.
CentralPoint make_central_point(const RootSystem& rs, IntVector y);
QVector to_coweight(const RootSystem& rs, const CentralPoint& z);

Alcove alcove_of(const RootSystem& rs, const CentralPoint& z);
/// Central point of w(A_o).
CentralPoint weyl_alcove(const RootSystem& rs, const WeylElement& w);
/// z + lambda for an integral coweight lambda.
CentralPoint translate(const RootSystem& rs, const CentralPoint& z, const IntVector& lambda);
/// Reflection of z in H_{alpha,k} for the positive root at `root_index`.
CentralPoint reflect(const RootSystem& rs, const CentralPoint& z, std::size_t root_index, std::int64_t k);
/// Central points of the r+1 alcoves sharing a facet with the alcove of z.
std::vector<CentralPoint> neighbors(const RootSystem& rs, const CentralPoint& z);

/// Folds p into the closed fundamental alcove by simple affine reflections,
/// always applying the lowest-index violated wall (s_1..s_r, then s_{theta,1}).
/// Throws DefectError after kReductionStepLimit steps.
Reduction reduce_to_fundamental(const RootSystem& rs, const QVector& p);
constexpr std::size_t kReductionStepLimit = 1'000'000;

bool in_closed_fundamental_alcove(const RootSystem& rs, const QVector& p);

}  // namespace alcoved
