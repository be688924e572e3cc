#include "geometry.hpp"

#include <string>

#include "errors.hpp"

namespace alcoved {

AffineMap AffineMap::identity(int rank) {
  return {IntMatrix::Identity(rank, rank), IntVector::Zero(rank)};
}

QVector AffineMap::apply(const QVector& x) const {
  QVector out = alcoved::apply(linear, x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += translation(static_cast<Eigen::Index>(i));
  return out;
}

AffineMap AffineMap::after(const AffineMap& first) const {
  return {linear * first.linear, IntVector(linear * first.translation + translation)};
}

bool AffineMap::is_identity() const {
  return linear.isIdentity() && is_zero(translation);
}

bool is_central(const RootSystem& rs, const IntVector& y) {
  if (y.size() != rs.rank()) return false;
  const auto h = rs.h_star();
  for (const auto& alpha : rs.positive_roots())
    if (y.dot(alpha) % h == 0) return false;
  return true;
}

CentralPoint fundamental_central_point(const RootSystem& rs) { return {rs.rho()}; }

CentralPoint make_central_point(const RootSystem& rs, IntVector y) {
  if (y.size() != rs.rank()) throw InvalidArgument("central point has wrong dimension");
  if (!is_central(rs, y)) throw InvalidArgument("point lies on a hyperplane of the affine arrangement");
  return {std::move(y)};
}

QVector to_coweight(const RootSystem& rs, const CentralPoint& z) {
  return scale(to_rational(z.y), Rational(1, rs.h_star()));
}

Alcove alcove_of(const RootSystem& rs, const CentralPoint& z) {
  if (!is_central(rs, z.y)) throw InvalidArgument("point is not a central point of an alcove");
  Alcove a;
  a.m.reserve(rs.num_positive_roots());
  for (const auto& alpha : rs.positive_roots()) a.m.push_back(floor_div(z.y.dot(alpha), rs.h_star()));
  return a;
}

CentralPoint weyl_alcove(const RootSystem& rs, const WeylElement& w) {
  return {act_on_coweight(w, rs.rho())};
}

CentralPoint translate(const RootSystem& rs, const CentralPoint& z, const IntVector& lambda) {
  if (lambda.size() != rs.rank()) throw InvalidArgument("translation has wrong dimension");
  return {IntVector(z.y + rs.h_star() * lambda)};
}

CentralPoint reflect(const RootSystem& rs, const CentralPoint& z, std::size_t root_index, std::int64_t k) {
  // s_{alpha,k}(x) = x - ((x, alpha) - k) alpha^vee, scaled by h.
  const auto coeff = z.y.dot(rs.root(root_index)) - k * rs.h_star();
  return {IntVector(z.y - coeff * rs.coroot(root_index))};
}

std::vector<CentralPoint> neighbors(const RootSystem& rs, const CentralPoint& z) {
  const Alcove here = alcove_of(rs, z);
  std::vector<CentralPoint> out;
  // A wall H_{alpha,k} of the alcove is a facet iff crossing it changes m_alpha
  // and nothing else.
  for (std::size_t idx = 0; idx < rs.num_positive_roots(); ++idx) {
    for (std::int64_t k : {here.m[idx], here.m[idx] + 1}) {
      CentralPoint other = reflect(rs, z, idx, k);
      const Alcove there = alcove_of(rs, other);
      std::size_t changed = 0;
      for (std::size_t j = 0; j < here.m.size(); ++j) changed += (here.m[j] != there.m[j]);
      if (changed == 1) out.push_back(std::move(other));
    }
  }
  if (out.size() != static_cast<std::size_t>(rs.rank() + 1))
    throw DefectError("alcove has " + std::to_string(out.size()) + " facets, expected rank+1");
  return out;
}

bool in_closed_fundamental_alcove(const RootSystem& rs, const QVector& p) {
  for (const auto& x : p)
    if (x < 0) return false;
  return rs.pairing(p, rs.theta()) <= 1;
}

Reduction reduce_to_fundamental(const RootSystem& rs, const QVector& p) {
  const int r = rs.rank();
  if (p.size() != static_cast<std::size_t>(r)) throw InvalidArgument("point has wrong dimension");
  Reduction red{AffineMap::identity(r), AffineMap::identity(r), p, 0};

  std::vector<AffineMap> walls;
  for (int i = 0; i < r; ++i) {
    // s_i(x) = x - x_i alpha_i^vee
    IntMatrix m = IntMatrix::Identity(r, r);
    m.col(i) -= rs.simple_coroot(i);
    walls.push_back({m, IntVector::Zero(r)});
  }
  {
    // s_{theta,1}(x) = x - ((x, theta) - 1) theta^vee
    IntMatrix m = IntMatrix::Identity(r, r) - rs.theta_covector() * rs.theta().transpose();
    walls.push_back({m, rs.theta_covector()});
  }

  while (true) {
    int violated = -1;
    for (int i = 0; i < r; ++i)
      if (red.image[static_cast<std::size_t>(i)] < 0) { violated = i; break; }
    if (violated < 0 && rs.pairing(red.image, rs.theta()) > 1) violated = r;
    if (violated < 0) break;
    if (++red.steps > kReductionStepLimit) throw DefectError("reduction to the fundamental alcove did not terminate");
    const AffineMap& s = walls[static_cast<std::size_t>(violated)];
    red.image = s.apply(red.image);
    red.map = s.after(red.map);
    red.inverse = red.inverse.after(s);
  }
  return red;
}

}  // namespace alcoved
