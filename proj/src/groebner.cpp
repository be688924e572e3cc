#include "groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "errors.hpp"
#include "geometry.hpp"

namespace alcoved {

namespace {

std::int64_t marks_lcm(const RootSystem& rs) {
  std::int64_t l = 1;
  for (int i = 1; i <= rs.rank(); ++i) l = std::lcm(l, rs.mark(i));
  return l;
}

// L * (v, alpha) for v in n-coordinates.
std::int64_t scaled_pairing(const RootSystem& rs, std::int64_t L, const IntVector& n, const IntVector& alpha) {
  std::int64_t total = 0;
  for (int i = 0; i < rs.rank(); ++i) total += n(i) * alpha(i) * (L / rs.mark(i + 1));
  return total;
}

QVector c_vector(const RootSystem& rs, int i) {  // 0-based
  QVector c(static_cast<std::size_t>(rs.rank()), Rational(0));
  c[static_cast<std::size_t>(i)] = Rational(1, rs.mark(i + 1));
  return c;
}

std::string describe(const LatticeVertex& v) { return to_string(to_rational(v.n)); }

}  // namespace

bool groebner_supported(const RootSystem& rs) {
  switch (rs.type()) {
    case RootType::A:
    case RootType::C:
      return true;
    case RootType::D:
      return rs.rank() == 4;
    default:
      return false;
  }
}

void require_groebner_support(const RootSystem& rs) {
  if (!groebner_supported(rs))
    throw InvalidArgument("Groebner bases are only available for types A_n, C_n and D_4, not " + rs.label());
}

QVector to_coweight(const RootSystem& rs, const LatticeVertex& v) {
  QVector out(static_cast<std::size_t>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i) out[static_cast<std::size_t>(i)] = Rational(v.n(i), rs.mark(i + 1));
  return out;
}

bool in_vertex_lattice(const RootSystem& rs, const QVector& coweight) {
  for (int i = 0; i < rs.rank(); ++i)
    if ((coweight[static_cast<std::size_t>(i)] * rs.mark(i + 1)).denominator() != 1) return false;
  return true;
}

LatticeVertex to_lattice_vertex(const RootSystem& rs, const QVector& coweight) {
  if (!in_vertex_lattice(rs, coweight)) throw InvalidArgument("point " + to_string(coweight) + " is not in N");
  IntVector n(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) n(i) = (coweight[static_cast<std::size_t>(i)] * rs.mark(i + 1)).numerator();
  return LatticeVertex{n};
}

std::pair<LatticeVertex, LatticeVertex> midpoint_pair(const RootSystem& rs, const LatticeVertex& a,
                                                      const LatticeVertex& b) {
  require_groebner_support(rs);
  if (a.n.size() != rs.rank() || b.n.size() != rs.rank()) throw InvalidArgument("vertex has the wrong dimension");
  if (a == b) throw InvalidArgument("midpoint_pair needs two distinct vertices");
  const QVector mid = scale(add(to_coweight(rs, a), to_coweight(rs, b)), Rational(1, 2));
  if (in_vertex_lattice(rs, mid)) {
    auto c = to_lattice_vertex(rs, mid);
    return {c, c};
  }
  const Reduction red = reduce_to_fundamental(rs, mid);
  // The image is (c_i + c_j)/2 or c_i/2: its c-coordinates 2 z_k a_k are 0 or 1.
  std::vector<int> ones;
  for (int k = 0; k < rs.rank(); ++k) {
    const Rational t = 2 * red.image[static_cast<std::size_t>(k)] * rs.mark(k + 1);
    if (t == 1) {
      ones.push_back(k);
    } else if (t != 0) {
      throw DefectError("midpoint reduced to an unexpected point " + to_string(red.image));
    }
  }
  QVector first, second;
  if (ones.size() == 2) {
    first = c_vector(rs, ones[0]);
    second = c_vector(rs, ones[1]);
  } else if (ones.size() == 1) {
    first = c_vector(rs, ones[0]);
    second = QVector(static_cast<std::size_t>(rs.rank()), Rational(0));
  } else {
    throw DefectError("midpoint reduced to an unexpected point " + to_string(red.image));
  }
  LatticeVertex u = to_lattice_vertex(rs, red.inverse.apply(first));
  LatticeVertex v = to_lattice_vertex(rs, red.inverse.apply(second));
  if (u.n + v.n != a.n + b.n)
    throw DefectError("midpoint pair of " + describe(a) + " and " + describe(b) + " does not preserve the sum");
  if (v < u) std::swap(u, v);
  return {u, v};
}

std::vector<LatticeVertex> polytope_vertices(const AlcovedPolytope& p, const EnumerationOptions& options) {
  const auto& rs = p.root_system();
  require_groebner_support(rs);
  if (p.is_empty()) return {};
  const int r = rs.rank();
  const std::int64_t L = marks_lcm(rs);
  std::vector<std::int64_t> lower(static_cast<std::size_t>(r)), upper(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    lower[static_cast<std::size_t>(i)] = rs.mark(i + 1) * p.bounds(static_cast<std::size_t>(i)).lo;
    upper[static_cast<std::size_t>(i)] = rs.mark(i + 1) * p.bounds(static_cast<std::size_t>(i)).hi;
  }
  std::vector<LinearConstraint> constraints;
  for (std::size_t idx = static_cast<std::size_t>(r); idx < rs.num_positive_roots(); ++idx) {
    IntVector coeffs(r);
    for (int i = 0; i < r; ++i) coeffs(i) = rs.root(idx)(i) * (L / rs.mark(i + 1));
    constraints.push_back({coeffs, L * p.bounds(idx).lo, L * p.bounds(idx).hi});
  }
  std::vector<LatticeVertex> out;
  BoxEnumerator(lower, upper, constraints).for_each([&](const IntVector& n) { out.push_back(LatticeVertex{n}); }, options);
  std::sort(out.begin(), out.end());
  return out;
}

GroebnerBasis::GroebnerBasis(const AlcovedPolytope& p, const EnumerationOptions& options) : polytope_(p) {
  const auto& rs = p.root_system();
  require_groebner_support(rs);
  if (volume(p, options) == 0) throw InvalidArgument("Groebner basis needs a polytope of positive volume");
  vertices_ = polytope_vertices(p, options);

  const std::int64_t L = marks_lcm(rs);
  weights_.reserve(vertices_.size());
  for (const auto& v : vertices_) {
    std::int64_t w = 0;
    for (std::size_t idx = 0; idx < rs.num_positive_roots(); ++idx) {
      const std::int64_t y = scaled_pairing(rs, L, v.n, rs.root(idx));
      for (std::int64_t k = p.bounds(idx).lo; k <= p.bounds(idx).hi; ++k) w += std::abs(y - L * k);
    }
    weights_.push_back(w);
  }

  const std::size_t n = vertices_.size();
  rules_.assign(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto [u, v] = midpoint_pair(rs, vertices_[i], vertices_[j]);
      if (u == vertices_[i] && v == vertices_[j]) continue;
      const auto ui = index_of(u), vi = index_of(v);
      if (!ui || !vi)
        throw DefectError("midpoint pair of " + describe(vertices_[i]) + " and " + describe(vertices_[j]) +
                          " leaves the polytope");
      rules_[i * n + j] = rules_[j * n + i] = static_cast<std::int32_t>(binomials_.size());
      binomials_.push_back(Binomial{{i, j}, {*ui, *vi}});
    }
  }
}

std::optional<std::size_t> GroebnerBasis::index_of(const LatticeVertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::pair<std::size_t, std::size_t>> GroebnerBasis::rule(std::size_t i, std::size_t j) const {
  const auto n = vertices_.size();
  if (i >= n || j >= n) throw InvalidArgument("vertex index out of range");
  const auto b = rules_[i * n + j];
  if (b < 0) return std::nullopt;
  return binomials_[static_cast<std::size_t>(b)].trail;
}

std::int64_t GroebnerBasis::weight(const VertexMonomial& m) const {
  std::int64_t total = 0;
  for (auto v : m) total += weights_.at(v);
  return total;
}

VertexMonomial GroebnerBasis::normal_form(VertexMonomial m, std::mt19937_64* rng, RewriteTrace* trace) const {
  const auto n = vertices_.size();
  for (auto v : m)
    if (v >= n) throw InvalidArgument("vertex index out of range");
  std::sort(m.begin(), m.end());
  std::int64_t current = weight(m);
  if (trace) trace->weights.push_back(current);
  std::vector<std::pair<std::size_t, std::size_t>> applicable;
  for (std::size_t step = 0;; ++step) {
    applicable.clear();
    for (std::size_t p = 0; p < m.size(); ++p)
      for (std::size_t q = p + 1; q < m.size(); ++q)
        if (m[p] != m[q] && rules_[m[p] * n + m[q]] >= 0) applicable.emplace_back(p, q);
    if (applicable.empty()) return m;
    if (step >= kRewriteStepLimit) throw DefectError("rewriting did not terminate");
    std::size_t pick = 0;
    if (rng) pick = std::uniform_int_distribution<std::size_t>(0, applicable.size() - 1)(*rng);
    const auto [p, q] = applicable[pick];
    const auto trail = binomials_[static_cast<std::size_t>(rules_[m[p] * n + m[q]])].trail;
    m[p] = trail.first;
    m[q] = trail.second;
    std::sort(m.begin(), m.end());
    const std::int64_t next = weight(m);
    if (next >= current) throw DefectError("rewrite step did not decrease the coherent weight");
    current = next;
    if (trace) {
      ++trace->steps;
      trace->weights.push_back(current);
    }
  }
}

bool GroebnerBasis::is_standard(const VertexMonomial& m) const {
  const auto n = vertices_.size();
  for (std::size_t p = 0; p < m.size(); ++p)
    for (std::size_t q = p + 1; q < m.size(); ++q)
      if (m[p] != m[q] && rules_.at(m[p] * n + m[q]) >= 0) return false;
  return true;
}

std::vector<std::vector<std::size_t>> GroebnerBasis::triangulate(const EnumerationOptions& options) const {
  const auto n = vertices_.size();
  const auto size = static_cast<std::size_t>(root_system().rank() + 1);
  std::vector<std::vector<std::size_t>> adjacent(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rules_[i * n + j] < 0) adjacent[i].push_back(j);

  std::vector<std::vector<std::size_t>> simplices;
  std::vector<std::size_t> clique;
  auto extend = [&](auto&& self, const std::vector<std::size_t>& candidates) -> void {
    if (clique.size() == size) {
      simplices.push_back(clique);
      return;
    }
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto v = candidates[c];
      std::vector<std::size_t> next;
      for (std::size_t d = c + 1; d < candidates.size(); ++d)
        if (std::binary_search(adjacent[v].begin(), adjacent[v].end(), candidates[d])) next.push_back(candidates[d]);
      if (clique.size() + 1 + next.size() < size) continue;
      clique.push_back(v);
      self(self, next);
      clique.pop_back();
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    clique.assign(1, v);
    extend(extend, adjacent[v]);
  }

  const int r = root_system().rank();
  for (const auto& s : simplices) {
    IntMatrix m(r, r);
    for (int k = 0; k < r; ++k) m.row(k) = (vertices_[s[static_cast<std::size_t>(k + 1)]].n - vertices_[s[0]].n).transpose();
    if (std::abs(determinant(m)) != 1) throw DefectError("triangulation contains a non-unimodular simplex");
  }
  const auto vol = volume(polytope_, options);
  if (simplices.size() != vol)
    throw DefectError("triangulation has " + std::to_string(simplices.size()) + " simplices but the volume is " +
                      std::to_string(vol));
  return simplices;
}

bool midpoint_closure_check(const RootSystem& rs, const std::vector<LatticeVertex>& vertices) {
  require_groebner_support(rs);
  std::set<LatticeVertex> members(vertices.begin(), vertices.end());
  const std::vector<LatticeVertex> unique(members.begin(), members.end());
  for (std::size_t i = 0; i < unique.size(); ++i)
    for (std::size_t j = i + 1; j < unique.size(); ++j) {
      const auto [u, v] = midpoint_pair(rs, unique[i], unique[j]);
      if (!members.count(u) || !members.count(v)) return false;
    }
  return true;
}

VertexLatticeReport vertex_lattice_self_check(const RootSystem& rs, std::mt19937_64& rng, std::size_t samples) {
  require_groebner_support(rs);
  const int r = rs.rank();
  VertexLatticeReport report;
  report.samples = samples;
  std::vector<QVector> vertices{QVector(static_cast<std::size_t>(r), Rational(0))};
  for (int i = 0; i < r; ++i) vertices.push_back(c_vector(rs, i));
  auto note = [&](const std::string& what) {
    if (report.example.empty()) report.example = what;
  };

  std::uniform_int_distribution<std::int64_t> coord(-6, 6);
  for (std::size_t s = 0; s < samples; ++s) {
    IntVector n(r);
    for (int i = 0; i < r; ++i) n(i) = coord(rng);
    const auto image = reduce_to_fundamental(rs, to_coweight(rs, LatticeVertex{n})).image;
    if (std::find(vertices.begin(), vertices.end(), image) == vertices.end()) {
      ++report.reduction_failures;
      note(describe(LatticeVertex{n}) + " reduces to " + to_string(image));
    }
  }

  for (int j = 0; j <= r; ++j) {
    for (const auto& v : vertices) {
      QVector image;
      if (j == 0) {
        // s_{theta,1}: lambda - ((lambda, theta) - 1) theta^vee
        const Rational t = rs.pairing(v, rs.theta()) - 1;
        image = subtract(v, scale(to_rational(rs.theta_covector()), t));
      } else {
        const Rational t = rs.pairing(v, IntVector(IntVector::Unit(r, j - 1)));
        image = subtract(v, scale(to_rational(rs.simple_coroot(j - 1)), t));
      }
      if (!in_vertex_lattice(rs, image)) {
        ++report.closure_failures;
        note((j == 0 ? std::string("s_theta,1") : "s_" + std::to_string(j)) + " maps " + to_string(v) + " to " +
             to_string(image) + ", outside N");
      }
    }
  }
  return report;
}

}  // namespace alcoved
