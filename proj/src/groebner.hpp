#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "enumeration.hpp"
#include "linalg.hpp"
#include "polytope.hpp"
#include "rootsys.hpp"

namespace alcoved {

/// A vertex of the affine arrangement, in the basis c_i = omega_i / a_i.
struct LatticeVertex {
  IntVector n;

  bool operator==(const LatticeVertex& other) const { return n.size() == other.n.size() && n == other.n; }
  bool operator<(const LatticeVertex& other) const { return lex_less(n, other.n); }
};

/// A_n, C_n and D_4: the types whose arrangement vertices form the lattice N.
bool groebner_supported(const RootSystem& rs);
/// Throws InvalidArgument for other types.
void require_groebner_support(const RootSystem& rs);

QVector to_coweight(const RootSystem& rs, const LatticeVertex& v);
/// Throws InvalidArgument if the coweight is not in N.
LatticeVertex to_lattice_vertex(const RootSystem& rs, const QVector& coweight);
bool in_vertex_lattice(const RootSystem& rs, const QVector& coweight);

/// (u(a,b), v(a,b)), ordered so that u <= v lexicographically.
std::pair<LatticeVertex, LatticeVertex> midpoint_pair(const RootSystem& rs, const LatticeVertex& a,
                                                      const LatticeVertex& b);

/// All points of N in P, lexicographically sorted.
std::vector<LatticeVertex> polytope_vertices(const AlcovedPolytope& p, const EnumerationOptions& options = {});

/// x_a x_b - x_u x_v with {a, b} as the leading pair (indices into the
/// vertex list of the basis).
struct Binomial {
  std::pair<std::size_t, std::size_t> lead;
  std::pair<std::size_t, std::size_t> trail;
};

/// Sorted multiset of vertex indices.
using VertexMonomial = std::vector<std::size_t>;

struct RewriteTrace {
  std::size_t steps = 0;
  std::vector<std::int64_t> weights;  // weight before the first step and after each step
};

/// The marked quadratic binomials of an alcoved polytope and the rewriting
/// system they define.
class GroebnerBasis {
 public:
  static constexpr std::size_t kRewriteStepLimit = 1'000'000;

  /// Throws InvalidArgument for unsupported types or an empty polytope, and
  /// DefectError if some u(a,b), v(a,b) falls outside P.
  explicit GroebnerBasis(const AlcovedPolytope& p, const EnumerationOptions& options = {});

  const RootSystem& root_system() const { return polytope_.root_system(); }
  const AlcovedPolytope& polytope() const { return polytope_; }
  const std::vector<LatticeVertex>& vertices() const { return vertices_; }
  const std::vector<Binomial>& binomials() const { return binomials_; }
  std::optional<std::size_t> index_of(const LatticeVertex& v) const;

  /// The trailing pair for {i, j}, if x_i x_j is a leading term.
  std::optional<std::pair<std::size_t, std::size_t>> rule(std::size_t i, std::size_t j) const;

  /// Coherent weight: sum over vertices of sum |L((v, alpha) - k)| over the
  /// hyperplanes H_{alpha,k} with k_alpha <= k <= K_alpha, L = lcm of marks.
  std::int64_t weight(std::size_t vertex) const { return weights_[vertex]; }
  std::int64_t weight(const VertexMonomial& m) const;

  /// Rewrites until no rule applies. With `rng` the applicable pair is chosen
  /// at random, otherwise the first one in index order. Throws DefectError if
  /// a step fails to decrease the weight or the step limit is hit.
  VertexMonomial normal_form(VertexMonomial m, std::mt19937_64* rng = nullptr, RewriteTrace* trace = nullptr) const;
  bool is_standard(const VertexMonomial& m) const;

  /// (r+1)-sets of pairwise standard vertices. Throws DefectError unless
  /// their number equals Vol(P) and each one is a unimodular simplex of N.
  std::vector<std::vector<std::size_t>> triangulate(const EnumerationOptions& options = {}) const;

 private:
  AlcovedPolytope polytope_;
  std::vector<LatticeVertex> vertices_;
  std::vector<std::int64_t> weights_;
  std::vector<Binomial> binomials_;
  // rules_[i * n + j]: index into binomials_, or -1.
  std::vector<std::int32_t> rules_;
};

/// True iff u(a,b) and v(a,b) lie in the set for all pairs a != b.
bool midpoint_closure_check(const RootSystem& rs, const std::vector<LatticeVertex>& vertices);

struct VertexLatticeReport {
  std::size_t samples = 0;
  /// Random points of N whose reduction is not 0 or some c_i.
  std::size_t reduction_failures = 0;
  /// Pairs (affine simple reflection, point of {0, c_i}) whose image leaves N.
  std::size_t closure_failures = 0;
  std::string example;  // first failure, if any
  bool ok() const { return reduction_failures == 0 && closure_failures == 0; }
};

/// Checks that N = span{c_i} is the vertex set of the arrangement: random
/// points of N reduce onto 0 or some c_i, and N is mapped to itself by
/// s_1, ..., s_r and s_{theta,1}.
VertexLatticeReport vertex_lattice_self_check(const RootSystem& rs, std::mt19937_64& rng, std::size_t samples);

}  // namespace alcoved
