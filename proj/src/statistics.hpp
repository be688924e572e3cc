#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "enumeration.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "rootsys.hpp"
#include "weyl.hpp"

namespace alcoved {

int cdes(const RootSystem& rs, const WeylElement& w);
/// delta_w = sum_{i>=1} d_i(w) omega_i, in coweight coordinates.
IntVector delta(const RootSystem& rs, const WeylElement& w);
/// Checks that the central point of w^-1(A_o), shifted by delta_w, lies in
/// the open parallelepiped.
bool delta_translates_into_parallelepiped(const RootSystem& rs, const WeylElement& w);

/// Canonical representative of a class in (coweight lattice)/(coroot lattice):
/// the fractional parts of the coroot coordinates.
struct CosetClass {
  QVector frac;

  bool operator==(const CosetClass& other) const { return frac == other.frac; }
  bool operator<(const CosetClass& other) const;
  bool is_zero() const;
};

CosetClass coweight_class(const RootSystem& rs, const IntVector& coweight);
/// Throws InvalidArgument for non-integral input.
CosetClass coweight_class(const RootSystem& rs, const QVector& coweight);
CosetClass operator+(const CosetClass& a, const CosetClass& b);

/// Element of Z[q][coweight/coroot]: class -> polynomial, zero terms dropped.
class GroupAlgebraElement {
 public:
  void add(const CosetClass& x, const Polynomial& p);
  const std::map<CosetClass, Polynomial>& terms() const { return terms_; }
  Polynomial coefficient(const CosetClass& x) const;
  /// Image under e^x -> 1.
  Polynomial augmentation() const;
  GroupAlgebraElement operator*(const Polynomial& p) const;
  bool operator==(const GroupAlgebraElement&) const = default;

 private:
  std::map<CosetClass, Polynomial> terms_;
};

/// The subgroup C = {w : cdes(w) = 1}. Construction cross-checks the
/// descriptions by cdes, by permutations of the affine simple roots, and by
/// mark-graded permutations, and throws DefectError on any disagreement.
class CGroup {
 public:
  explicit CGroup(const WeylGroup& group);

  /// Group indices in increasing order; the identity comes first.
  const std::vector<std::size_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(std::size_t w) const;
  /// Position of w within elements(); throws InvalidArgument if w is not in C.
  std::size_t position(std::size_t w) const;
  /// The c in C whose class of delta_c is x (the isomorphism coweight/coroot -> C).
  std::size_t element_of_class(const CosetClass& x) const;
  const CosetClass& class_of_element(std::size_t w) const;
  std::vector<CosetClass> classes() const;

 private:
  std::vector<std::size_t> elements_;
  std::vector<CosetClass> classes_;
  std::map<CosetClass, std::size_t> by_class_;
};

/// Per-element statistics over a whole Weyl group.
class WeylStatistics {
 public:
  explicit WeylStatistics(WeylGroup group);

  const WeylGroup& group() const { return group_; }
  const RootSystem& root_system() const { return group_.root_system(); }
  const CGroup& c_group() const { return c_group_; }

  const std::vector<int>& descents(std::size_t w) const { return descents_[w]; }
  int cdes(std::size_t w) const { return cdes_[w]; }
  const IntVector& delta(std::size_t w) const { return delta_[w]; }
  /// Group index of cmaj(w) in C.
  std::size_t cmaj(std::size_t w) const { return cmaj_[w]; }
  CosetClass cmaj_class(std::size_t w) const;

  /// {w : cmaj(w) = id}: one element from each right coset C w.
  std::vector<std::size_t> cmaj_kernel() const;
  /// {w : cmaj(w^-1) = id}: one element from each coset w C, i.e. from each
  /// class of alcoves modulo coweight translations. Throws DefectError if the
  /// result is not a transversal.
  std::vector<std::size_t> coset_representatives() const;

 private:
  WeylGroup group_;
  CGroup c_group_;
  std::vector<std::vector<int>> descents_;
  std::vector<int> cdes_;
  std::vector<IntVector> delta_;
  std::vector<std::size_t> cmaj_;
};

struct QWeylReport {
  GroupAlgebraElement lhs;
  GroupAlgebraElement rhs;
  Polynomial scalar_lhs;
  Polynomial scalar_rhs;
  bool holds = false;
};

/// sum_w q^cdes(w) e^cmaj(w) against (sum_x e^x) A_r(q) prod [a_i]_q.
QWeylReport qweyl_check(const WeylStatistics& stats);

struct HypersimplexReport {
  std::vector<std::uint64_t> volumes;         // Vol(Delta_k), k = 1..h-1
  std::vector<std::uint64_t> coset_counts;    // #{cosets wC : cdes(w^-1) = k}
  std::vector<std::uint64_t> element_counts;  // #{w : cdes(w^-1) = k}
  bool constant_on_cosets = false;
  Polynomial generating_function;  // sum_k Vol(Delta_k) q^k
  Polynomial expected;             // A_r(q) prod [a_i]_q
  bool holds = false;
};

HypersimplexReport hypersimplex_statistic_check(const WeylStatistics& stats, const EnumerationOptions& options = {});

struct DoubleCosetReport {
  std::uint64_t checked = 0;
  std::uint64_t cdes_failures = 0;
  std::uint64_t cmaj_failures = 0;
  bool remark_holds = false;
  bool holds = false;
};

/// cdes(c1 w c2) = cdes(w) and cmaj(c1 w c2) = c1 cmaj(w) c2^cdes(w) for all
/// w in W and c1, c2 in C, plus equality of the q-generating functions of
/// cmaj(w) and cmaj(w^-1).
DoubleCosetReport double_coset_check(const WeylStatistics& stats);

struct CrossTable {
  std::vector<std::size_t> c_elements;
  /// entries[x][y] = sum over {w : cmaj(w) = x, cmaj(w^-1) = y} of q^cdes(w).
  std::vector<std::vector<Polynomial>> entries;
  std::uint64_t total_at_one = 0;
  bool transpose_symmetric = false;
};

CrossTable cmaj_cross_table(const WeylStatistics& stats);

}  // namespace alcoved
