#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "linalg.hpp"
#include "rootsys.hpp"

namespace alcoved {

/// An element of the finite Weyl group, stored as its action on the simple
/// root basis (column j holds the root coordinates of w(alpha_j)) together
/// with the inverse-transpose action on coweight coordinates.
struct WeylElement {
  IntMatrix root_action;
  IntMatrix coweight_action;
  int length = 0;

  bool operator==(const WeylElement& other) const { return root_action == other.root_action; }
};

WeylElement identity_element(const RootSystem& rs);
/// s_i with 1 <= i <= rank.
WeylElement simple_reflection(const RootSystem& rs, int i);
/// Product a*b (apply b first). The length of the result is not known and is
/// left at -1.
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& w);

IntVector act_on_root(const WeylElement& w, const IntVector& root);
IntVector act_on_coweight(const WeylElement& w, const IntVector& coweight);
QVector act_on_coweight(const WeylElement& w, const QVector& coweight);

/// 1 iff w(alpha) < 0 for the positive root alpha.
int inv(const RootSystem& rs, const WeylElement& w, const IntVector& alpha);
/// inv() for the positive root at `root_index`, without the membership check.
int inv_at(const RootSystem& rs, const WeylElement& w, std::size_t root_index);
/// (d_0, d_1, ..., d_r); d_0 = 1 iff w(theta) > 0.
std::vector<int> descents(const RootSystem& rs, const WeylElement& w);
int inversion_count(const RootSystem& rs, const WeylElement& w);

/// The full finite Weyl group, enumerated breadth-first from the identity by
/// right multiplication with s_1, ..., s_r in index order. Element 0 is the
/// identity and `length` is the BFS depth.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultBudget = 1'000'000;

  /// Throws BudgetExceeded if the group has more than `budget` elements.
  explicit WeylGroup(RootSystem rs, std::size_t budget = kDefaultBudget);

  const RootSystem& root_system() const { return rs_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<WeylElement>& elements() const { return elements_; }

  std::optional<std::size_t> find(const IntMatrix& root_action) const;
  /// Throws DefectError if the matrix is not in the group.
  std::size_t index_of(const IntMatrix& root_action) const;
  std::size_t index_of(const WeylElement& w) const { return index_of(w.root_action); }

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverses_[a]; }
  std::size_t power(std::size_t a, std::int64_t exponent) const;
  std::size_t simple(int i) const { return simple_[static_cast<std::size_t>(i - 1)]; }
  std::size_t longest() const { return longest_; }

  /// f * r! * a_1 ... a_r.
  std::uint64_t weyl_formula_order() const;

 private:
  RootSystem rs_;
  std::vector<WeylElement> elements_;
  std::unordered_map<IntMatrix, std::size_t, IntMatrixHash, IntMatrixEqual> lookup_;
  std::vector<std::size_t> inverses_;
  std::vector<std::size_t> simple_;
  std::size_t longest_ = 0;
};

/// Longest element of the group (maximal length).
const WeylElement& longest_element(const WeylGroup& group);

// Concrete models. Type A_{n-1}: permutations of 1..n in one-line notation,
// acting by e_i -> e_{w(i)} on R^n with alpha_i = e_i - e_{i+1}. Type C_n:
// signed permutations acting by e_i -> sign(w_i) e_{|w_i|}, alpha_n = 2 e_n.

WeylElement from_permutation(const RootSystem& rs, std::span<const int> perm);
std::vector<int> to_permutation(const RootSystem& rs, const WeylElement& w);
WeylElement from_signed_permutation(const RootSystem& rs, std::span<const int> perm);
std::vector<int> to_signed_permutation(const RootSystem& rs, const WeylElement& w);

}  // namespace alcoved
