#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "linalg.hpp"

namespace alcoved {

struct EnumerationOptions {
  static constexpr std::uint64_t kDefaultBudget = 100'000'000;

  /// Maximum number of search-tree nodes visited before BudgetExceeded.
  std::uint64_t budget = kDefaultBudget;
  /// Worker threads; the outermost coordinate range is split between them.
  unsigned jobs = 1;
};

/// lo <= coeffs . x <= hi
struct LinearConstraint {
  IntVector coeffs;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

/// Enumerates integer points of a box that satisfy a family of two-sided
/// linear constraints, optionally also requiring every constrained value to be
/// nonzero modulo `forbidden_modulus`. Each constraint is tested as soon as the
/// last coordinate in its support is fixed.
class BoxEnumerator {
 public:
  BoxEnumerator(std::vector<std::int64_t> lower, std::vector<std::int64_t> upper,
                std::vector<LinearConstraint> constraints, std::int64_t forbidden_modulus = 0);

  std::uint64_t count(const EnumerationOptions& options = {}) const;
  /// Visits points in lexicographic order (single-threaded).
  void for_each(const std::function<void(const IntVector&)>& visit, const EnumerationOptions& options = {}) const;
  /// Lexicographically first accepted point, if any.
  std::optional<IntVector> first(const EnumerationOptions& options = {}) const;
  bool empty_box() const;

 private:
  // The visitor returns false to stop the search; search() then returns false.
  template <class Visitor>
  bool search(IntVector& x, int depth, Visitor& visit, std::uint64_t& nodes, std::uint64_t budget) const;
  bool accept(const IntVector& x, int depth) const;

  std::vector<std::int64_t> lower_;
  std::vector<std::int64_t> upper_;
  std::vector<LinearConstraint> constraints_;
  std::vector<std::vector<std::size_t>> checks_at_depth_;
  std::int64_t modulus_ = 0;
};

}  // namespace alcoved
