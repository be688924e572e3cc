#include "enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <string>
#include <thread>

#include "errors.hpp"

namespace alcoved {

namespace {

[[noreturn]] void budget_exceeded(std::uint64_t budget) {
  throw BudgetExceeded("enumeration exceeded the budget of " + std::to_string(budget) + " candidate points");
}

}  // namespace

BoxEnumerator::BoxEnumerator(std::vector<std::int64_t> lower, std::vector<std::int64_t> upper,
                             std::vector<LinearConstraint> constraints, std::int64_t forbidden_modulus)
    : lower_(std::move(lower)), upper_(std::move(upper)), constraints_(std::move(constraints)), modulus_(forbidden_modulus) {
  if (lower_.size() != upper_.size()) throw InvalidArgument("box bounds have different dimensions");
  const auto dim = lower_.size();
  checks_at_depth_.assign(dim, {});
  for (std::size_t c = 0; c < constraints_.size(); ++c) {
    const auto& coeffs = constraints_[c].coeffs;
    if (static_cast<std::size_t>(coeffs.size()) != dim) throw InvalidArgument("constraint has wrong dimension");
    std::size_t last = 0;
    for (std::size_t j = 0; j < dim; ++j)
      if (coeffs(static_cast<Eigen::Index>(j)) != 0) last = j;
    checks_at_depth_[last].push_back(c);
  }
}

bool BoxEnumerator::empty_box() const {
  for (std::size_t j = 0; j < lower_.size(); ++j)
    if (lower_[j] > upper_[j]) return true;
  return false;
}

bool BoxEnumerator::accept(const IntVector& x, int depth) const {
  for (auto c : checks_at_depth_[static_cast<std::size_t>(depth)]) {
    const auto& con = constraints_[c];
    std::int64_t value = 0;
    for (int j = 0; j <= depth; ++j) value += con.coeffs(j) * x(j);
    if (value < con.lo || value > con.hi) return false;
    if (modulus_ != 0 && value % modulus_ == 0) return false;
  }
  return true;
}

template <class Visitor>
bool BoxEnumerator::search(IntVector& x, int depth, Visitor& visit, std::uint64_t& nodes, std::uint64_t budget) const {
  const auto d = static_cast<std::size_t>(depth);
  for (std::int64_t v = lower_[d]; v <= upper_[d]; ++v) {
    if (++nodes > budget) budget_exceeded(budget);
    x(depth) = v;
    if (!accept(x, depth)) continue;
    if (d + 1 == lower_.size()) {
      if (!visit(x)) return false;
    } else if (!search(x, depth + 1, visit, nodes, budget)) {
      return false;
    }
  }
  return true;
}

std::uint64_t BoxEnumerator::count(const EnumerationOptions& options) const {
  if (lower_.empty() || empty_box()) return 0;
  const unsigned jobs = std::max(1u, options.jobs);
  const std::int64_t lo = lower_[0];
  const std::int64_t hi = upper_[0];
  const std::int64_t span = hi - lo + 1;
  if (jobs == 1 || span < 2) {
    std::uint64_t total = 0;
    std::uint64_t nodes = 0;
    IntVector x = IntVector::Zero(static_cast<Eigen::Index>(lower_.size()));
    auto visit = [&](const IntVector&) { ++total; return true; };
    search(x, 0, visit, nodes, options.budget);
    return total;
  }
  // Split the outer coordinate into contiguous chunks; the sum is independent
  // of the split. Each worker gets the full budget divided evenly.
  const std::int64_t parts = std::min<std::int64_t>(jobs, span);
  std::vector<std::future<std::uint64_t>> futures;
  for (std::int64_t p = 0; p < parts; ++p) {
    const std::int64_t a = lo + span * p / parts;
    const std::int64_t b = lo + span * (p + 1) / parts - 1;
    futures.push_back(std::async(std::launch::async, [this, a, b, &options, parts]() {
      BoxEnumerator slice = *this;
      slice.lower_[0] = a;
      slice.upper_[0] = b;
      std::uint64_t total = 0;
      std::uint64_t nodes = 0;
      IntVector x = IntVector::Zero(static_cast<Eigen::Index>(slice.lower_.size()));
      auto visit = [&](const IntVector&) { ++total; return true; };
      slice.search(x, 0, visit, nodes, std::max<std::uint64_t>(1, options.budget / static_cast<std::uint64_t>(parts)));
      return total;
    }));
  }
  std::uint64_t total = 0;
  for (auto& f : futures) total += f.get();
  return total;
}

void BoxEnumerator::for_each(const std::function<void(const IntVector&)>& visit, const EnumerationOptions& options) const {
  if (lower_.empty() || empty_box()) return;
  std::uint64_t nodes = 0;
  IntVector x = IntVector::Zero(static_cast<Eigen::Index>(lower_.size()));
  auto v = [&](const IntVector& p) {
    visit(p);
    return true;
  };
  search(x, 0, v, nodes, options.budget);
}

std::optional<IntVector> BoxEnumerator::first(const EnumerationOptions& options) const {
  if (lower_.empty() || empty_box()) return std::nullopt;
  std::optional<IntVector> found;
  std::uint64_t nodes = 0;
  IntVector x = IntVector::Zero(static_cast<Eigen::Index>(lower_.size()));
  auto v = [&](const IntVector& p) {
    found = p;
    return false;
  };
  search(x, 0, v, nodes, options.budget);
  return found;
}

}  // namespace alcoved
