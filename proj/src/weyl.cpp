#include "weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "errors.hpp"

namespace alcoved {

namespace {

bool is_negative(const IntVector& v) { return !is_zero(v) && is_nonpositive(v); }

void require_rank(const RootSystem& rs, RootType type, const char* what) {
  if (rs.type() != type)
    throw InvalidArgument(std::string(what) + " requires type " + type_letter(type) + ", got " + rs.label());
}

// Ambient coordinates on R^n of a root given in simple-root coordinates.
std::vector<std::int64_t> ambient_of(const RootSystem& rs, const IntVector& c) {
  const int r = rs.rank();
  if (rs.type() == RootType::A) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(r + 1));
    for (int k = 0; k <= r; ++k) v[static_cast<std::size_t>(k)] = (k < r ? c(k) : 0) - (k > 0 ? c(k - 1) : 0);
    return v;
  }
  std::vector<std::int64_t> v(static_cast<std::size_t>(r));
  for (int k = 0; k < r - 1; ++k) v[static_cast<std::size_t>(k)] = c(k) - (k > 0 ? c(k - 1) : 0);
  v[static_cast<std::size_t>(r - 1)] = 2 * c(r - 1) - (r > 1 ? c(r - 2) : 0);
  return v;
}

IntVector simple_coordinates_of(const RootSystem& rs, const std::vector<std::int64_t>& v) {
  const int r = rs.rank();
  IntVector c(r);
  std::int64_t partial = 0;
  for (int k = 0; k < r; ++k) {
    partial += v[static_cast<std::size_t>(k)];
    c(k) = partial;
  }
  if (rs.type() == RootType::C) {
    if (partial % 2 != 0) throw DefectError("ambient vector is not in the root lattice");
    c(r - 1) = partial / 2;
  }
  return c;
}

WeylElement from_columns(const RootSystem& rs, const std::vector<IntVector>& columns) {
  const int r = rs.rank();
  WeylElement w;
  w.root_action = IntMatrix(r, r);
  for (int j = 0; j < r; ++j) w.root_action.col(j) = columns[static_cast<std::size_t>(j)];
  const auto inv = rational_inverse(w.root_action);
  w.coweight_action = IntMatrix(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Rational& q = inv[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (q.denominator() != 1) throw DefectError("Weyl element is not unimodular");
      w.coweight_action(i, j) = q.numerator();
    }
  w.length = inversion_count(rs, w);
  return w;
}

}  // namespace

WeylElement identity_element(const RootSystem& rs) {
  WeylElement w;
  w.root_action = IntMatrix::Identity(rs.rank(), rs.rank());
  w.coweight_action = w.root_action;
  w.length = 0;
  return w;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw InvalidArgument("simple reflection index out of range");
  const int r = rs.rank();
  const int s = i - 1;
  WeylElement w = identity_element(rs);
  // s_i(alpha_j) = alpha_j - A(j, i) alpha_i
  for (int j = 0; j < r; ++j) w.root_action(s, j) -= rs.cartan()(j, s);
  // s_i is an involution, so (M^-1)^T = M^T.
  w.coweight_action = w.root_action.transpose();
  w.length = 1;
  return w;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  WeylElement w;
  w.root_action = a.root_action * b.root_action;
  w.coweight_action = a.coweight_action * b.coweight_action;
  w.length = -1;
  return w;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement out;
  out.root_action = w.coweight_action.transpose();
  out.coweight_action = w.root_action.transpose();
  out.length = w.length;
  return out;
}

IntVector act_on_root(const WeylElement& w, const IntVector& root) {
  if (root.size() != w.root_action.cols()) throw InvalidArgument("dimension mismatch in root action");
  return w.root_action * root;
}

IntVector act_on_coweight(const WeylElement& w, const IntVector& coweight) {
  if (coweight.size() != w.coweight_action.cols()) throw InvalidArgument("dimension mismatch in coweight action");
  return w.coweight_action * coweight;
}

QVector act_on_coweight(const WeylElement& w, const QVector& coweight) { return apply(w.coweight_action, coweight); }

int inv(const RootSystem& rs, const WeylElement& w, const IntVector& alpha) {
  return inv_at(rs, w, rs.require_positive_root(alpha));
}

int inv_at(const RootSystem& rs, const WeylElement& w, std::size_t root_index) {
  return is_negative(w.root_action * rs.root(root_index)) ? 1 : 0;
}

std::vector<int> descents(const RootSystem& rs, const WeylElement& w) {
  const int r = rs.rank();
  std::vector<int> d(static_cast<std::size_t>(r + 1));
  // alpha_0 = -theta, so w(alpha_0) < 0 iff w(theta) > 0.
  d[0] = is_negative(w.root_action * rs.theta()) ? 0 : 1;
  for (int i = 0; i < r; ++i) d[static_cast<std::size_t>(i + 1)] = is_negative(w.root_action.col(i)) ? 1 : 0;
  return d;
}

int inversion_count(const RootSystem& rs, const WeylElement& w) {
  int count = 0;
  for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) count += inv_at(rs, w, k);
  return count;
}

WeylGroup::WeylGroup(RootSystem rs, std::size_t budget) : rs_(std::move(rs)) {
  const int r = rs_.rank();
  std::vector<WeylElement> gens;
  for (int i = 1; i <= r; ++i) gens.push_back(simple_reflection(rs_, i));

  elements_.push_back(identity_element(rs_));
  lookup_.emplace(elements_[0].root_action, 0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& s : gens) {
      WeylElement next = compose(elements_[head], s);
      if (lookup_.contains(next.root_action)) continue;
      if (elements_.size() >= budget)
        throw BudgetExceeded("Weyl group of " + rs_.label() + " exceeds the element budget of " +
                             std::to_string(budget));
      next.length = elements_[head].length + 1;
      lookup_.emplace(next.root_action, elements_.size());
      elements_.push_back(std::move(next));
    }
  }

  inverses_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    inverses_[i] = index_of(elements_[i].coweight_action.transpose());
  for (int i = 1; i <= r; ++i) simple_.push_back(index_of(gens[static_cast<std::size_t>(i - 1)].root_action));
  longest_ = static_cast<std::size_t>(
      std::max_element(elements_.begin(), elements_.end(),
                       [](const WeylElement& a, const WeylElement& b) { return a.length < b.length; }) -
      elements_.begin());
}

std::optional<std::size_t> WeylGroup::find(const IntMatrix& root_action) const {
  auto it = lookup_.find(root_action);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeylGroup::index_of(const IntMatrix& root_action) const {
  auto idx = find(root_action);
  if (!idx) throw DefectError("matrix is not an element of the Weyl group of " + rs_.label());
  return *idx;
}

std::size_t WeylGroup::multiply(std::size_t a, std::size_t b) const {
  return index_of(IntMatrix(elements_[a].root_action * elements_[b].root_action));
}

std::size_t WeylGroup::power(std::size_t a, std::int64_t exponent) const {
  std::size_t base = exponent < 0 ? inverses_[a] : a;
  std::size_t result = 0;
  for (std::int64_t k = 0; k < std::abs(exponent); ++k) result = multiply(result, base);
  return result;
}

std::uint64_t WeylGroup::weyl_formula_order() const {
  std::uint64_t order = static_cast<std::uint64_t>(rs_.index_of_connection());
  for (int i = 1; i <= rs_.rank(); ++i) order *= static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(rs_.mark(i));
  return order;
}

const WeylElement& longest_element(const WeylGroup& group) { return group[group.longest()]; }

WeylElement from_permutation(const RootSystem& rs, std::span<const int> perm) {
  require_rank(rs, RootType::A, "from_permutation");
  const int n = rs.rank() + 1;
  if (static_cast<int>(perm.size()) != n) throw InvalidArgument("permutation must have " + std::to_string(n) + " entries");
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  for (int v : perm) {
    if (v < 1 || v > n || used[static_cast<std::size_t>(v)]) throw InvalidArgument("not a permutation of 1.." + std::to_string(n));
    used[static_cast<std::size_t>(v)] = true;
  }
  std::vector<IntVector> columns;
  for (int j = 0; j + 1 < n; ++j) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)] - 1)] += 1;
    v[static_cast<std::size_t>(perm[static_cast<std::size_t>(j + 1)] - 1)] -= 1;
    columns.push_back(simple_coordinates_of(rs, v));
  }
  return from_columns(rs, columns);
}

std::vector<int> to_permutation(const RootSystem& rs, const WeylElement& w) {
  require_rank(rs, RootType::A, "to_permutation");
  const int n = rs.rank() + 1;
  std::vector<int> perm(static_cast<std::size_t>(n), 0);
  for (int j = 0; j + 1 < n; ++j) {
    auto v = ambient_of(rs, w.root_action.col(j));
    int plus = -1, minus = -1;
    for (int k = 0; k < n; ++k) {
      if (v[static_cast<std::size_t>(k)] == 1) plus = k + 1;
      else if (v[static_cast<std::size_t>(k)] == -1) minus = k + 1;
      else if (v[static_cast<std::size_t>(k)] != 0) throw InvalidArgument("matrix is not a type A Weyl element");
    }
    if (plus < 0 || minus < 0) throw InvalidArgument("matrix is not a type A Weyl element");
    if (perm[static_cast<std::size_t>(j)] != 0 && perm[static_cast<std::size_t>(j)] != plus)
      throw InvalidArgument("inconsistent permutation model");
    perm[static_cast<std::size_t>(j)] = plus;
    perm[static_cast<std::size_t>(j + 1)] = minus;
  }
  return perm;
}

WeylElement from_signed_permutation(const RootSystem& rs, std::span<const int> perm) {
  require_rank(rs, RootType::C, "from_signed_permutation");
  const int n = rs.rank();
  if (static_cast<int>(perm.size()) != n) throw InvalidArgument("signed permutation must have " + std::to_string(n) + " entries");
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  for (int v : perm) {
    const int a = std::abs(v);
    if (a < 1 || a > n || used[static_cast<std::size_t>(a)]) throw InvalidArgument("not a signed permutation of 1.." + std::to_string(n));
    used[static_cast<std::size_t>(a)] = true;
  }
  auto image = [&](int j) {  // w(e_{j+1})
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    const int x = perm[static_cast<std::size_t>(j)];
    v[static_cast<std::size_t>(std::abs(x) - 1)] = x > 0 ? 1 : -1;
    return v;
  };
  std::vector<IntVector> columns;
  for (int j = 0; j + 1 < n; ++j) {
    auto v = image(j);
    auto u = image(j + 1);
    for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] -= u[static_cast<std::size_t>(k)];
    columns.push_back(simple_coordinates_of(rs, v));
  }
  auto last = image(n - 1);
  for (auto& x : last) x *= 2;
  columns.push_back(simple_coordinates_of(rs, last));
  return from_columns(rs, columns);
}

std::vector<int> to_signed_permutation(const RootSystem& rs, const WeylElement& w) {
  require_rank(rs, RootType::C, "to_signed_permutation");
  const int n = rs.rank();
  std::vector<int> perm(static_cast<std::size_t>(n), 0);
  // w(e_n) = w(alpha_n)/2, then w(e_j) = w(alpha_j) + w(e_{j+1}).
  auto last = ambient_of(rs, w.root_action.col(n - 1));
  std::vector<std::int64_t> current(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    if (last[static_cast<std::size_t>(k)] % 2 != 0) throw InvalidArgument("matrix is not a type C Weyl element");
    current[static_cast<std::size_t>(k)] = last[static_cast<std::size_t>(k)] / 2;
  }
  auto decode = [&](const std::vector<std::int64_t>& v) {
    int value = 0;
    for (int k = 0; k < n; ++k) {
      const auto x = v[static_cast<std::size_t>(k)];
      if (x == 0) continue;
      if (value != 0 || (x != 1 && x != -1)) throw InvalidArgument("matrix is not a type C Weyl element");
      value = static_cast<int>(x) * (k + 1);
    }
    if (value == 0) throw InvalidArgument("matrix is not a type C Weyl element");
    return value;
  };
  perm[static_cast<std::size_t>(n - 1)] = decode(current);
  for (int j = n - 2; j >= 0; --j) {
    auto v = ambient_of(rs, w.root_action.col(j));
    for (int k = 0; k < n; ++k) current[static_cast<std::size_t>(k)] += v[static_cast<std::size_t>(k)];
    perm[static_cast<std::size_t>(j)] = decode(current);
  }
  return perm;
}

}  // namespace alcoved
