#include "statistics.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>

#include "errors.hpp"
#include "polytope.hpp"

namespace alcoved {

int cdes(const RootSystem& rs, const WeylElement& w) {
  const auto d = descents(rs, w);
  std::int64_t total = 0;
  for (int i = 0; i <= rs.rank(); ++i) total += rs.mark(i) * d[static_cast<std::size_t>(i)];
  return static_cast<int>(total);
}

IntVector delta(const RootSystem& rs, const WeylElement& w) {
  const auto d = descents(rs, w);
  IntVector out(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) out(i) = d[static_cast<std::size_t>(i + 1)];
  return out;
}

bool delta_translates_into_parallelepiped(const RootSystem& rs, const WeylElement& w) {
  const IntVector y = act_on_coweight(inverse(w), rs.rho()) + rs.h_star() * delta(rs, w);
  return (y.array() > 0).all() && (y.array() < rs.h_star()).all();
}

bool CosetClass::operator<(const CosetClass& other) const {
  return std::lexicographical_compare(frac.begin(), frac.end(), other.frac.begin(), other.frac.end());
}

bool CosetClass::is_zero() const {
  return std::all_of(frac.begin(), frac.end(), [](const Rational& q) { return q == 0; });
}

CosetClass coweight_class(const RootSystem& rs, const IntVector& coweight) {
  CosetClass c{rs.coroot_coordinates(coweight)};
  for (auto& x : c.frac) x = frac(x);
  return c;
}

CosetClass coweight_class(const RootSystem& rs, const QVector& coweight) {
  return coweight_class(rs, to_integer(coweight));
}

CosetClass operator+(const CosetClass& a, const CosetClass& b) {
  CosetClass c{add(a.frac, b.frac)};
  for (auto& x : c.frac) x = frac(x);
  return c;
}

void GroupAlgebraElement::add(const CosetClass& x, const Polynomial& p) {
  auto& slot = terms_[x];
  slot += p;
  if (slot.is_zero()) terms_.erase(x);
}

Polynomial GroupAlgebraElement::coefficient(const CosetClass& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? Polynomial{} : it->second;
}

Polynomial GroupAlgebraElement::augmentation() const {
  Polynomial total;
  for (const auto& [x, p] : terms_) total += p;
  return total;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Polynomial& p) const {
  GroupAlgebraElement out;
  for (const auto& [x, coeff] : terms_) out.add(x, coeff * p);
  return out;
}

namespace {

using RootSet = std::set<std::vector<std::int64_t>>;

RootSet image_of(const RootSystem& rs, const WeylElement& w, const std::vector<int>& indices) {
  RootSet out;
  for (int i : indices) {
    const IntVector alpha = i == 0 ? IntVector(-rs.theta()) : IntVector(IntVector::Unit(rs.rank(), i - 1));
    out.insert(to_std(act_on_root(w, alpha)));
  }
  return out;
}

RootSet affine_roots(const RootSystem& rs, const std::vector<int>& indices) {
  return image_of(rs, identity_element(rs), indices);
}

}  // namespace

CGroup::CGroup(const WeylGroup& group) {
  const auto& rs = group.root_system();
  const int r = rs.rank();

  std::vector<int> all(static_cast<std::size_t>(r + 1));
  for (int i = 0; i <= r; ++i) all[static_cast<std::size_t>(i)] = i;
  std::map<std::int64_t, std::vector<int>> graded;
  for (int i = 0; i <= r; ++i) graded[rs.mark(i)].push_back(i);
  const RootSet hat = affine_roots(rs, all);

  std::vector<std::size_t> by_cdes, by_permutation, by_graded;
  for (std::size_t w = 0; w < group.size(); ++w) {
    const auto& el = group[w];
    if (cdes(rs, el) == 1) by_cdes.push_back(w);
    if (image_of(rs, el, all) == hat) by_permutation.push_back(w);
    bool graded_ok = true;
    for (const auto& [mark, indices] : graded)
      if (image_of(rs, el, indices) != affine_roots(rs, indices)) graded_ok = false;
    if (graded_ok) by_graded.push_back(w);
  }
  if (by_cdes != by_permutation || by_cdes != by_graded)
    throw DefectError("descriptions of the group C disagree for " + rs.label());
  if (static_cast<std::int64_t>(by_cdes.size()) != rs.index_of_connection())
    throw DefectError("|C| differs from the index of connection for " + rs.label());
  elements_ = std::move(by_cdes);

  // Each c has a single descent, at some j with a_j = 1, and c -> j is onto J.
  std::set<int> descent_positions;
  for (auto c : elements_) {
    const auto d = descents(rs, group[c]);
    int count = 0, where = -1;
    for (int i = 0; i <= r; ++i)
      if (d[static_cast<std::size_t>(i)]) { ++count; where = i; }
    if (count != 1 || rs.mark(where) != 1) throw DefectError("element of C has an unexpected descent set");
    descent_positions.insert(where);
  }
  if (static_cast<std::int64_t>(descent_positions.size()) != rs.index_of_connection())
    throw DefectError("elements of C do not realize every minuscule node");

  for (auto c : elements_) {
    CosetClass x = coweight_class(rs, delta(rs, group[c]));
    if (!by_class_.emplace(x, c).second) throw DefectError("two elements of C share a coweight class");
    classes_.push_back(std::move(x));
  }
  for (auto a : elements_)
    for (auto b : elements_)
      if (!contains(group.multiply(a, b))) throw DefectError("C is not closed under multiplication");
}

bool CGroup::contains(std::size_t w) const { return std::binary_search(elements_.begin(), elements_.end(), w); }

std::size_t CGroup::position(std::size_t w) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
  if (it == elements_.end() || *it != w) throw InvalidArgument("element is not in C");
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t CGroup::element_of_class(const CosetClass& x) const {
  auto it = by_class_.find(x);
  if (it == by_class_.end()) throw DefectError("coweight class " + to_string(x.frac) + " has no element of C");
  return it->second;
}

const CosetClass& CGroup::class_of_element(std::size_t w) const { return classes_[position(w)]; }

std::vector<CosetClass> CGroup::classes() const { return classes_; }

WeylStatistics::WeylStatistics(WeylGroup group) : group_(std::move(group)), c_group_(group_) {
  const auto& rs = group_.root_system();
  const auto n = group_.size();
  descents_.reserve(n);
  cdes_.reserve(n);
  delta_.reserve(n);
  cmaj_.reserve(n);
  for (std::size_t w = 0; w < n; ++w) {
    descents_.push_back(alcoved::descents(rs, group_[w]));
    cdes_.push_back(alcoved::cdes(rs, group_[w]));
    delta_.push_back(alcoved::delta(rs, group_[w]));
    cmaj_.push_back(c_group_.element_of_class(coweight_class(rs, delta_.back())));
  }
}

CosetClass WeylStatistics::cmaj_class(std::size_t w) const { return c_group_.class_of_element(cmaj_[w]); }

std::vector<std::size_t> WeylStatistics::cmaj_kernel() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < group_.size(); ++w)
    if (cmaj_[w] == 0) out.push_back(w);
  return out;
}

std::vector<std::size_t> WeylStatistics::coset_representatives() const {
  const auto& rs = group_.root_system();
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < group_.size(); ++w)
    if (cmaj_[group_.inverse(w)] == 0) out.push_back(w);
  const auto f = static_cast<std::size_t>(rs.index_of_connection());
  if (out.size() * f != group_.size()) throw DefectError("cmaj kernel has the wrong size");
  // u ~ w iff u(rho) - w(rho) lies in h * (coweight lattice).
  std::set<std::vector<std::int64_t>> seen;
  for (auto w : out) {
    IntVector key = act_on_coweight(group_[w], rs.rho());
    for (Eigen::Index i = 0; i < key.size(); ++i) key(i) = key(i) - rs.h_star() * floor_div(key(i), rs.h_star());
    if (!seen.insert(to_std(key)).second) throw DefectError("coset representatives are not pairwise inequivalent");
  }
  return out;
}

QWeylReport qweyl_check(const WeylStatistics& stats) {
  const auto& rs = stats.root_system();
  QWeylReport report;
  for (std::size_t w = 0; w < stats.group().size(); ++w)
    report.lhs.add(stats.cmaj_class(w), Polynomial::monomial(static_cast<std::size_t>(stats.cdes(w))));
  Polynomial factor = eulerian_polynomial(rs.rank());
  for (int i = 1; i <= rs.rank(); ++i) factor = factor * q_integer(static_cast<int>(rs.mark(i)));
  for (const auto& x : stats.c_group().classes()) report.rhs.add(x, factor);
  report.scalar_lhs = report.lhs.augmentation();
  report.scalar_rhs = rs.index_of_connection() * factor;
  report.holds = report.lhs == report.rhs && report.scalar_lhs == report.scalar_rhs;
  return report;
}

HypersimplexReport hypersimplex_statistic_check(const WeylStatistics& stats, const EnumerationOptions& options) {
  const auto& rs = stats.root_system();
  const auto& group = stats.group();
  const auto h = rs.h_star();
  HypersimplexReport report;
  report.volumes.assign(static_cast<std::size_t>(h - 1), 0);
  report.coset_counts.assign(static_cast<std::size_t>(h - 1), 0);
  report.element_counts.assign(static_cast<std::size_t>(h - 1), 0);
  for (std::int64_t k = 1; k < h; ++k)
    report.volumes[static_cast<std::size_t>(k - 1)] = volume(hypersimplex(rs, k), options);

  auto cdes_inverse = [&](std::size_t w) { return stats.cdes(group.inverse(w)); };
  for (std::size_t w = 0; w < group.size(); ++w) ++report.element_counts[static_cast<std::size_t>(cdes_inverse(w) - 1)];
  for (auto w : stats.coset_representatives()) ++report.coset_counts[static_cast<std::size_t>(cdes_inverse(w) - 1)];

  report.constant_on_cosets = true;
  for (std::size_t w = 0; w < group.size(); ++w)
    for (auto c : stats.c_group().elements())
      if (cdes_inverse(group.multiply(w, c)) != cdes_inverse(w)) report.constant_on_cosets = false;

  std::vector<std::int64_t> gf(static_cast<std::size_t>(h), 0);
  for (std::int64_t k = 1; k < h; ++k) gf[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(report.volumes[static_cast<std::size_t>(k - 1)]);
  report.generating_function = Polynomial(gf);
  report.expected = eulerian_polynomial(rs.rank());
  for (int i = 1; i <= rs.rank(); ++i) report.expected = report.expected * q_integer(static_cast<int>(rs.mark(i)));

  const auto f = static_cast<std::uint64_t>(rs.index_of_connection());
  bool counts_ok = true;
  for (std::size_t k = 0; k < report.volumes.size(); ++k) {
    if (report.volumes[k] != report.coset_counts[k]) counts_ok = false;
    if (f * report.volumes[k] != report.element_counts[k]) counts_ok = false;
  }
  report.holds = counts_ok && report.constant_on_cosets && report.generating_function == report.expected;
  return report;
}

DoubleCosetReport double_coset_check(const WeylStatistics& stats) {
  const auto& group = stats.group();
  const auto& cs = stats.c_group().elements();
  DoubleCosetReport report;
  for (std::size_t w = 0; w < group.size(); ++w) {
    const int d = stats.cdes(w);
    for (auto c1 : cs) {
      const auto left = group.multiply(c1, w);
      for (auto c2 : cs) {
        const auto x = group.multiply(left, c2);
        ++report.checked;
        if (stats.cdes(x) != d) ++report.cdes_failures;
        const auto expected = group.multiply(group.multiply(c1, stats.cmaj(w)), group.power(c2, d));
        if (stats.cmaj(x) != expected) ++report.cmaj_failures;
      }
    }
  }
  GroupAlgebraElement direct, inverted;
  for (std::size_t w = 0; w < group.size(); ++w) {
    const auto q = Polynomial::monomial(static_cast<std::size_t>(stats.cdes(w)));
    direct.add(stats.cmaj_class(w), q);
    inverted.add(stats.cmaj_class(group.inverse(w)), q);
  }
  report.remark_holds = direct == inverted;
  report.holds = report.cdes_failures == 0 && report.cmaj_failures == 0 && report.remark_holds;
  return report;
}

CrossTable cmaj_cross_table(const WeylStatistics& stats) {
  const auto& group = stats.group();
  const auto& cg = stats.c_group();
  CrossTable table;
  table.c_elements = cg.elements();
  const auto f = cg.size();
  table.entries.assign(f, std::vector<Polynomial>(f));
  for (std::size_t w = 0; w < group.size(); ++w) {
    const auto x = cg.position(stats.cmaj(w));
    const auto y = cg.position(stats.cmaj(group.inverse(w)));
    table.entries[x][y] += Polynomial::monomial(static_cast<std::size_t>(stats.cdes(w)));
  }
  table.transpose_symmetric = true;
  for (std::size_t x = 0; x < f; ++x)
    for (std::size_t y = 0; y < f; ++y) {
      table.total_at_one += static_cast<std::uint64_t>(table.entries[x][y].evaluate(1));
      if (!(table.entries[x][y] == table.entries[y][x])) table.transpose_symmetric = false;
    }
  return table;
}

}  // namespace alcoved
