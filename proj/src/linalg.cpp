#include "linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "errors.hpp"

namespace alcoved {

namespace {

inline void hash_combine(std::size_t& seed, std::int64_t value) {
  seed ^= std::hash<std::int64_t>{}(value) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

IntVector make_vector(std::initializer_list<std::int64_t> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (auto x : values) v(i++) = x;
  return v;
}

IntVector make_vector(const std::vector<std::int64_t>& values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return v;
}

std::vector<std::int64_t> to_std(const IntVector& v) { return {v.data(), v.data() + v.size()}; }

QVector to_rational(const IntVector& v) {
  QVector out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out[static_cast<std::size_t>(i)] = Rational(v(i));
  return out;
}

bool is_integral(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.denominator() == 1; });
}

IntVector to_integer(const QVector& v) {
  IntVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].denominator() != 1) throw InvalidArgument("non-integral vector " + to_string(v));
    out(static_cast<Eigen::Index>(i)) = v[i].numerator();
  }
  return out;
}

Rational dot(const QVector& a, const IntVector& b) {
  if (a.size() != static_cast<std::size_t>(b.size())) throw InvalidArgument("dimension mismatch in pairing");
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b(static_cast<Eigen::Index>(i));
  return s;
}

QVector apply(const IntMatrix& m, const QVector& v) {
  if (static_cast<std::size_t>(m.cols()) != v.size()) throw InvalidArgument("dimension mismatch in matrix action");
  QVector out(static_cast<std::size_t>(m.rows()), Rational(0));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[static_cast<std::size_t>(i)] += v[static_cast<std::size_t>(j)] * m(i, j);
  return out;
}

QVector add(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("dimension mismatch");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVector subtract(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("dimension mismatch");
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVector scale(const QVector& v, Rational s) {
  QVector out(v);
  for (auto& x : out) x *= s;
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t floor(const Rational& q) { return floor_div(q.numerator(), q.denominator()); }

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

std::int64_t determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw InvalidArgument("determinant of non-square matrix");
  const Eigen::Index n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { swap = i; break; }
      if (swap < 0) return 0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

QMatrix rational_inverse(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw InvalidArgument("inverse of non-square matrix");
  const std::size_t n = static_cast<std::size_t>(input.rows());
  QMatrix a(n, QVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = Rational(input(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
    a[i][n + i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InvalidArgument("singular matrix");
    std::swap(a[col], a[pivot]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= factor * a[col][j];
    }
  }
  QMatrix inv(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

QVector apply(const QMatrix& m, const QVector& v) {
  QVector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw InvalidArgument("dimension mismatch in matrix action");
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

bool is_nonnegative(const IntVector& v) { return (v.array() >= 0).all(); }
bool is_nonpositive(const IntVector& v) { return (v.array() <= 0).all(); }
bool is_zero(const IntVector& v) { return (v.array() == 0).all(); }

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string to_string(const QVector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << to_string(v[i]);
  out << ")";
  return out.str();
}

std::size_t IntVectorHash::operator()(const IntVector& v) const noexcept {
  std::size_t seed = static_cast<std::size_t>(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) hash_combine(seed, v(i));
  return seed;
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const noexcept {
  std::size_t seed = static_cast<std::size_t>(m.rows() * 131 + m.cols());
  for (Eigen::Index i = 0; i < m.size(); ++i) hash_combine(seed, m.data()[i]);
  return seed;
}

}  // namespace alcoved
