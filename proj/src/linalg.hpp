#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/rational.hpp>

// Under C++20 rewritten comparisons, boost::rational's mixed-type operator==
// templates recurse into themselves. Exact non-template overloads win
// overload resolution and break the cycle.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
}  // namespace boost

namespace alcoved {

using Rational = boost::rational<std::int64_t>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row-major

IntVector make_vector(std::initializer_list<std::int64_t> values);
IntVector make_vector(const std::vector<std::int64_t>& values);
std::vector<std::int64_t> to_std(const IntVector& v);

QVector to_rational(const IntVector& v);
/// Exact conversion; throws InvalidArgument if an entry is not an integer.
IntVector to_integer(const QVector& v);
bool is_integral(const QVector& v);

Rational dot(const QVector& a, const IntVector& b);
QVector apply(const IntMatrix& m, const QVector& v);
QVector add(const QVector& a, const QVector& b);
QVector subtract(const QVector& a, const QVector& b);
QVector scale(const QVector& v, Rational s);

/// Floor division rounding toward negative infinity.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t floor(const Rational& q);
/// Representative of q modulo 1 in [0, 1).
Rational frac(const Rational& q);

/// Exact determinant by fraction-free (Bareiss) elimination.
std::int64_t determinant(const IntMatrix& m);
/// Exact rational inverse; throws InvalidArgument if singular.
QMatrix rational_inverse(const IntMatrix& m);
QVector apply(const QMatrix& m, const QVector& v);

bool is_nonnegative(const IntVector& v);
bool is_nonpositive(const IntVector& v);
bool is_zero(const IntVector& v);

/// Lexicographic order on equal-length vectors.
bool lex_less(const IntVector& a, const IntVector& b);

std::string to_string(const Rational& q);
std::string to_string(const QVector& v);

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept;
};

struct IntVectorEqual {
  bool operator()(const IntVector& a, const IntVector& b) const noexcept {
    return a.size() == b.size() && a == b;
  }
};

struct IntMatrixEqual {
  bool operator()(const IntMatrix& a, const IntMatrix& b) const noexcept {
    return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
  }
};

}  // namespace alcoved
