#include "polynomial.hpp"

#include <sstream>

#include "errors.hpp"

namespace alcoved {

Polynomial::Polynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree, std::int64_t coefficient) {
  std::vector<std::int64_t> c(degree + 1, 0);
  c[degree] = coefficient;
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t Polynomial::evaluate(std::int64_t q) const {
  std::int64_t value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * q + *it;
  return value;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(std::int64_t s, const Polynomial& p) {
  std::vector<std::int64_t> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const auto c = coeffs_[k];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const auto a = c < 0 ? -c : c;
    if (k == 0) out << a;
    else {
      if (a != 1) out << a;
      out << "q";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

Polynomial eulerian_polynomial(int n) {
  if (n < 0) throw InvalidArgument("Eulerian polynomial index must be nonnegative");
  if (n == 0) return Polynomial::constant(1);
  // E(m, k) = k E(m-1, k) + (m-k+1) E(m-1, k-1), coefficient of q^k.
  std::vector<std::int64_t> row{0, 1};
  for (int m = 2; m <= n; ++m) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(m + 1), 0);
    for (int k = 1; k <= m; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      const auto same = uk < row.size() ? row[uk] : 0;
      next[uk] = k * same + (m - k + 1) * row[uk - 1];
    }
    row = std::move(next);
  }
  return Polynomial(std::move(row));
}

Polynomial q_integer(int n) {
  if (n < 0) throw InvalidArgument("q-integer of a negative number");
  return Polynomial(std::vector<std::int64_t>(static_cast<std::size_t>(n), 1));
}

}  // namespace alcoved
