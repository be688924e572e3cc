#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace alcoved {

/// Dense integer polynomial in q; coeffs[k] is the coefficient of q^k.
/// Trailing zeros are trimmed so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::int64_t> coeffs);
  static Polynomial monomial(std::size_t degree, std::int64_t coefficient = 1);
  static Polynomial constant(std::int64_t c) { return monomial(0, c); }

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(std::size_t degree) const { return degree < coeffs_.size() ? coeffs_[degree] : 0; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t evaluate(std::int64_t q) const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(std::int64_t s, const Polynomial& p);
  bool operator==(const Polynomial&) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// A_n(q) = sum over S_n of q^(des+1); A_0 = 1. Throws InvalidArgument for n < 0.
Polynomial eulerian_polynomial(int n);
/// [n]_q = 1 + q + ... + q^(n-1).
Polynomial q_integer(int n);

}  // namespace alcoved
