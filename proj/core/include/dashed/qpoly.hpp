#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace dashed {

// Polynomial in q with exact 64-bit integer coefficients. Arithmetic throws
// OverflowError instead of wrapping. Trailing zero coefficients are trimmed,
// so the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<std::int64_t> coeffs);
  QPoly(std::initializer_list<std::int64_t> coeffs) : QPoly(std::vector<std::int64_t>(coeffs)) {}

  static QPoly monomial(int power, std::int64_t coeff = 1);
  // Generating polynomial sum_v q^v of a list of nonnegative exponents.
  static QPoly from_exponents(std::span<const std::int64_t> exponents);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(int power) const;
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t at_one() const;

  QPoly& operator+=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly shifted(int power) const;

  // "2q + 3q^2 + q^3"
  std::string to_string() const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

// [j]_q = 1 + q + ... + q^{j-1}; [0]_q = 0.
QPoly q_integer(int j);
// [k]_q! = [1]_q [2]_q ... [k]_q; [0]_q! = 1.
QPoly q_factorial(int k);
// q-Stirling numbers of the second kind:
// S_q(n,k) = q^{k-1} S_q(n-1,k-1) + [k]_q S_q(n-1,k), S_q(n,k) = delta_{n,k}
// when n or k is 0.
QPoly q_stirling(int n, int k);
// [k]_q! S_q(n,k), the Euler-Mahonian distribution over OP_n^k.
QPoly em_target(int n, int k);

}  // namespace dashed
