#include "dashed/qpoly.hpp"

#include <sstream>

#include "dashed/errors.hpp"

namespace dashed {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("q-polynomial coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("q-polynomial coefficient overflow");
  return out;
}

}  // namespace

QPoly::QPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int power, std::int64_t coeff) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(power) + 1, 0);
  c.back() = coeff;
  return QPoly(std::move(c));
}

QPoly QPoly::from_exponents(std::span<const std::int64_t> exponents) {
  std::vector<std::int64_t> c;
  for (std::int64_t e : exponents) {
    if (e < 0) throw InvariantError("negative exponent " + std::to_string(e));
    if (static_cast<std::size_t>(e) >= c.size()) c.resize(static_cast<std::size_t>(e) + 1, 0);
    c[static_cast<std::size_t>(e)] = checked_add(c[static_cast<std::size_t>(e)], 1);
  }
  return QPoly(std::move(c));
}

std::int64_t QPoly::coeff(int power) const {
  if (power < 0 || static_cast<std::size_t>(power) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

std::int64_t QPoly::at_one() const {
  std::int64_t total = 0;
  for (std::int64_t c : coeffs_) total = checked_add(total, c);
  return total;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return QPoly(std::move(c));
}

QPoly QPoly::shifted(int power) const {
  if (is_zero()) return {};
  std::vector<std::int64_t> c(static_cast<std::size_t>(power), 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(c));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    const std::int64_t mag = c < 0 ? -c : c;
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << 'q';
      if (i > 1) os << '^' << i;
    }
    first = false;
  }
  return os.str();
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly q_integer(int j) {
  if (j <= 0) return {};
  return QPoly(std::vector<std::int64_t>(static_cast<std::size_t>(j), 1));
}

QPoly q_factorial(int k) {
  QPoly out{1};
  for (int j = 1; j <= k; ++j) out = out * q_integer(j);
  return out;
}

QPoly q_stirling(int n, int k) {
  if (n < 0 || k < 0) return {};
  // table[i][j] = S_q(i, j) for i <= n, j <= k.
  std::vector<std::vector<QPoly>> table(static_cast<std::size_t>(n) + 1,
                                        std::vector<QPoly>(static_cast<std::size_t>(k) + 1));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= k; ++j) {
      QPoly& cell = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i == 0 || j == 0) {
        cell = i == j ? QPoly{1} : QPoly{};
      } else {
        cell = table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)].shifted(j - 1) +
               q_integer(j) * table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
      }
    }
  }
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

QPoly em_target(int n, int k) { return q_factorial(k) * q_stirling(n, k); }

}  // namespace dashed
