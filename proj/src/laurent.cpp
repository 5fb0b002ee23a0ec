#include "weldkit/laurent.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace weld {
namespace {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

std::int64_t content(const std::vector<std::int64_t>& c) {
  std::int64_t g = 0;
  for (auto x : c) g = std::gcd(g, x);
  return g;
}

// Polynomial (low exponent 0) remainder of a by b in Q[t], scaled to stay in Z[t].
std::vector<std::int64_t> pseudo_remainder(std::vector<std::int64_t> a,
                                           const std::vector<std::int64_t>& b) {
  const std::int64_t lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::int64_t top = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x = mul(x, lead);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = add(a[i + shift], -mul(top, b[i]));
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (const auto g = content(a); g > 1)
      for (auto& x : a) x /= g;
  }
  return a;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::int64_t constant) : low_(0), coeffs_{constant} { trim(); }

LaurentPolynomial::LaurentPolynomial(int low, std::vector<std::int64_t> coeffs)
    : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coeff, int exponent) {
  return LaurentPolynomial(exponent, {coeff});
}

void LaurentPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead_zeros = 0;
  while (lead_zeros < coeffs_.size() && coeffs_[lead_zeros] == 0) ++lead_zeros;
  if (lead_zeros) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
    low_ += static_cast<int>(lead_zeros);
  }
  if (coeffs_.empty()) low_ = 0;
}

std::int64_t LaurentPolynomial::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  auto c = coeffs_;
  for (auto& x : c) x = mul(x, -1);
  return LaurentPolynomial(low_, std::move(c));
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int lo = std::min(a.low(), b.low());
  const int hi = std::max(a.high(), b.high());
  std::vector<std::int64_t> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (int e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = add(a.coeff(e), b.coeff(e));
  return LaurentPolynomial(lo, std::move(c));
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a + (-b);
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = add(c[i + j], mul(a.coeffs_[i], b.coeffs_[j]));
  return LaurentPolynomial(a.low_ + b.low_, std::move(c));
}

LaurentPolynomial exact_div(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  std::vector<std::int64_t> rem = a.coeffs_;
  const auto& div = b.coeffs_;
  if (rem.size() < div.size()) throw std::domain_error("inexact polynomial division");
  std::vector<std::int64_t> q(rem.size() - div.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t top = rem[k + div.size() - 1];
    if (top % div.back() != 0) throw std::domain_error("inexact polynomial division");
    q[k] = top / div.back();
    for (std::size_t i = 0; i < div.size(); ++i) rem[k + i] = add(rem[k + i], -mul(q[k], div[i]));
  }
  for (auto x : rem)
    if (x != 0) throw std::domain_error("inexact polynomial division");
  return LaurentPolynomial(a.low_ - b.low_, std::move(q));
}

LaurentPolynomial LaurentPolynomial::inverted_variable() const {
  if (is_zero()) return {};
  std::vector<std::int64_t> c(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPolynomial(-high(), std::move(c));
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (is_zero()) return {};
  auto c = coeffs_;
  if (c.back() < 0)
    for (auto& x : c) x = mul(x, -1);
  return LaurentPolynomial(0, std::move(c));
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = high(); e >= low_; --e) {
    const std::int64_t c = coeff(e);
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    const bool unit = mag == 1 && e != 0;
    if (!unit) out += std::to_string(mag);
    if (e != 0) {
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  auto x = a.normalized().coeffs();
  auto y = b.normalized().coeffs();
  const std::int64_t g = std::gcd(content(x), content(y));
  for (auto& v : x) v /= content(a.coeffs());
  for (auto& v : y) v /= content(b.coeffs());
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    auto r = pseudo_remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  const std::int64_t cx = content(x);
  for (auto& v : x) v = mul(v / cx, g);
  return LaurentPolynomial(0, std::move(x)).normalized();
}

LaurentPolynomial determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPolynomial(1);
  LaurentPolynomial prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace weld
