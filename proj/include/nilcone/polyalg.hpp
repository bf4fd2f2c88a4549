#pragma once

// Exact integer polynomial arithmetic in one variable t.
//
// IntPoly          dense ascending coefficients, arbitrary precision.
// FactoredChar     products  prod_k (1 - t^k)^{e_k}  kept in exponent form.
// TruncatedSeries  power series modulo t^{order+1}.
//
// Everything here is a value type; operations are pure.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nilcone/errors.hpp"

namespace nilcone {

using BigInt = boost::multiprecision::cpp_int;

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPoly constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }
  static IntPoly one() { return constant(1); }
  /// c * t^deg
  static IntPoly monomial(const BigInt& c, std::size_t deg) {
    std::vector<BigInt> v(deg + 1);
    v[deg] = c;
    return IntPoly(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  BigInt coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt value_at_1() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) out[j] += a.coeffs_[j];
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[j] += b.coeffs_[j];
    return IntPoly(std::move(out));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j) out[j] += a.coeffs_[j];
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[j] -= b.coeffs_[j];
    return IntPoly(std::move(out));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return IntPoly(std::move(out));
  }

  IntPoly& operator*=(const IntPoly& other) { return *this = *this * other; }

  /// Multiplies in place by (1 - t^k).
  void mul_one_minus_tk(std::size_t k) {
    if (is_zero()) return;
    coeffs_.resize(coeffs_.size() + k);
    for (std::size_t j = coeffs_.size(); j-- > k;) coeffs_[j] -= coeffs_[j - k];
    trim();
  }

  /// Divides in place by (1 - t^k) when the division is exact; otherwise
  /// leaves *this untouched and returns false.
  bool div_one_minus_tk(std::size_t k) {
    if (is_zero()) return true;
    if (coeffs_.size() <= k) return false;
    const std::size_t qlen = coeffs_.size() - k;
    std::vector<BigInt> q(qlen);
    for (std::size_t j = 0; j < qlen; ++j) q[j] = j >= k ? coeffs_[j] + q[j - k] : coeffs_[j];
    for (std::size_t j = qlen; j < coeffs_.size(); ++j) {
      const BigInt expected = j >= k ? BigInt(-q[j - k]) : BigInt(0);
      if (coeffs_[j] != expected) return false;
    }
    coeffs_ = std::move(q);
    trim();
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    os << '[';
    for (std::size_t j = 0; j < p.coeffs_.size(); ++j) os << (j ? "," : "") << p.coeffs_[j];
    return os << ']';
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline IntPoly pow(IntPoly base, std::uint64_t e) {
  IntPoly acc = IntPoly::one();
  while (e) {
    if (e & 1U) acc *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return acc;
}

struct DivisionResult {
  IntPoly quotient;
  IntPoly remainder;
};

/// Classical descending long division in Z[t]. Returns nullopt when some
/// quotient coefficient would be non-integral (d does not divide p in Z[t]).
inline std::optional<DivisionResult> long_divide(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw DomainError("zero_divisor", "d", "division by the zero polynomial");
  std::vector<BigInt> r = p.coeffs();
  const auto dd = static_cast<std::size_t>(d.degree());
  const auto& dc = d.coeffs();
  const BigInt& lc = d.leading();
  if (r.size() <= dd) return DivisionResult{IntPoly{}, p};
  std::vector<BigInt> q(r.size() - dd);
  for (std::size_t i = r.size(); i-- > dd;) {
    if (r[i].is_zero()) continue;
    if (r[i] % lc != 0) return std::nullopt;
    BigInt c = r[i] / lc;
    const std::size_t shift = i - dd;
    for (std::size_t j = 0; j <= dd; ++j) {
      if (!dc[j].is_zero()) r[shift + j] -= c * dc[j];
    }
    q[shift] = std::move(c);
  }
  return DivisionResult{IntPoly(std::move(q)), IntPoly(std::move(r))};
}

/// True iff long division of p by d leaves zero remainder.
inline bool divides(const IntPoly& d, const IntPoly& p) {
  if (d.is_zero()) throw DomainError("zero_divisor", "d", "divisor must be nonzero");
  if (p.is_zero()) return true;
  auto res = long_divide(p, d);
  return res && res->remainder.is_zero();
}

inline bool is_palindromic_monic(const IntPoly& p) {
  if (p.is_zero()) throw DomainError("zero_polynomial", "p", "palindromicity of the zero polynomial");
  const auto& c = p.coeffs();
  if (c.front() != 1) return false;
  for (std::size_t j = 0, k = c.size() - 1; j < k; ++j, --k) {
    if (c[j] != c[k]) return false;
  }
  return true;
}

/// Quantum integer [n]_t = 1 + t + ... + t^{n-1}.
inline IntPoly qint(long n) {
  require(n >= 1, "domain", "n", "qint requires n >= 1, got " + std::to_string(n));
  return IntPoly(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

/// Gaussian binomial prod_{j=1}^{k} (1 - t^{n-j+1}) / (1 - t^j).
inline IntPoly qbinom(long n, long k) {
  require(n >= 0, "domain", "n", "qbinom requires n >= 0");
  require(k >= 0 && k <= n, "domain", "k",
          "qbinom requires 0 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  IntPoly p = IntPoly::one();
  for (long j = 1; j <= k; ++j) p.mul_one_minus_tk(static_cast<std::size_t>(n - j + 1));
  for (long j = 1; j <= k; ++j) {
    ensure(p.div_one_minus_tk(static_cast<std::size_t>(j)), "qbinom: inexact division");
  }
  return p;
}

/// prod_k (1 - t^k)^{e_k} with signed exponents, canonical (no zero exponents).
class FactoredChar {
 public:
  using Map = std::map<long, std::int64_t>;

  FactoredChar() = default;
  explicit FactoredChar(const Map& factors) {
    for (const auto& [k, e] : factors) add(k, e);
  }
  FactoredChar(std::initializer_list<std::pair<const long, std::int64_t>> factors)
      : FactoredChar(Map(factors)) {}

  static FactoredChar factor(long k, std::int64_t e) {
    FactoredChar f;
    f.add(k, e);
    return f;
  }

  /// Multiplies by (1 - t^k)^e.
  FactoredChar& add(long k, std::int64_t e) {
    require(k >= 1, "domain", "k", "factor index must be >= 1, got " + std::to_string(k));
    if (e == 0) return *this;
    auto [it, inserted] = factors_.try_emplace(k, 0);
    it->second += e;
    if (it->second == 0) factors_.erase(it);
    return *this;
  }

  const Map& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::int64_t exponent(long k) const {
    auto it = factors_.find(k);
    return it == factors_.end() ? 0 : it->second;
  }

  /// Sum of k * e_k: the degree of the expansion whenever it is a polynomial.
  std::int64_t net_degree() const {
    std::int64_t d = 0;
    for (const auto& [k, e] : factors_) d += k * e;
    return d;
  }

  FactoredChar inverse() const { return powered(-1); }

  FactoredChar powered(std::int64_t s) const {
    FactoredChar out;
    if (s == 0) return out;
    for (const auto& [k, e] : factors_) out.factors_.emplace(k, e * s);
    return out;
  }

  friend FactoredChar operator*(FactoredChar a, const FactoredChar& b) {
    for (const auto& [k, e] : b.factors_) a.add(k, e);
    return a;
  }
  FactoredChar& operator*=(const FactoredChar& b) {
    for (const auto& [k, e] : b.factors_) add(k, e);
    return *this;
  }
  friend FactoredChar operator/(const FactoredChar& a, const FactoredChar& b) { return a * b.inverse(); }
  friend bool operator==(const FactoredChar&, const FactoredChar&) = default;

 private:
  Map factors_;
};

/// Expansion of a FactoredChar that is not a polynomial. The witness is the
/// degree of the nonzero remainder of numerator divided by denominator.
struct NotPolynomial {
  long remainder_degree = 0;
  friend bool operator==(const NotPolynomial&, const NotPolynomial&) = default;
};

using Expansion = std::variant<IntPoly, NotPolynomial>;

inline bool is_polynomial(const Expansion& e) { return std::holds_alternative<IntPoly>(e); }

/// Multiplies out the positive-exponent factors of f.
inline IntPoly numerator_of(const FactoredChar& f) {
  IntPoly n = IntPoly::one();
  for (const auto& [k, e] : f.factors()) {
    for (std::int64_t r = 0; r < e; ++r) n.mul_one_minus_tk(static_cast<std::size_t>(k));
  }
  return n;
}

inline IntPoly denominator_of(const FactoredChar& f) { return numerator_of(f.inverse()); }

/// N / D when D divides N in Z[t], otherwise NotPolynomial with the degree of
/// the long-division remainder.
inline Expansion expand(const FactoredChar& f) {
  IntPoly q = numerator_of(f);
  bool exact = true;
  for (const auto& [k, e] : f.factors()) {
    for (std::int64_t r = 0; exact && r < -e; ++r) exact = q.div_one_minus_tk(static_cast<std::size_t>(k));
    if (!exact) break;
  }
  if (exact) return q;
  // Factor-by-factor division failed; recover the witness from one classical
  // long division of the full numerator by the full denominator.
  auto res = long_divide(numerator_of(f), denominator_of(f));
  ensure(res.has_value(), "expand: denominator is not monic up to sign");
  ensure(!res->remainder.is_zero(), "expand: sequential and full division disagree");
  return NotPolynomial{res->remainder.degree()};
}

class TruncatedSeries {
 public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : order_(order), coeffs_(order + 1) {
    require(order >= 1, "domain", "order", "series order must be >= 1");
  }
  TruncatedSeries(std::size_t order, const IntPoly& p) : TruncatedSeries(order) {
    for (std::size_t j = 0; j <= order_ && j < p.coeffs().size(); ++j) coeffs_[j] = p.coeffs()[j];
  }

  std::size_t order() const noexcept { return order_; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t j) const { return coeffs_.at(j); }

  void mul_one_minus_tk(std::size_t k) {
    for (std::size_t j = coeffs_.size(); j-- > k;) coeffs_[j] -= coeffs_[j - k];
  }
  /// Multiplies by the geometric series 1 / (1 - t^k).
  void div_one_minus_tk(std::size_t k) {
    for (std::size_t j = k; j < coeffs_.size(); ++j) coeffs_[j] += coeffs_[j - k];
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order_, b.order_));
    for (std::size_t i = 0; i <= out.order_; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= out.order_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::size_t order_;
  std::vector<BigInt> coeffs_;
};

/// Power-series coefficients of f through t^order.
inline TruncatedSeries series_expand(const FactoredChar& f, std::size_t order) {
  TruncatedSeries s(order, IntPoly::one());
  for (const auto& [k, e] : f.factors()) {
    const auto kk = static_cast<std::size_t>(k);
    if (kk > order) continue;
    for (std::int64_t r = 0; r < e; ++r) s.mul_one_minus_tk(kk);
    for (std::int64_t r = 0; r < -e; ++r) s.div_one_minus_tk(kk);
  }
  return s;
}

}  // namespace nilcone
