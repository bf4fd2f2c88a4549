#pragma once

// Virtual equivariant multiplicities for GL_n fixed points:
//
//   m(t) = chi_T(Sym T^+*) / chi_T(Sym A*) = prod_k (1 - t^k)^{dim A_k - dim T^+_k}
//
// with closed forms for types (n), (1,...,1) and rank-3 (1,2), plus the
// character-level pairing identities.

#include <cstdint>
#include <optional>

#include "nilcone/chain.hpp"
#include "nilcone/polyalg.hpp"

namespace nilcone {

struct MultResult {
  FactoredChar factored;
  Expansion expansion;

  bool is_polynomial() const { return nilcone::is_polynomial(expansion); }
  /// nullptr when not a polynomial.
  const IntPoly* polynomial() const { return std::get_if<IntPoly>(&expansion); }
  std::optional<long> witness_degree() const {
    if (const auto* np = std::get_if<NotPolynomial>(&expansion)) return np->remainder_degree;
    return std::nullopt;
  }
  std::optional<BigInt> value_at_1() const {
    if (const auto* p = polynomial()) return p->value_at_1();
    return std::nullopt;
  }
  bool palindromic() const {
    const auto* p = polynomial();
    return p && is_palindromic_monic(*p);
  }
};

inline MultResult make_mult_result(FactoredChar f) {
  Expansion e = expand(f);
  if (const auto* p = std::get_if<IntPoly>(&e)) {
    ensure(p->degree() == f.net_degree(), "multiplicity degree differs from sum of k * e_k");
  }
  return MultResult{std::move(f), std::move(e)};
}

inline MultResult virtual_multiplicity(const WeightDims& tplus, const WeightDims& base) {
  FactoredChar f;
  for (const auto& [k, d] : base) {
    require(k >= 1, "domain", "base", "weights must be positive");
    f.add(k, d);
  }
  for (const auto& [k, d] : tplus) {
    require(k >= 1, "domain", "tplus", "weights must be positive");
    f.add(k, -d);
  }
  return make_mult_result(std::move(f));
}

/// Multiplicity of the moduli of stable bundles: prod_{i=2}^n [i]_t^{(2i-1)(g-1)}.
inline MultResult mult_type_n(int g, int n) {
  require(g >= 2, "domain", "g", "genus must be >= 2");
  require(n >= 1, "domain", "n", "rank must be >= 1");
  WeightDims tplus{{1, static_cast<std::int64_t>(n) * n * (g - 1) + 1}};
  return virtual_multiplicity(tplus, gl_hitchin_base_dims(g, n));
}

/// Closed form prod_{i=1}^{n-1} qbinom(n, i)^{m_i}, independent of the T-module route.
inline IntPoly type111_closed_form(int n, const std::vector<std::int64_t>& m) {
  IntPoly p = IntPoly::one();
  for (std::size_t i = 0; i < m.size(); ++i) {
    p *= pow(qbinom(n, static_cast<long>(i + 1)), static_cast<std::uint64_t>(m[i]));
  }
  return p;
}

/// Factored form of prod_i qbinom(n,i)^{m_i}.
inline FactoredChar type111_factored(int n, const std::vector<std::int64_t>& m) {
  FactoredChar f;
  for (std::size_t idx = 0; idx < m.size(); ++idx) {
    const long i = static_cast<long>(idx + 1);
    for (long j = 1; j <= i; ++j) {
      f.add(n - j + 1, m[idx]);
      f.add(j, -m[idx]);
    }
  }
  return f;
}

/// Type (1,...,1): the quantum-binomial product, checked against the
/// T-module ratio of the chain.
inline MultResult mult_type111(const ChainHiggsBundle& c) {
  require(is_stable(c), "unstable_chain", "chain", "mult_type111 requires a stable chain");
  MultResult r = make_mult_result(type111_factored(c.rank(), c.m_vector()));
  MultResult via_tplus = virtual_multiplicity(tplus_dims(c), gl_hitchin_base_dims(c.genus(), c.rank()));
  ensure(via_tplus.factored == r.factored, "type (1,...,1) closed form disagrees with the T-module ratio");
  return r;
}

/// Rank-3 type (1,2) with invariant x = 2l - v, 0 < x < 3g-3. T^+ has weight 1
/// of dimension 9g-8-(2g-2+x) and weight 2 of dimension 2g-2+x.
inline MultResult mult_type12_rank3(int g, std::int64_t twol_minus_v) {
  require(g >= 2, "domain", "g", "genus must be >= 2");
  require(twol_minus_v > 0 && twol_minus_v < 3 * g - 3, "outside_stability_window", "twol_minus_v",
          "need 0 < 2l-v < 3g-3 = " + std::to_string(3 * g - 3) + ", got " + std::to_string(twol_minus_v));
  const std::int64_t w2 = 2 * g - 2 + twol_minus_v;
  WeightDims tplus{{1, 9 * static_cast<std::int64_t>(g) - 8 - w2}, {2, w2}};
  return virtual_multiplicity(tplus, gl_hitchin_base_dims(g, 3));
}

/// Does m(t) divide the type-(n) polynomial at (g, n)?
inline bool master_divisibility(const MultResult& m, int g, int n) {
  const IntPoly* p = m.polynomial();
  require(p != nullptr, "not_polynomial", "m", "master_divisibility needs a polynomial multiplicity");
  return divides(*p, *mult_type_n(g, n).polynomial());
}

/// Exponent of the monomial t^{(4n+1)(n-1)n(g-1)/6}.
inline std::int64_t euler_prefactor(int g, int n) {
  require(g >= 2, "domain", "g", "genus must be >= 2");
  require(n >= 1, "domain", "n", "rank must be >= 1");
  const std::int64_t num = static_cast<std::int64_t>(4 * n + 1) * (n - 1) * n * (g - 1);
  ensure(num % 6 == 0, "euler_prefactor: non-integral exponent");
  return num / 6;
}

/// chi_T(Sym A*) as a factored character.
inline FactoredChar hitchin_base_character(int g, int n) {
  FactoredChar f;
  for (const auto& [k, d] : gl_hitchin_base_dims(g, n)) f.add(k, -d);
  return f;
}

/// m_A(t) m_B(t) chi_T(Sym A*) through t^order.
inline TruncatedSeries euler_pairing_series(const MultResult& ma, const MultResult& mb, int g, int n,
                                            std::size_t order) {
  const IntPoly* a = ma.polynomial();
  const IntPoly* b = mb.polynomial();
  require(a != nullptr, "not_polynomial", "mA", "pairing needs polynomial multiplicities");
  require(b != nullptr, "not_polynomial", "mB", "pairing needs polynomial multiplicities");
  return TruncatedSeries(order, *a) * TruncatedSeries(order, *b) * series_expand(hitchin_base_character(g, n), order);
}

/// 2^{2i} t^i (1+t)^{3g-3-2i} for the rank-2 type (1,1) component F_i.
inline IntPoly cotangent_cross_character(int g, int i) {
  require(g >= 2, "domain", "g", "genus must be >= 2");
  require(i >= 0 && i <= g - 1, "domain", "i", "need 0 <= i <= g-1, got " + std::to_string(i));
  const int e = 3 * g - 3 - 2 * i;
  require(e >= 0, "domain", "i", "3g-3-2i must be >= 0");
  BigInt scale = BigInt(1) << (2 * i);
  return IntPoly::monomial(scale, static_cast<std::size_t>(i)) * pow(IntPoly{1, 1}, static_cast<std::uint64_t>(e));
}

}  // namespace nilcone
