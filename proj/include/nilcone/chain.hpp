#pragma once

// Type (1,...,1) fixed points: chains L_0 -> L_1 K -> ... -> L_{n-1} K of
// line bundles with Higgs maps b_i : L_{i-1} -> L_i K on a curve of genus g.
// Only discrete data is modelled: the degrees l_i and the zero divisors of
// the b_i. Points on the curve are opaque labels.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilcone/errors.hpp"

namespace nilcone {

using Point = std::string;

/// Weight k -> dimension of the weight-k piece. Absent keys are zero.
using WeightDims = std::map<long, std::int64_t>;

inline std::int64_t total_dim(const WeightDims& w) {
  std::int64_t s = 0;
  for (const auto& [k, d] : w) s += d;
  return s;
}

class Divisor {
 public:
  using Map = std::map<Point, std::int64_t>;

  Divisor() = default;
  explicit Divisor(const Map& mults) {
    for (const auto& [p, m] : mults) add(p, m);
  }
  Divisor(std::initializer_list<std::pair<const Point, std::int64_t>> mults) : Divisor(Map(mults)) {}

  Divisor& add(const Point& p, std::int64_t m) {
    if (m == 0) return *this;
    auto [it, inserted] = mults_.try_emplace(p, 0);
    it->second += m;
    if (it->second == 0) mults_.erase(it);
    return *this;
  }

  std::int64_t multiplicity(const Point& p) const {
    auto it = mults_.find(p);
    return it == mults_.end() ? 0 : it->second;
  }

  std::int64_t degree() const {
    std::int64_t d = 0;
    for (const auto& [p, m] : mults_) d += m;
    return d;
  }

  bool is_effective() const {
    for (const auto& [p, m] : mults_) {
      if (m < 0) return false;
    }
    return true;
  }

  bool empty() const noexcept { return mults_.empty(); }
  const Map& mults() const noexcept { return mults_; }

  friend Divisor operator+(Divisor a, const Divisor& b) {
    for (const auto& [p, m] : b.mults_) a.add(p, m);
    return a;
  }
  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  Map mults_;
};

/// E = L_0 + ... + L_{n-1} with b_i nonzero of divisor delta_i (i >= 1) and a
/// signed divisor delta_0 of degree l_0 describing L_0 itself.
class ChainHiggsBundle {
 public:
  /// Validates every invariant; violations throw DomainError naming it.
  ChainHiggsBundle(int genus, std::vector<std::int64_t> degrees, Divisor delta0, std::vector<Divisor> zeros)
      : genus_(genus), degrees_(std::move(degrees)), delta0_(std::move(delta0)), zeros_(std::move(zeros)) {
    require(genus_ >= 2, "invalid_chain", "genus", "genus must be >= 2, got " + std::to_string(genus_));
    require(!degrees_.empty(), "invalid_chain", "degrees", "rank must be >= 1");
    require(zeros_.size() + 1 == degrees_.size(), "invalid_chain", "zeros",
            "expected " + std::to_string(degrees_.size() - 1) + " zero divisors, got " +
                std::to_string(zeros_.size()));
    require(delta0_.degree() == degrees_[0], "invalid_chain", "delta0",
            "deg(delta0) must equal l_0 = " + std::to_string(degrees_[0]));
    for (int i = 1; i < rank(); ++i) {
      const auto mi = m(i);
      require(mi >= 0, "invalid_chain", "degrees",
              "m_" + std::to_string(i) + " = l_i - l_{i-1} + 2g - 2 must be >= 0, got " + std::to_string(mi));
      const Divisor& d = zeros_[static_cast<std::size_t>(i - 1)];
      require(d.is_effective(), "invalid_chain", "zeros",
              "zero divisor " + std::to_string(i) + " must be effective");
      require(d.degree() == mi, "invalid_chain", "zeros",
              "deg(delta_" + std::to_string(i) + ") must equal m_" + std::to_string(i) + " = " + std::to_string(mi));
    }
  }

  /// Chain with l_0 = 0 and the given m-vector; delta_i consists of m_i
  /// distinct points labelled "p<i>_<j>", so the result has reduced zeros.
  static ChainHiggsBundle from_m(int genus, const std::vector<std::int64_t>& m) {
    std::vector<std::int64_t> degrees{0};
    std::vector<Divisor> zeros;
    for (std::size_t i = 0; i < m.size(); ++i) {
      require(m[i] >= 0, "invalid_chain", "m", "m-vector entries must be >= 0");
      degrees.push_back(degrees.back() + m[i] - (2 * genus - 2));
      Divisor d;
      for (std::int64_t j = 0; j < m[i]; ++j) d.add("p" + std::to_string(i + 1) + "_" + std::to_string(j + 1), 1);
      zeros.push_back(std::move(d));
    }
    return ChainHiggsBundle(genus, std::move(degrees), Divisor{}, std::move(zeros));
  }

  int genus() const noexcept { return genus_; }
  int rank() const noexcept { return static_cast<int>(degrees_.size()); }
  const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }
  std::int64_t degree(int j) const { return degrees_.at(static_cast<std::size_t>(j)); }
  const Divisor& delta0() const noexcept { return delta0_; }
  const std::vector<Divisor>& zeros() const noexcept { return zeros_; }
  /// delta_i for 1 <= i <= n-1.
  const Divisor& zero_divisor(int i) const { return zeros_.at(static_cast<std::size_t>(i - 1)); }

  /// m_i = deg(b_i) = l_i - l_{i-1} + 2g - 2, for 1 <= i <= n-1.
  std::int64_t m(int i) const { return degree(i) - degree(i - 1) + 2 * genus_ - 2; }

  std::vector<std::int64_t> m_vector() const {
    std::vector<std::int64_t> out;
    for (int i = 1; i < rank(); ++i) out.push_back(m(i));
    return out;
  }

  /// div(b_{n-1} o ... o b_1).
  Divisor combined_zeros() const {
    Divisor d;
    for (const auto& z : zeros_) d = d + z;
    return d;
  }

  friend bool operator==(const ChainHiggsBundle&, const ChainHiggsBundle&) = default;

 private:
  int genus_;
  std::vector<std::int64_t> degrees_;
  Divisor delta0_;
  std::vector<Divisor> zeros_;
};

/// Strict slope inequality for the Phi-invariant subbundles L_j + ... + L_{n-1}.
inline bool is_stable(const ChainHiggsBundle& c) {
  const int n = c.rank();
  std::int64_t total = 0;
  for (auto l : c.degrees()) total += l;
  std::int64_t tail = 0;
  for (int j = n - 1; j >= 1; --j) {
    tail += c.degree(j);
    if (!(n * tail < (n - j) * total)) return false;
  }
  return true;
}

struct VeryStableVerdict {
  bool stable = false;
  bool very_stable = false;
  /// Empty when very stable; otherwise "unstable" or "repeated zero at <label>".
  std::string reason;
};

inline VeryStableVerdict classify(const ChainHiggsBundle& c) {
  if (!is_stable(c)) return {false, false, "unstable"};
  const Divisor zeros = c.combined_zeros();
  for (const auto& [p, mult] : zeros.mults()) {
    if (mult > 1) return {true, false, "repeated zero at " + p};
  }
  return {true, true, ""};
}

/// Stable, and b = b_{n-1} o ... o b_1 has no repeated zero.
inline bool is_very_stable(const ChainHiggsBundle& c) { return classify(c).very_stable; }

/// Weight decomposition of the upward-flow tangent space T^+ at a stable
/// chain. Weight k collects H^1 of  (+)_{i-j=k} Hom(L_i,L_j) -> (+)_{i-j=k-1} Hom(L_i,L_j) K,
/// whose H^0 and H^2 vanish for stable chains; the scalar trace line adds one
/// dimension in weight 1.
inline WeightDims tplus_dims(const ChainHiggsBundle& c) {
  require(is_stable(c), "unstable_chain", "degrees", "tplus_dims requires a stable chain");
  const int n = c.rank();
  const std::int64_t g = c.genus();
  WeightDims out;
  for (int k = 1; k <= n; ++k) {
    std::int64_t chi = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const std::int64_t hom = c.degree(j) - c.degree(i);
        if (i - j == k) chi += hom + 1 - g;
        if (i - j == k - 1) chi -= hom + (2 * g - 2) + 1 - g;
      }
    }
    const std::int64_t dim = -chi + (k == 1 ? 1 : 0);
    ensure(dim >= 0, "tplus_dims: negative weight dimension at k=" + std::to_string(k));
    if (dim != 0) out[k] = dim;
  }
  return out;
}

/// Weights of the GL_n Hitchin base (+)_{k=1}^n H^0(K^k): dimension g in
/// weight 1 and (2k-1)(g-1) in weight k >= 2.
inline WeightDims gl_hitchin_base_dims(int g, int n) {
  require(g >= 2, "domain", "g", "genus must be >= 2");
  require(n >= 1, "domain", "n", "rank must be >= 1");
  WeightDims out{{1, g}};
  for (int k = 2; k <= n; ++k) out[k] = static_cast<std::int64_t>(2 * k - 1) * (g - 1);
  return out;
}

}  // namespace nilcone
