#pragma once

// Hecke modifications of chain Higgs bundles at a single point, and the
// combinatorial count of upward-flow points in a generic Hitchin fibre.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nilcone/chain.hpp"
#include "nilcone/polyalg.hpp"

namespace nilcone {

/// One elementary move. For Remove, index is the i of the b_i losing a zero;
/// for Add it is k = dim of the invariant subspace V (first-k convention).
struct HeckeMove {
  enum class Op { Remove, Add };
  Op op;
  int index;
  Point point;
};

/// Hecke transform at a zero pt of b_i: L_j -> L_j(-pt) for j >= i.
/// The result is stable whenever the input is.
inline ChainHiggsBundle hecke_remove_zero(const ChainHiggsBundle& c, int i, const Point& pt) {
  const int n = c.rank();
  require(i >= 1 && i <= n - 1, "domain", "i", "zero index must lie in 1..n-1, got " + std::to_string(i));
  require(is_stable(c), "unstable_chain", "chain", "hecke_remove_zero requires a stable chain");
  require(c.zero_divisor(i).multiplicity(pt) >= 1, "not_a_zero", "point",
          pt + " is not a zero of b_" + std::to_string(i));
  auto degrees = c.degrees();
  for (int j = i; j < n; ++j) --degrees[static_cast<std::size_t>(j)];
  auto zeros = c.zeros();
  zeros[static_cast<std::size_t>(i - 1)].add(pt, -1);
  ChainHiggsBundle out(c.genus(), std::move(degrees), c.delta0(), std::move(zeros));
  ensure(is_stable(out), "hecke_remove_zero produced an unstable chain");
  return out;
}

/// Backwards Hecke transform at a point where b does not vanish: L_j -> L_j(-pt)
/// for j < n-k, so b_{n-k} acquires a simple zero at pt. delta_0 tracks the
/// twist of L_0.
inline ChainHiggsBundle hecke_add_zero(const ChainHiggsBundle& c, int k, const Point& pt) {
  const int n = c.rank();
  require(k >= 1 && k <= n - 1, "domain", "k", "subspace dimension must lie in 1..n-1, got " + std::to_string(k));
  require(is_stable(c), "unstable_chain", "chain", "hecke_add_zero requires a stable chain");
  require(c.combined_zeros().multiplicity(pt) == 0, "already_a_zero", "point",
          "b already vanishes at " + pt);
  auto degrees = c.degrees();
  for (int j = 0; j < n - k; ++j) --degrees[static_cast<std::size_t>(j)];
  auto zeros = c.zeros();
  zeros[static_cast<std::size_t>(n - k - 1)].add(pt, 1);
  Divisor delta0 = c.delta0();
  delta0.add(pt, -1);
  ChainHiggsBundle out(c.genus(), std::move(degrees), std::move(delta0), std::move(zeros));
  if (!is_stable(out)) {
    throw DomainError("unstable_result", "k", "hecke_add_zero at k=" + std::to_string(k) + " yields an unstable chain");
  }
  return out;
}

inline ChainHiggsBundle apply_move(const ChainHiggsBundle& c, const HeckeMove& mv) {
  return mv.op == HeckeMove::Op::Remove ? hecke_remove_zero(c, mv.index, mv.point)
                                        : hecke_add_zero(c, mv.index, mv.point);
}

/// Binomial coefficient C(n, k) as a big integer.
inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

/// prod_i C(n, i)^{m_i}: the number of points of the upward flow meeting a
/// generic Hitchin fibre.
inline BigInt intersection_count(const ChainHiggsBundle& c) {
  require(is_very_stable(c), "not_very_stable", "chain", "intersection_count requires a very stable chain");
  BigInt r = 1;
  const int n = c.rank();
  for (int i = 1; i < n; ++i) r *= boost::multiprecision::pow(binomial(n, i), static_cast<unsigned>(c.m(i)));
  return r;
}

/// One sheet subset per zero of b, in the order of zero_slots().
using Assignment = std::vector<std::vector<int>>;

struct ZeroSlot {
  int i;        // which b_i
  Point point;  // the zero
};

inline std::vector<ZeroSlot> zero_slots(const ChainHiggsBundle& c) {
  std::vector<ZeroSlot> out;
  for (int i = 1; i < c.rank(); ++i) {
    for (const auto& [p, mult] : c.zero_divisor(i).mults()) {
      for (std::int64_t r = 0; r < mult; ++r) out.push_back({i, p});
    }
  }
  return out;
}

/// All size-r subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int s = next; s <= n - (r - static_cast<int>(cur.size())) + 1; ++s) {
      cur.push_back(s);
      rec(s + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Streams every choice of an (n-i)-element sheet subset over each zero of
/// b_i. The visitor receives, per zero slot, an index into
/// subsets(n, n - slot.i). Returns the number of assignments visited.
inline std::uint64_t for_each_intersection(const ChainHiggsBundle& c,
                                           const std::function<void(std::span<const std::size_t>)>& visit,
                                           std::uint64_t cap = kDefaultEnumerationCap) {
  require(is_very_stable(c), "not_very_stable", "chain", "intersection enumeration requires a very stable chain");
  const BigInt total = intersection_count(c);
  if (total > cap) {
    throw ResourceError("enumeration_cap", "cap",
                        "enumeration size " + total.str() + " exceeds cap " + std::to_string(cap));
  }
  const int n = c.rank();
  const auto slots = zero_slots(c);
  std::vector<std::size_t> radix;
  for (const auto& s : slots) radix.push_back(static_cast<std::size_t>(binomial(n, n - s.i)));
  std::vector<std::size_t> idx(slots.size(), 0);
  std::uint64_t visited = 0;
  while (true) {
    visit(idx);
    ++visited;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == radix[pos]) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return visited;
}

inline std::vector<Assignment> intersection_enumerate(const ChainHiggsBundle& c,
                                                      std::uint64_t cap = kDefaultEnumerationCap) {
  const int n = c.rank();
  const auto slots = zero_slots(c);
  std::vector<std::vector<std::vector<int>>> choices;
  for (const auto& s : slots) choices.push_back(subsets(n, n - s.i));
  std::vector<Assignment> out;
  for_each_intersection(
      c,
      [&](std::span<const std::size_t> idx) {
        Assignment a;
        a.reserve(idx.size());
        for (std::size_t s = 0; s < idx.size(); ++s) a.push_back(choices[s][idx[s]]);
        out.push_back(std::move(a));
      },
      cap);
  return out;
}

}  // namespace nilcone
