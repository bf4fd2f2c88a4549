#pragma once

// Virtual multiplicities for a simple group G at a fixed point whose Higgs
// field components b_i have m_i zeros:
//
//   m(t) = prod_i prod_{alpha > 0} ((1 - t^{w(alpha)+1}) / (1 - t^{w(alpha)}))^{m_i c_i(alpha)}
//
// with w(alpha) the height. Cominuscule unit vectors give q_G / q_L.

#include <algorithm>
#include <cstdint>
#include <future>
#include <thread>
#include <vector>

#include "nilcone/multgl.hpp"
#include "nilcone/polyalg.hpp"
#include "nilcone/rootsys.hpp"

namespace nilcone {

using MVector = std::vector<std::int64_t>;

/// Factored contribution of one zero of b_i (unit vector at node i, 1-based).
inline FactoredChar unit_factor(const RootSystem& r, int node) {
  require_node(r, node);
  FactoredChar f;
  for (const auto& a : r.positive_roots()) {
    const int c = a.coeffs[node - 1];
    if (c == 0) continue;
    f.add(a.height + 1, c);
    f.add(a.height, -c);
  }
  return f;
}

inline FactoredChar simple_factored(const std::vector<FactoredChar>& units, const MVector& m) {
  FactoredChar f;
  for (std::size_t i = 0; i < m.size(); ++i) f *= units[i].powered(m[i]);
  return f;
}

inline std::vector<FactoredChar> unit_factors(const RootSystem& r) {
  std::vector<FactoredChar> units;
  for (int i = 1; i <= r.rank(); ++i) units.push_back(unit_factor(r, i));
  return units;
}

inline void validate_m(const RootSystem& r, const MVector& m) {
  require(static_cast<int>(m.size()) == r.rank(), "domain", "m",
          "m-vector has length " + std::to_string(m.size()) + ", rank is " + std::to_string(r.rank()));
  for (auto x : m) require(x >= 0, "domain", "m", "m-vector entries must be >= 0");
}

inline MultResult mult_simple(const RootSystem& r, const MVector& m) {
  validate_m(r, m);
  return make_mult_result(simple_factored(unit_factors(r), m));
}

/// q_G(t) = (1-t)^{-rank} prod_j (1 - t^{d_j}).
inline FactoredChar q_group(const RootSystem& r) {
  FactoredChar f = FactoredChar::factor(1, -r.rank());
  for (int d : degrees(r)) f.add(d, 1);
  return f;
}

/// prod_j (1 - t^{d_j}) / (1 - t^{n_j}) for the maximal parabolic at a cominuscule node.
inline MultResult mult_cominuscule(const RootSystem& r, int node) {
  require_node(r, node);
  require(is_cominuscule(r, node), "not_cominuscule", "node",
          "node " + std::to_string(node) + " is not cominuscule");
  FactoredChar f;
  for (int d : degrees(r)) f.add(d, 1);
  for (int nj : levi_degrees(r, node)) f.add(nj, -1);
  return make_mult_result(std::move(f));
}

/// sum over the minuscule orbit of t^depth.
inline IntPoly orbit_depth_polynomial(const RootSystem& r, int node) {
  std::vector<BigInt> c;
  for (const auto& w : weyl_orbit_minuscule(r, node)) {
    if (c.size() <= static_cast<std::size_t>(w.depth)) c.resize(w.depth + 1);
    c[w.depth] += 1;
  }
  return IntPoly(std::move(c));
}

/// The principal grading of the minuscule orbit reproduces the cominuscule multiplicity.
inline bool gross_check(const RootSystem& r, int node) {
  const MultResult m = mult_cominuscule(r, node);
  const IntPoly* p = m.polynomial();
  return p != nullptr && *p == orbit_depth_polynomial(r, node);
}

struct ScanEntry {
  MVector m;
  Expansion expansion;
};

struct ScanReport {
  std::string root_system;
  int bound = 0;
  std::vector<ScanEntry> entries;

  std::size_t polynomial_count() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(),
                                                  [](const ScanEntry& e) { return is_polynomial(e.expansion); }));
  }
};

inline constexpr std::uint64_t kDefaultScanCap = 1'000'000;

/// Evaluates mult_simple on every m in [0, bound]^rank, lexicographic order.
inline ScanReport polynomiality_scan(const RootSystem& r, int bound, std::uint64_t cap = kDefaultScanCap) {
  require(bound >= 1, "domain", "bound", "scan bound must be >= 1");
  const int n = r.rank();
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(bound + 1);
    if (total > cap) {
      throw ResourceError("scan_cap", "bound",
                          "scan grid (" + std::to_string(bound + 1) + ")^" + std::to_string(n) + " exceeds cap " +
                              std::to_string(cap));
    }
  }
  const auto units = unit_factors(r);

  ScanReport report{r.label(), bound, {}};
  report.entries.resize(total);
  auto m_at = [&](std::uint64_t index) {
    MVector m(n);
    for (int i = n - 1; i >= 0; --i) {
      m[i] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(bound + 1));
      index /= static_cast<std::uint64_t>(bound + 1);
    }
    return m;
  };
  auto work = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      MVector m = m_at(idx);
      report.entries[idx] = ScanEntry{m, expand(simple_factored(units, m))};
    }
  };
  const std::uint64_t workers = std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, 16);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::uint64_t lo = 0; lo < total; lo += chunk) {
    jobs.push_back(std::async(std::launch::async, work, lo, std::min(total, lo + chunk)));
  }
  for (auto& j : jobs) j.get();
  return report;
}

}  // namespace nilcone
