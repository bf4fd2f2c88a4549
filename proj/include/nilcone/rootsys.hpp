#pragma once

// Finite root systems from Cartan matrices (Bourbaki numbering).
//
// Convention: cartan[i][j] = <alpha_j, alpha_i^vee>, so the pairing of a root
// with simple coordinates c against alpha_j^vee is sum_i c_i * cartan[j][i].
// Nodes are 1-based in the public API, matching Bourbaki tables.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "nilcone/errors.hpp"

namespace nilcone {

using CartanMatrix = std::vector<std::vector<int>>;

struct LieType {
  char family = 'A';
  int rank = 1;

  std::string name() const { return std::string(1, family) + std::to_string(rank); }
  friend bool operator==(const LieType&, const LieType&) = default;
};

inline void validate(const LieType& t) {
  const int r = t.rank;
  bool ok = false;
  switch (t.family) {
    case 'A': ok = r >= 1; break;
    case 'B': ok = r >= 2; break;
    case 'C': ok = r >= 2; break;
    case 'D': ok = r >= 3; break;
    case 'E': ok = r >= 6 && r <= 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default:
      throw DomainError("invalid_type", "type", std::string("unknown Lie family '") + t.family + "'");
  }
  require(ok, "invalid_rank", "rank", "rank " + std::to_string(r) + " is not admissible for family " + t.family);
}

/// Bourbaki Cartan matrix of a simple type.
inline CartanMatrix cartan_matrix(const LieType& t) {
  validate(t);
  const int r = t.rank;
  CartanMatrix a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) {  // 1-based simple bond
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (t.family) {
    case 'A':
      for (int i = 1; i < r; ++i) bond(i, i + 1);
      break;
    case 'B':  // alpha_r short
      for (int i = 1; i < r; ++i) bond(i, i + 1);
      a[r - 1][r - 2] = -2;
      break;
    case 'C':  // alpha_r long
      for (int i = 1; i < r; ++i) bond(i, i + 1);
      a[r - 2][r - 1] = -2;
      break;
    case 'D':
      for (int i = 1; i < r - 1; ++i) bond(i, i + 1);
      bond(r - 2, r);
      break;
    case 'E':  // 1-3-4-5-...-r with 2 attached to 4
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < r; ++i) bond(i, i + 1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      bond(1, 2);
      bond(3, 4);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case 'G':  // alpha_1 short
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

inline CartanMatrix transpose(const CartanMatrix& a) {
  CartanMatrix t(a.size(), std::vector<int>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

struct Root {
  std::vector<int> coeffs;
  int height = 0;
  friend bool operator==(const Root&, const Root&) = default;
};

/// Multiset of invariant-polynomial degrees, sorted ascending.
using DegreeSet = std::vector<int>;

class RootSystem {
 public:
  /// Enumerates positive roots of an arbitrary finite-type Cartan matrix by
  /// height, adding alpha + alpha_j whenever p - <alpha, alpha_j^vee> > 0 where
  /// p is the length of the alpha_j-string below alpha.
  explicit RootSystem(CartanMatrix cartan, std::string label = "") : cartan_(std::move(cartan)), label_(std::move(label)) {
    const int r = rank();
    for (const auto& row : cartan_) {
      require(static_cast<int>(row.size()) == r, "invalid_cartan", "cartan", "Cartan matrix must be square");
    }
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> layer;
    for (int i = 0; i < r; ++i) {
      std::vector<int> e(r, 0);
      e[i] = 1;
      layer.push_back(e);
      known.insert(e);
    }
    while (!layer.empty()) {
      std::sort(layer.begin(), layer.end());
      for (const auto& c : layer) roots_.push_back(Root{c, std::accumulate(c.begin(), c.end(), 0)});
      std::set<std::vector<int>> next;
      for (const auto& c : layer) {
        for (int j = 0; j < r; ++j) {
          int p = 0;
          for (auto down = c; down[j] > 0;) {
            --down[j];
            if (!known.count(down)) break;
            ++p;
          }
          int pairing = 0;
          for (int i = 0; i < r; ++i) pairing += c[i] * cartan_[j][i];
          if (p - pairing > 0) {
            auto up = c;
            ++up[j];
            next.insert(up);
          }
        }
        ensure(roots_.size() < 100000, "root enumeration does not terminate; Cartan matrix not of finite type");
      }
      layer.assign(next.begin(), next.end());
      known.insert(next.begin(), next.end());
    }
  }

  explicit RootSystem(const LieType& t) : RootSystem(cartan_matrix(t), t.name()) { type_ = t; }

  int rank() const noexcept { return static_cast<int>(cartan_.size()); }
  const CartanMatrix& cartan() const noexcept { return cartan_; }
  const std::vector<Root>& positive_roots() const noexcept { return roots_; }
  const std::string& label() const noexcept { return label_; }
  const std::optional<LieType>& lie_type() const noexcept { return type_; }

 private:
  CartanMatrix cartan_;
  std::string label_;
  std::optional<LieType> type_;
  std::vector<Root> roots_;
};

inline RootSystem build(const LieType& t) { return RootSystem(t); }

/// N_j = number of positive roots of height j.
inline std::map<int, int> height_histogram(const RootSystem& r) {
  std::map<int, int> h;
  for (const auto& a : r.positive_roots()) ++h[a.height];
  return h;
}

/// Degrees d_i from the height histogram: (N_1, N_2, ...) is the partition
/// conjugate to (d_i - 1).
inline DegreeSet degrees(const RootSystem& r) {
  const auto h = height_histogram(r);
  DegreeSet out;
  if (r.rank() == 0) return out;
  ensure(!h.empty() && h.begin()->first == 1 && h.begin()->second == r.rank(),
         "height histogram must start with N_1 = rank");
  int prev_height = 0;
  for (auto it = h.begin(); it != h.end(); ++it) {
    ensure(it->first == prev_height + 1, "height histogram has a gap");
    prev_height = it->first;
    const auto nxt = std::next(it);
    const int following = nxt == h.end() ? 0 : nxt->second;
    ensure(following <= it->second, "height histogram is not a partition shape");
    for (int c = 0; c < it->second - following; ++c) out.push_back(it->first + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Nodes i (1-based) whose coefficient c_i(alpha) never exceeds 1.
inline std::vector<int> cominuscule_nodes(const RootSystem& r) {
  std::vector<int> out;
  for (int i = 0; i < r.rank(); ++i) {
    int mx = 0;
    for (const auto& a : r.positive_roots()) mx = std::max(mx, a.coeffs[i]);
    if (mx == 1) out.push_back(i + 1);
  }
  return out;
}

inline bool is_cominuscule(const RootSystem& r, int node) {
  const auto nodes = cominuscule_nodes(r);
  return std::find(nodes.begin(), nodes.end(), node) != nodes.end();
}

inline void require_node(const RootSystem& r, int node) {
  require(node >= 1 && node <= r.rank(), "invalid_node", "node",
          "node " + std::to_string(node) + " outside 1.." + std::to_string(r.rank()));
}

/// Connected components of the Dynkin diagram restricted to `nodes` (0-based).
inline std::vector<std::vector<int>> dynkin_components(const CartanMatrix& a, const std::vector<int>& nodes) {
  std::vector<std::vector<int>> comps;
  std::set<int> left(nodes.begin(), nodes.end());
  while (!left.empty()) {
    std::vector<int> comp;
    std::deque<int> q{*left.begin()};
    left.erase(left.begin());
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      comp.push_back(u);
      for (auto it = left.begin(); it != left.end();) {
        if (a[u][*it] != 0) {
          q.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

/// Degrees of the Levi subgroup obtained by deleting node i: the union over
/// the remaining Dynkin components, padded with 1s for the central torus.
inline DegreeSet levi_degrees(const RootSystem& r, int node) {
  require_node(r, node);
  std::vector<int> keep;
  for (int j = 0; j < r.rank(); ++j) {
    if (j != node - 1) keep.push_back(j);
  }
  DegreeSet out;
  int covered = 0;
  for (const auto& comp : dynkin_components(r.cartan(), keep)) {
    CartanMatrix sub(comp.size(), std::vector<int>(comp.size()));
    for (std::size_t x = 0; x < comp.size(); ++x)
      for (std::size_t y = 0; y < comp.size(); ++y) sub[x][y] = r.cartan()[comp[x]][comp[y]];
    const auto d = degrees(RootSystem(std::move(sub)));
    out.insert(out.end(), d.begin(), d.end());
    covered += static_cast<int>(comp.size());
  }
  for (int k = covered; k < r.rank(); ++k) out.push_back(1);
  std::sort(out.begin(), out.end());
  return out;
}

struct OrbitWeight {
  std::vector<int> weight;  // fundamental-weight coordinates
  int depth = 0;            // height of lambda - mu in the dual simple roots
};

/// Weyl orbit of the fundamental weight dual to a cominuscule node, computed
/// in the dual root system (transposed Cartan matrix) by breadth-first
/// closure under simple reflections.
inline std::vector<OrbitWeight> weyl_orbit_minuscule(const RootSystem& r, int node) {
  require_node(r, node);
  require(is_cominuscule(r, node), "not_cominuscule", "node",
          "node " + std::to_string(node) + " is not cominuscule");
  const int n = r.rank();
  const CartanMatrix dual = transpose(r.cartan());
  // alpha'_j in fundamental-weight coordinates is column j of the dual
  // Cartan matrix, i.e. row j of the original one.
  auto reflect = [&](std::vector<int> mu, int j) {
    const int s = mu[j];
    for (int i = 0; i < n; ++i) mu[i] -= s * dual[i][j];
    return mu;
  };
  std::vector<int> lambda(n, 0);
  lambda[node - 1] = 1;
  std::vector<std::vector<int>> order{lambda};
  std::set<std::vector<int>> seen{lambda};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int j = 0; j < n; ++j) {
      if (order[head][j] == 0) continue;
      auto nu = reflect(order[head], j);
      if (seen.insert(nu).second) order.push_back(std::move(nu));
    }
    ensure(order.size() < 1000000, "Weyl orbit too large");
  }

  // Invert the dual Cartan matrix over Q once.
  using Q = boost::rational<long long>;
  std::vector<std::vector<Q>> m(n, std::vector<Q>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = dual[i][j];
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col].numerator() == 0) ++piv;
    ensure(piv < n, "singular Cartan matrix");
    std::swap(m[piv], m[col]);
    const Q inv = Q(1) / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col].numerator() == 0) continue;
      const Q f = m[row][col];
      for (int k = 0; k < 2 * n; ++k) m[row][k] -= f * m[col][k];
    }
  }

  std::vector<OrbitWeight> out;
  out.reserve(order.size());
  for (const auto& mu : order) {
    Q depth = 0;
    for (int j = 0; j < n; ++j) {
      Q cj = 0;
      for (int i = 0; i < n; ++i) cj += m[j][n + i] * (lambda[i] - mu[i]);
      ensure(cj.denominator() == 1 && cj.numerator() >= 0, "orbit weight depth is not a nonnegative integer combination");
      depth += cj;
    }
    out.push_back(OrbitWeight{mu, static_cast<int>(depth.numerator())});
  }
  std::stable_sort(out.begin(), out.end(), [](const OrbitWeight& a, const OrbitWeight& b) { return a.depth < b.depth; });
  return out;
}

}  // namespace nilcone
