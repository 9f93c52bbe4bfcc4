#pragma once

// Brute-force oracles shared by the test binaries. None of them touch the
// sum table or the cone solver.

#include <set>
#include <vector>

#include "pdclass/classifier.hpp"
#include "pdclass/grading.hpp"
#include "pdclass/rootsys.hpp"
#include "pdclass/structures.hpp"

namespace pdclass::testing {

inline Root R(std::vector<int> c) { return Root{std::move(c)}; }

inline RootSet set_of(const RootSystem& rs, const std::vector<std::vector<int>>& roots) {
  RootSet out(rs.size());
  for (const auto& c : roots) out.insert(rs.id_of(Root{c}));
  return out;
}

inline std::set<std::vector<int>> coeffs_of(const RootSystem& rs, const RootSet& s) {
  std::set<std::vector<int>> out;
  for (RootId id : s) out.insert(rs.root(id).coefficients);
  return out;
}

// Orbit of the simple roots under simple reflections
// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
inline std::set<std::vector<int>> weyl_orbit_roots(const RootSystem& rs) {
  const auto& a = rs.cartan_matrix();
  const int r = rs.rank();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    auto beta = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < r; ++i) {
      int pairing = 0;
      for (int j = 0; j < r; ++j) pairing += beta[j] * a[j][i];
      auto image = beta;
      image[i] -= pairing;
      if (seen.insert(image).second) frontier.push_back(image);
    }
  }
  return seen;
}

inline std::vector<int> add(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
  return out;
}

// Sum-freeness of Nplus checked with coefficient arithmetic and a root
// membership set from the Weyl orbit.
inline bool brute_classical(const HodgeGrading& g) {
  const RootSystem& rs = g.root_system();
  const auto roots = weyl_orbit_roots(rs);
  for (RootId a : g.nplus()) {
    for (RootId b : g.nplus()) {
      if (roots.count(add(rs.root(a).coefficients, rs.root(b).coefficients))) return false;
    }
  }
  return true;
}

// All 2^k sign choices over the pairs of Delta \ V0, kept when every axiom
// holds; closure is checked via coefficient arithmetic.
inline std::set<std::set<std::vector<int>>> brute_structures(const HodgeGrading& g) {
  const RootSystem& rs = g.root_system();
  const auto roots = weyl_orbit_roots(rs);
  std::set<std::vector<int>> v0;
  for (RootId id : g.v0()) v0.insert(rs.root(id).coefficients);
  std::vector<std::vector<int>> pairs;
  for (RootId id : g.n_minus()) pairs.push_back(rs.root(id).coefficients);
  std::set<std::set<std::vector<int>>> out;
  const std::size_t k = pairs.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::set<std::vector<int>> s;
    for (std::size_t i = 0; i < k; ++i) {
      auto c = pairs[i];
      if (mask >> i & 1) {
        for (auto& x : c) x = -x;
      }
      s.insert(c);
    }
    bool ok = true;
    for (const auto& x : s) {
      for (const auto& y : s) {
        const auto z = add(x, y);
        if (roots.count(z) && !s.count(z)) ok = false;
      }
      for (const auto& v : v0) {
        const auto z = add(x, v);
        if (roots.count(z) && !s.count(z)) ok = false;
      }
    }
    if (ok) out.insert(s);
  }
  return out;
}

inline std::size_t weyl_group_order(char type, int rank) {
  auto fact = [](int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
    return f;
  };
  switch (type) {
    case 'A':
      return fact(rank + 1);
    case 'B':
    case 'C':
      return (std::size_t{1} << rank) * fact(rank);
    case 'D':
      return (std::size_t{1} << (rank - 1)) * fact(rank);
    case 'G':
      return 12;
    case 'F':
      return 1152;
    case 'E':
      return rank == 6 ? 51840 : rank == 7 ? 2903040 : 696729600;
  }
  return 0;
}

inline const std::vector<std::pair<char, int>>& sweep_systems() {
  static const std::vector<std::pair<char, int>> systems{
      {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
      {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'G', 2}, {'F', 4}};
  return systems;
}

}  // namespace pdclass::testing
