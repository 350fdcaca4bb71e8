#pragma once

// Brute-force references used only by the tests. Nothing here calls the
// library routine it is meant to check.

#include <functional>
#include <random>
#include <vector>

#include "cochar/hook.hpp"
#include "cochar/schur.hpp"

namespace oracle {

using namespace cochar;

// Cells of lam in row-major order.
inline std::vector<std::pair<int, int>> cells(const Partition& lam) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam[i]; ++j) out.emplace_back(i, j);
  return out;
}

// Fills every cell with a letter in [0, alphabet) and calls accept on each
// filling that passes ok(row, col, letter, grid).
inline void fillings(const Partition& lam, int alphabet,
                     const std::function<bool(const std::vector<std::vector<int>>&, int, int, int)>& ok,
                     const std::function<void(const std::vector<std::vector<int>>&)>& accept) {
  auto cs = cells(lam);
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(lam.length()));
  for (int i = 0; i < lam.length(); ++i) grid[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lam[i]), -1);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cs.size()) {
      accept(grid);
      return;
    }
    auto [r, c] = cs[idx];
    for (int x = 0; x < alphabet; ++x) {
      if (!ok(grid, r, c, x)) continue;
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = x;
      rec(idx + 1);
      grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = -1;
    }
  };
  rec(0);
}

inline Series monomial_of(const std::vector<std::vector<int>>& grid, const VarSet& vars, int bound) {
  std::vector<int> e(static_cast<std::size_t>(vars.size()), 0);
  for (const auto& row : grid)
    for (int x : row) ++e[static_cast<std::size_t>(x)];
  return Series::monomial(vars, bound, make_monomial(e));
}

// Semistandard tableaux: rows weakly increasing, columns strictly increasing.
inline Series ssyt_poly(const Partition& lam, int d, int bound) {
  VarSet vars = VarSet::indexed("t", d);
  Series out(vars, bound);
  auto at = [](const auto& g, int r, int c) { return g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };
  fillings(
      lam, d,
      [&](const auto& g, int r, int c, int x) {
        if (c > 0 && at(g, r, c - 1) > x) return false;
        if (r > 0 && at(g, r - 1, c) >= x) return false;
        return true;
      },
      [&](const auto& g) { out += monomial_of(g, vars, bound); });
  return out;
}

// (k,l)-semistandard tableaux over t1 < .. < tk < y1 < .. < yl: weakly increasing
// rows and columns, t-letters strictly increasing down columns, y-letters
// strictly increasing along rows.
inline Series hook_tableaux_poly(const Partition& lam, int k, int l, int bound) {
  VarSet vars = VarSet::hook(k, l);
  Series out(vars, bound);
  auto at = [](const auto& g, int r, int c) { return g[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; };
  fillings(
      lam, k + l,
      [&](const auto& g, int r, int c, int x) {
        const bool is_t = x < k;
        if (c > 0) {
          int left = at(g, r, c - 1);
          if (left > x || (!is_t && left == x)) return false;
        }
        if (r > 0) {
          int up = at(g, r - 1, c);
          if (up > x || (is_t && up == x)) return false;
        }
        return true;
      },
      [&](const auto& g) { out += monomial_of(g, vars, bound); });
  return out;
}

// beta / lam is a horizontal (vertical) strip, tested on the diagrams directly.
inline bool horizontal_strip(const Partition& beta, const Partition& lam) {
  if (!contains(beta, lam)) return false;
  for (int i = 0; i + 1 < beta.length(); ++i)
    if (beta[i + 1] > lam[i]) return false;
  return true;
}
inline bool vertical_strip(const Partition& beta, const Partition& lam) {
  if (!contains(beta, lam)) return false;
  for (int i = 0; i < beta.length(); ++i)
    if (beta[i] - lam[i] > 1) return false;
  return true;
}

// Pieri rules by scanning every partition of the target weight.
inline PartitionMap strip_products(const Partition& lam, int m, bool row, int max_parts,
                                   const std::function<bool(const Partition&)>& keep) {
  PartitionMap out;
  for (const auto& beta : partitions_of(lam.weight() + m, max_parts))
    if ((row ? horizontal_strip(beta, lam) : vertical_strip(beta, lam)) && keep(beta))
      accumulate(out, beta, 1);
  return out;
}

inline PartitionMap random_map(std::mt19937& rng, int max_weight, int max_parts,
                               const std::function<bool(const Partition&)>& keep, int terms = 4) {
  PartitionMap out;
  std::uniform_int_distribution<int> w(0, max_weight), c(1, 5);
  for (int i = 0; i < terms; ++i) {
    auto ps = partitions_of(w(rng), max_parts);
    std::vector<Partition> ok;
    for (auto& p : ps)
      if (keep(p)) ok.push_back(p);
    if (ok.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, ok.size() - 1);
    accumulate(out, ok[pick(rng)], c(rng));
  }
  return out;
}

inline SchurExpansion random_schur(std::mt19937& rng, int d, int bound, int max_weight) {
  SchurExpansion e(d, bound);
  for (auto& [lam, c] : random_map(rng, max_weight, d, [](const Partition&) { return true; }))
    e.add(lam, c);
  return e;
}

inline HookExpansion random_hook(std::mt19937& rng, int k, int l, int bound, int max_weight) {
  HookExpansion e(k, l, bound);
  for (auto& [lam, c] :
       random_map(rng, max_weight, kUnbounded, [&](const Partition& p) { return in_hook(p, k, l); }))
    e.add(lam, c);
  return e;
}

}  // namespace oracle
