#pragma once

// Exact maximization of a quadratic objective over an integer box
// center + [-R, R]^n, optionally with per-coordinate lower bounds.
//
// Small boxes are enumerated. Larger ones use dynamic programming along the
// chain: the quadratic is recovered from the objective by polarization and
// must couple only neighbouring blocks of coordinates.

#include "maroni/errors.hpp"
#include "maroni/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace maroni {

using LatticePoint = std::vector<Integer>;
using Objective = std::function<Rational(const LatticePoint&)>;

struct BoxProblem {
  LatticePoint center;
  int radius = 0;
  std::vector<std::optional<Integer>> lower;  // empty, or one entry per coordinate
  int block = 1;                              // coordinates per chain position
};

struct BoxMaximum {
  Rational value;
  LatticePoint argmax;
  std::size_t points = 0;  // lattice points covered by the search
};

namespace detail {

inline std::vector<std::vector<Integer>> coordinate_ranges(const BoxProblem& p) {
  std::vector<std::vector<Integer>> ranges(p.center.size());
  for (std::size_t i = 0; i < p.center.size(); ++i) {
    for (int h = -p.radius; h <= p.radius; ++h) {
      Integer v = p.center[i] + h;
      if (!p.lower.empty() && p.lower[i] && v < *p.lower[i]) continue;
      ranges[i].push_back(v);
    }
  }
  return ranges;
}

inline double box_size(const std::vector<std::vector<Integer>>& ranges) {
  double total = 1;
  for (const auto& r : ranges) total *= static_cast<double>(r.size());
  return total;
}

// Quadratic model value(h) = c0 + sum L_p h_p + sum_{p<=q} Q_pq h_p h_q around the center.
struct QuadraticModel {
  Rational c0;
  std::vector<Rational> linear;
  std::vector<std::vector<Rational>> quad;  // upper triangle, Q_pp is the h_p^2 coefficient

  Rational eval(const std::vector<Integer>& h) const {
    Rational v = c0;
    const std::size_t n = linear.size();
    for (std::size_t p = 0; p < n; ++p) {
      if (h[p] == 0) continue;
      v += linear[p] * h[p];
      for (std::size_t q = p; q < n; ++q) {
        if (h[q] != 0 && quad[p][q] != 0) v += quad[p][q] * h[p] * h[q];
      }
    }
    return v;
  }
};

inline QuadraticModel polarize(const Objective& f, const LatticePoint& center) {
  const std::size_t n = center.size();
  auto at = [&](const std::vector<Integer>& h) {
    LatticePoint x = center;
    for (std::size_t i = 0; i < n; ++i) x[i] += h[i];
    return f(x);
  };
  QuadraticModel model;
  model.c0 = f(center);
  model.linear.assign(n, Rational(0));
  model.quad.assign(n, std::vector<Rational>(n, Rational(0)));
  std::vector<Integer> h(n, Integer(0));
  for (std::size_t p = 0; p < n; ++p) {
    h[p] = 1;
    const Rational plus = at(h);
    h[p] = -1;
    const Rational minus = at(h);
    h[p] = 0;
    model.linear[p] = (plus - minus) / 2;
    model.quad[p][p] = (plus + minus) / 2 - model.c0;
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      h[p] = 1;
      h[q] = 1;
      model.quad[p][q] = at(h) - model.c0 - model.linear[p] - model.linear[q] - model.quad[p][p] - model.quad[q][q];
      h[p] = 0;
      h[q] = 0;
    }
  }
  // Spot checks that the objective really is this quadratic.
  std::vector<Integer> probe(n);
  for (std::size_t i = 0; i < n; ++i) probe[i] = (i % 3 == 0) ? 2 : (i % 3 == 1 ? -1 : 3);
  ensure(model.eval(probe) == at(probe), "box search: objective is not quadratic");
  for (std::size_t i = 0; i < n; ++i) probe[i] = -probe[i] + 1;
  ensure(model.eval(probe) == at(probe), "box search: objective is not quadratic");
  return model;
}

}  // namespace detail

/// Enumerates every lattice point of the box.
inline BoxMaximum maximize_box_brute_force(const Objective& f, const BoxProblem& p) {
  const auto ranges = detail::coordinate_ranges(p);
  const std::size_t n = ranges.size();
  for (const auto& r : ranges) {
    if (r.empty()) throw DomainError("box search: empty coordinate range");
  }
  std::vector<std::size_t> idx(n, 0);
  LatticePoint x(n);
  BoxMaximum best;
  bool first = true;
  while (true) {
    for (std::size_t i = 0; i < n; ++i) x[i] = ranges[i][idx[i]];
    Rational v = f(x);
    ++best.points;
    if (first || v > best.value) {
      best.value = v;
      best.argmax = x;
      first = false;
    }
    std::size_t i = 0;
    while (i < n && ++idx[i] == ranges[i].size()) idx[i++] = 0;
    if (i == n) break;
  }
  return best;
}

/// Dynamic programming over chain positions of `p.block` coordinates each.
inline BoxMaximum maximize_box_chain(const Objective& f, const BoxProblem& p) {
  const std::size_t n = p.center.size();
  const std::size_t block = static_cast<std::size_t>(p.block);
  if (block == 0 || n % block != 0) throw DomainError("box search: dimension is not a multiple of the block size");
  const auto ranges = detail::coordinate_ranges(p);
  for (const auto& r : ranges) {
    if (r.empty()) throw DomainError("box search: empty coordinate range");
  }
  const auto model = detail::polarize(f, p.center);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (model.quad[a][b] != 0 && b / block > a / block + 1) {
        throw InvariantError("box search: objective couples non-adjacent chain positions");
      }
    }
  }

  const std::size_t positions = n / block;
  // Offsets h for every state of one position.
  std::vector<std::vector<std::vector<Integer>>> states(positions);
  for (std::size_t t = 0; t < positions; ++t) {
    std::vector<std::size_t> idx(block, 0);
    while (true) {
      std::vector<Integer> h(block);
      for (std::size_t k = 0; k < block; ++k) h[k] = ranges[t * block + k][idx[k]] - p.center[t * block + k];
      states[t].push_back(std::move(h));
      std::size_t k = 0;
      while (k < block && ++idx[k] == ranges[t * block + k].size()) idx[k++] = 0;
      if (k == block) break;
    }
  }

  auto unary = [&](std::size_t t, const std::vector<Integer>& h) {
    Rational v = 0;
    for (std::size_t a = 0; a < block; ++a) {
      const std::size_t pa = t * block + a;
      v += model.linear[pa] * h[a];
      for (std::size_t b = a; b < block; ++b) v += model.quad[pa][t * block + b] * h[a] * h[b];
    }
    return v;
  };
  auto binary = [&](std::size_t t, const std::vector<Integer>& prev, const std::vector<Integer>& cur) {
    Rational v = 0;
    for (std::size_t a = 0; a < block; ++a) {
      for (std::size_t b = 0; b < block; ++b) {
        v += model.quad[(t - 1) * block + a][t * block + b] * prev[a] * cur[b];
      }
    }
    return v;
  };

  std::vector<std::vector<Rational>> score(positions);
  std::vector<std::vector<std::size_t>> back(positions);
  BoxMaximum out;
  out.points = 1;
  for (std::size_t t = 0; t < positions; ++t) {
    out.points *= states[t].size();
    score[t].resize(states[t].size());
    back[t].assign(states[t].size(), 0);
    for (std::size_t s = 0; s < states[t].size(); ++s) {
      Rational best = 0;
      std::size_t arg = 0;
      if (t > 0) {
        for (std::size_t r = 0; r < states[t - 1].size(); ++r) {
          Rational v = score[t - 1][r] + binary(t, states[t - 1][r], states[t][s]);
          if (r == 0 || v > best) {
            best = v;
            arg = r;
          }
        }
      }
      score[t][s] = best + unary(t, states[t][s]);
      back[t][s] = arg;
    }
  }
  std::size_t s = 0;
  for (std::size_t r = 1; r < score.back().size(); ++r) {
    if (score.back()[r] > score.back()[s]) s = r;
  }
  out.value = model.c0 + score.back()[s];
  out.argmax = p.center;
  for (std::size_t t = positions; t-- > 0;) {
    for (std::size_t k = 0; k < block; ++k) out.argmax[t * block + k] += states[t][s][k];
    if (t > 0) s = back[t][s];
  }
  ensure(f(out.argmax) == out.value, "box search: dynamic programming value does not match the objective");
  return out;
}

/// Brute force up to `brute_force_limit` points, chain DP beyond.
inline BoxMaximum maximize_box(const Objective& f, const BoxProblem& p, double brute_force_limit = 20000) {
  if (p.center.empty()) return BoxMaximum{f(p.center), p.center, 1};
  if (detail::box_size(detail::coordinate_ranges(p)) <= brute_force_limit) return maximize_box_brute_force(f, p);
  return maximize_box_chain(f, p);
}

}  // namespace maroni
