#pragma once

// Partitions of the degree, gcd profiles over the resolved chain, and the
// admissible boundary types (j, mu) of the compactified Hurwitz space.

#include "maroni/errors.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace maroni {

/// Degree d and genus g = (d-1)k of the covers; b = 2g - 2 + 2d branch points.
struct HurwitzParams {
  int d = 0;
  int g = 0;
  int k = 0;
  int b = 0;

  static HurwitzParams make(int d, int g) {
    if (d < 3) throw DomainError("HurwitzParams: need d >= 3, got d=" + std::to_string(d));
    if (g <= 0 || g % (d - 1) != 0) {
      throw DomainError("HurwitzParams: need g=(d-1)k with k >= 1, got d=" + std::to_string(d) +
                        ", g=" + std::to_string(g));
    }
    return HurwitzParams{d, g, g / (d - 1), 2 * g - 2 + 2 * d};
  }

  static HurwitzParams from_k(int d, int k) { return make(d, (d - 1) * k); }

  friend bool operator==(const HurwitzParams&, const HurwitzParams&) = default;
};

/// A partition mu = (m_1 >= ... >= m_n) of d, with m = lcm(m_1, ..., m_n).
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DomainError("Partition: no parts");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw DomainError("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw DomainError("Partition: parts must be non-increasing");
      }
    }
    lcm_ = 1;
    for (int p : parts_) lcm_ = std::lcm(lcm_, p);
  }

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return static_cast<int>(parts_.size()); }
  int m() const { return lcm_; }
  int degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool has_unit_part() const { return parts_.back() == 1; }

  /// Pipe-joined, e.g. "(3|2|1)"; comma-free so it can sit in a CSV cell.
  std::string str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += '|';
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  /// Reverse-lexicographic order: (3) < (2,1) < (1,1,1).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return b.parts_ <=> a.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int lcm_ = 1;
};

/// All partitions of d, each once, in reverse-lexicographic order.
inline std::vector<Partition> enumerate_partitions(int d) {
  if (d <= 0) throw DomainError("enumerate_partitions: need d >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  recurse(recurse, d, d);
  return out;
}

/// d_{nu,i} = gcd(m_nu, i) for i = 1..m with d_{nu,0} = m_nu, and
/// delta_i = d - sum_nu d_{nu,i}.
struct GcdProfile {
  std::vector<std::vector<int>> d_table;  // [nu][i], i = 0..m
  std::vector<int> delta;                 // i = 0..m

  int m() const { return static_cast<int>(delta.size()) - 1; }
};

inline GcdProfile gcd_profile(const Partition& mu) {
  const int m = mu.m();
  GcdProfile profile;
  profile.d_table.reserve(mu.parts().size());
  for (int part : mu.parts()) {
    std::vector<int> row(m + 1);
    row[0] = part;
    for (int i = 1; i <= m; ++i) row[i] = std::gcd(part, i);
    profile.d_table.push_back(std::move(row));
  }
  profile.delta.assign(m + 1, mu.degree());
  for (const auto& row : profile.d_table) {
    for (int i = 0; i <= m; ++i) profile.delta[i] -= row[i];
  }
  return profile;
}

/// An admissible boundary type (j, mu). The chain R_0..R_m sits over the
/// component carrying l = b - j branch points (R_0) and j branch points (R_m).
/// With (j + d - n)/2 = q(d-1) + r, the degree imbalance is c = d - n - 2r;
/// c' is the same quantity computed from l instead of j.
struct BoundaryType {
  HurwitzParams params;
  int j = 0;
  Partition mu;
  GcdProfile profile;
  int q = 0;
  int r = 0;
  int c = 0;
  int cprime = 0;
  int l = 0;

  int d() const { return params.d; }
  int n() const { return mu.n(); }
  int m() const { return mu.m(); }
  const std::vector<int>& delta() const { return profile.delta; }
  int canonical_j() const { return std::min(j, params.b - j); }
  bool is_canonical() const { return j <= params.b - j; }
};

namespace detail {

// (h + d - n)/2 = q(d-1) + r, 0 <= r < d-1; returns {q, r}.
inline std::pair<int, int> split_degree(int h, int d, int n) {
  const int half = (h + d - n) / 2;
  const int q = half / (d - 1);
  return {q, half - q * (d - 1)};
}

inline std::int64_t cversuscprime_side(int c, int d) {
  const std::int64_t a = c < 0 ? -c : c;
  return a * (a - 2 * (d - 1));
}

}  // namespace detail

inline BoundaryType make_boundary_type(const HurwitzParams& params, int j, const Partition& mu) {
  if (mu.degree() != params.d) {
    throw DomainError("make_boundary_type: mu=" + mu.str() + " is not a partition of d=" +
                      std::to_string(params.d));
  }
  if (j < 2 || j > params.b - 2) {
    throw DomainError("make_boundary_type: need 2 <= j <= b-2 = " + std::to_string(params.b - 2) +
                      ", got j=" + std::to_string(j));
  }
  const int d = params.d;
  const int n = mu.n();
  if ((j + d - n) % 2 != 0) {
    throw AdmissibilityError("make_boundary_type: j + d - n = " + std::to_string(j + d - n) +
                             " is odd for j=" + std::to_string(j) + ", mu=" + mu.str());
  }
  BoundaryType bt;
  bt.params = params;
  bt.j = j;
  bt.mu = mu;
  bt.profile = gcd_profile(mu);
  std::tie(bt.q, bt.r) = detail::split_degree(j, d, n);
  bt.c = d - n - 2 * bt.r;
  bt.l = params.b - j;
  bt.cprime = d - n - 2 * detail::split_degree(bt.l, d, n).second;
  ensure(detail::cversuscprime_side(bt.c, d) == detail::cversuscprime_side(bt.cprime, d),
         "|c|(|c|-2(d-1)) != |c'|(|c'|-2(d-1)) for j=" + std::to_string(j) + ", mu=" + mu.str());
  return bt;
}

/// One canonical representative (2 <= j <= b/2) per parity-admissible pair,
/// ordered by j, then mu reverse-lexicographically.
inline std::vector<BoundaryType> enumerate_boundary_types(const HurwitzParams& params) {
  const auto partitions = enumerate_partitions(params.d);
  std::vector<BoundaryType> out;
  for (int j = 2; j <= params.b / 2; ++j) {
    for (const auto& mu : partitions) {
      if ((j + params.d - mu.n()) % 2 != 0) continue;
      out.push_back(make_boundary_type(params, j, mu));
    }
  }
  return out;
}

}  // namespace maroni
