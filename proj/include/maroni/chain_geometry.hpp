#pragma once

// Intersection theory on the resolved fibre R_0, ..., R_m over a boundary
// point: R_0^2 = R_m^2 = -1, R_i^2 = -2 inside, neighbours meet once. The
// distinguished section S meets R_m only.

#include "maroni/combinatorics.hpp"
#include "maroni/errors.hpp"
#include "maroni/rational.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace maroni {

struct ChainModel {
  int m = 1;  // components R_0..R_m

  explicit ChainModel(int length) : m(length) {
    if (m < 1) throw DomainError("ChainModel: need m >= 1");
  }

  int components() const { return m + 1; }

  int pairing(int a, int b) const {
    if (a < 0 || b < 0 || a > m || b > m) throw DomainError("ChainModel: component index out of range");
    if (a == b) return (a == 0 || a == m) ? -1 : -2;
    return (a - b == 1 || b - a == 1) ? 1 : 0;
  }

  friend bool operator==(const ChainModel&, const ChainModel&) = default;
};

/// Rational combination e_0 R_0 + ... + e_m R_m. Half-integers are allowed.
class FibralDivisor {
 public:
  FibralDivisor() = default;
  explicit FibralDivisor(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw DomainError("FibralDivisor: need at least R_0 and R_m");
  }

  static FibralDivisor zero(int m) { return FibralDivisor(std::vector<Rational>(m + 1)); }
  static FibralDivisor component(int m, int i) {
    auto d = zero(m);
    d.coeffs_.at(i) = 1;
    return d;
  }
  static FibralDivisor full_fibre(int m) { return FibralDivisor(std::vector<Rational>(m + 1, Rational(1))); }

  int m() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_.at(i); }
  Rational& operator[](int i) { return coeffs_.at(i); }

  Rational max_coeff() const { return *std::max_element(coeffs_.begin(), coeffs_.end()); }
  Rational min_coeff() const { return *std::min_element(coeffs_.begin(), coeffs_.end()); }

  FibralDivisor& operator+=(const FibralDivisor& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  FibralDivisor& operator-=(const FibralDivisor& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  FibralDivisor& operator*=(const Rational& s) {
    for (auto& x : coeffs_) x *= s;
    return *this;
  }

  friend FibralDivisor operator+(FibralDivisor a, const FibralDivisor& b) { return a += b; }
  friend FibralDivisor operator-(FibralDivisor a, const FibralDivisor& b) { return a -= b; }
  friend FibralDivisor operator-(FibralDivisor a) { return a *= Rational(-1); }
  friend FibralDivisor operator*(const Rational& s, FibralDivisor a) { return a *= s; }
  friend bool operator==(const FibralDivisor&, const FibralDivisor&) = default;

 private:
  void check_same(const FibralDivisor& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw DomainError("FibralDivisor: chain length mismatch");
  }

  std::vector<Rational> coeffs_;
};

/// Symmetric bilinear pairing from the intersection matrix of the chain.
inline Rational intersect(const ChainModel& chain, const FibralDivisor& a, const FibralDivisor& b) {
  if (a.m() != chain.m || b.m() != chain.m) throw DomainError("intersect: divisor does not live on this chain");
  Rational total = 0;
  for (int i = 0; i <= chain.m; ++i) {
    for (int k = std::max(0, i - 1); k <= std::min(chain.m, i + 1); ++k) {
      if (a[i] == 0 || b[k] == 0) continue;
      total += a[i] * b[k] * chain.pairing(i, k);
    }
  }
  return total;
}

/// theta_p . D for the relative dualizing class, via adjunction: -e_0 - e_m.
inline Rational theta_dot(const ChainModel& chain, const FibralDivisor& d) {
  if (d.m() != chain.m) throw DomainError("theta_dot: divisor does not live on this chain");
  return -d[0] - d[chain.m];
}

/// Fibral part sum_{i<m} (m-i) R_i of the representative -2S + sum (m-i) R_i.
inline FibralDivisor theta_fibral_part(int m) {
  auto t = FibralDivisor::zero(m);
  for (int i = 0; i < m; ++i) t[i] = m - i;
  return t;
}

/// theta_p . D computed from the representative -2S + sum_{i<m} (m-i) R_i.
inline Rational theta_dot_by_representative(const ChainModel& chain, const FibralDivisor& d) {
  return intersect(chain, theta_fibral_part(chain.m), d) - 2 * d[chain.m];
}

struct ShiftResult {
  FibralDivisor shifted;      // D_sh: max coefficient 0
  FibralDivisor fibre_part;   // F_D = (min_i e_i) F
};

inline ShiftResult shift_and_fibre_part(const FibralDivisor& d) {
  const int m = d.m();
  const auto full = FibralDivisor::full_fibre(m);
  return {d - d.max_coeff() * full, d.min_coeff() * full};
}

/// Multiple of the full fibre in F_D.
inline Rational fibre_multiplicity(const FibralDivisor& d) { return d.min_coeff(); }

/// The standard divisor A = -sum_{i<m} alpha_i R_i with
/// alpha_i = ((m-i)c - delta_i)/2 and alpha_m = 0.
struct StandardA {
  BoundaryType bt;
  std::vector<Integer> alpha;  // coefficients of -A, i = 0..m

  FibralDivisor divisor() const {
    std::vector<Rational> coeffs;
    coeffs.reserve(alpha.size());
    for (const auto& a : alpha) coeffs.emplace_back(-a);
    return FibralDivisor(std::move(coeffs));
  }
};

/// Degrees of V' = V (x) M on R_0..R_m: d-n-r, the interior second
/// differences of the gcd table, and r.
inline std::vector<Rational> twisted_bundle_degrees(const BoundaryType& bt) {
  const int m = bt.m();
  std::vector<Rational> v(m + 1);
  v[0] = bt.d() - bt.n() - bt.r;
  v[m] = bt.r;
  for (int i = 1; i < m; ++i) {
    int twice = 0;
    for (const auto& row : bt.profile.d_table) twice += -row[i - 1] + 2 * row[i] - row[i + 1];
    v[i] = rational(twice, 2);
  }
  return v;
}

inline StandardA a_standard(const BoundaryType& bt) {
  const int m = bt.m();
  StandardA a{bt, std::vector<Integer>(m + 1)};
  for (int i = 0; i < m; ++i) {
    const int twice = (m - i) * bt.c - bt.delta()[i];
    ensure(twice % 2 == 0, "a_standard: alpha_" + std::to_string(i) + " is not integral for j=" +
                               std::to_string(bt.j) + ", mu=" + bt.mu.str());
    a.alpha[i] = twice / 2;
  }
  const ChainModel chain(m);
  const auto divisor = a.divisor();
  const auto degrees = twisted_bundle_degrees(bt);
  Rational total = 0;
  for (int i = 0; i <= m; ++i) {
    ensure(intersect(chain, divisor, FibralDivisor::component(m, i)) == degrees[i],
           "a_standard: restriction degree mismatch on R_" + std::to_string(i));
    total += degrees[i];
  }
  ensure(total == 0, "a_standard: total degree on the chain is not 0");
  return a;
}

struct BranchDivisor {
  FibralDivisor we;  // W_E = sum delta_i R_i
  Rational we_sq;    // -sum_{i=1}^m (delta_i - delta_{i-1})^2
};

inline Rational we_square_closed_form(const std::vector<int>& delta) {
  Rational s = 0;
  for (std::size_t i = 1; i < delta.size(); ++i) {
    const int diff = delta[i] - delta[i - 1];
    s -= diff * diff;
  }
  return s;
}

inline BranchDivisor we_divisor(const BoundaryType& bt) {
  const int m = bt.m();
  auto we = FibralDivisor::zero(m);
  for (int i = 0; i <= m; ++i) we[i] = bt.delta()[i];
  const Rational closed = we_square_closed_form(bt.delta());
  ensure(closed == intersect(ChainModel(m), we, we), "we_divisor: closed form and matrix pairing disagree");
  return {std::move(we), closed};
}

/// Intersection numbers on the normal surface Y above the chain, for the
/// branch nu of mu (0-based) and the component T'_{nu,i}.
struct NormalSurfaceNumbers {
  Rational t_sq;            // T'_{nu,i}^2 = -2 m_nu
  Rational c_dot_t;         // C_nu . T'_{nu,i} = m_nu
  Rational t_dot_next;      // T'_{nu,i} . T'_{nu,i+1} = m_nu
  Rational c_dot_u;         // nu^*C_nu . U = 3(m_nu - 1) + 2 g(C_nu)
  Rational t_dot_u;         // nu^*T'_{nu,i} . U = -d_{i-1} + 2 d_i - d_{i+1}
  Rational z_sq;            // Z^2 = -m_nu sum (a_{i-1} - a_i)^2
  Rational pushforward_sq;  // (pi_* Z)^2
  Rational pushforward_dot_w;
};

/// `coeffs` are a_{nu,0}..a_{nu,m-1} of Z_1 = a_0 C_nu + sum a_i T'_{nu,i}; a_{nu,m} = 0.
inline NormalSurfaceNumbers normal_surface_numbers(const BoundaryType& bt, int nu, int i,
                                                   const std::vector<Rational>& coeffs, int genus_c) {
  const int m = bt.m();
  if (nu < 0 || nu >= bt.n()) throw DomainError("normal_surface_numbers: branch index out of range");
  if (i < 1 || i > m - 1) throw DomainError("normal_surface_numbers: need 1 <= i <= m-1");
  if (static_cast<int>(coeffs.size()) != m) throw DomainError("normal_surface_numbers: need m coefficients");
  if (genus_c < 0) throw DomainError("normal_surface_numbers: negative genus");

  const int m_nu = bt.mu.parts()[nu];
  const auto& dn = bt.profile.d_table[nu];
  const auto& delta = bt.delta();
  auto a = [&](int t) { return t < m ? coeffs[t] : Rational(0); };

  NormalSurfaceNumbers out;
  out.t_sq = -2 * m_nu;
  out.c_dot_t = m_nu;
  out.t_dot_next = m_nu;
  out.c_dot_u = 3 * (m_nu - 1) + 2 * genus_c;
  out.t_dot_u = -dn[i - 1] + 2 * dn[i] - dn[i + 1];
  out.z_sq = 0;
  out.pushforward_sq = 0;
  out.pushforward_dot_w = a(0) * m_nu * bt.l;
  for (int t = 1; t <= m; ++t) {
    const Rational step = a(t - 1) - a(t);
    out.z_sq -= m_nu * step * step;
    const Rational weighted = dn[t - 1] * a(t - 1) - dn[t] * a(t);
    out.pushforward_sq -= weighted * weighted;
    out.pushforward_dot_w -= weighted * (delta[t - 1] - delta[t]);
  }
  return out;
}

}  // namespace maroni
