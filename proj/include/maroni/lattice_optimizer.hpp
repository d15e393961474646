#pragma once

// The quadratic functionals behind the two coefficient corrections: the
// twist functional f(N), the joint functional f(Z, N), their rational
// critical points, the rounding to integral points, and exact integer-max
// checks over boxes around the rounded points.

#include "maroni/box_search.hpp"
#include "maroni/chain_geometry.hpp"
#include "maroni/combinatorics.hpp"
#include "maroni/errors.hpp"
#include "maroni/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace maroni {

struct RoundedPoint {
  std::vector<Integer> alpha;    // alpha_0..alpha_{m-1}
  std::vector<Rational> e;       // alpha_i - target_i; e_m = 0 is implicit
  std::vector<Integer> xi;       // joint case only
  std::vector<Rational> eprime;  // joint case only
  Rational sum_sq;               // sum_{i=1}^m (e_{i-1} - e_i)^2
  Rational value;                // objective at the point (set by the caller)
  std::size_t branches = 1;      // rounding branches examined
  bool ties_agree = true;        // every branch had the same sum_sq
};

struct CorrectionResult {
  BoundaryType bt;
  Rational delta;  // subtracted from the standard coefficient
  RoundedPoint point;
  Rational fmax;
  Rational sum_sq;
  Rational ferr;
  Rational fibre_term;  // f_A - f_{A_1}
};

namespace detail {

inline Rational sum_sq_of(const std::vector<Rational>& e) {
  Rational s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Rational next = i + 1 < e.size() ? e[i + 1] : Rational(0);
    s += (e[i] - next) * (e[i] - next);
  }
  return s;
}

inline FibralDivisor on_chain(const std::vector<Rational>& lower) {
  auto coeffs = lower;
  coeffs.emplace_back(0);
  return FibralDivisor(std::move(coeffs));
}

inline std::vector<Rational> to_rationals(const std::vector<Integer>& v) {
  return {v.begin(), v.end()};
}

}  // namespace detail

/// Rounds targets t_0..t_{m-1} to integers alpha_i = t_i + e_i with
/// e_{m-1} in [-1/2, 1/2) and |e_i - e_{i+1}| <= 1/2. The default takes the
/// smaller integer whenever both ends of an interval are integral. With
/// `explore_ties` every such branch is followed and one minimizing
/// sum (e_{i-1} - e_i)^2 is kept; exact ties go to the smaller residuals.
inline RoundedPoint round_chain(const std::vector<Rational>& targets, bool explore_ties = false) {
  const int m = static_cast<int>(targets.size());
  if (m == 0) throw DomainError("round_chain: no targets");
  const Rational half = rational(1, 2);

  // Per level, states keyed by e_i. The future cost depends on e_i alone,
  // so keeping the best prefix per state is exact.
  struct Node {
    Rational best;
    Rational worst;
    std::size_t paths = 0;
    Rational prev_e;  // e_{i+1} on the best prefix
    Integer alpha;
  };
  std::vector<std::map<Rational, Node>> levels(m);

  {
    const Integer a = ceil_of(targets[m - 1] - half);
    const Rational e = Rational(a) - targets[m - 1];
    levels[m - 1].emplace(e, Node{e * e, e * e, 1, Rational(0), a});
  }
  for (int i = m - 2; i >= 0; --i) {
    for (const auto& [e_next, node] : levels[i + 1]) {
      const Rational lo = targets[i] + e_next - half;
      const Integer first = ceil_of(lo);
      const Integer last = explore_ties ? floor_of(lo + 1) : first;
      for (Integer a = first; a <= last; ++a) {
        const Rational e = Rational(a) - targets[i];
        const Rational step = (e - e_next) * (e - e_next);
        auto [it, inserted] = levels[i].try_emplace(e, Node{node.best + step, node.worst + step, node.paths, e_next, a});
        if (!inserted) {
          Node& n = it->second;
          n.paths += node.paths;
          if (node.worst + step > n.worst) n.worst = node.worst + step;
          if (node.best + step < n.best) {
            n.best = node.best + step;
            n.prev_e = e_next;
          }
        }
      }
    }
  }

  const std::map<Rational, Node>& last = levels[0];
  auto chosen = last.begin();
  Rational worst = chosen->second.worst;
  std::size_t paths = 0;
  for (auto it = last.begin(); it != last.end(); ++it) {
    paths += it->second.paths;
    if (it->second.worst > worst) worst = it->second.worst;
    if (it->second.best < chosen->second.best) chosen = it;
  }

  RoundedPoint out;
  out.alpha.resize(m);
  out.e.resize(m);
  Rational e = chosen->first;
  for (int i = 0; i < m; ++i) {
    const Node& node = levels[i].at(e);
    out.alpha[i] = node.alpha;
    out.e[i] = e;
    e = node.prev_e;
  }
  out.sum_sq = chosen->second.best;
  out.branches = paths;
  out.ties_agree = chosen->second.best == worst;
  ensure(out.sum_sq == detail::sum_sq_of(out.e), "round_chain: bookkeeping of sum_sq is off");
  ensure(out.e[m - 1] >= -half && out.e[m - 1] < half, "round_chain: e_{m-1} outside [-1/2, 1/2)");
  for (int i = 0; i + 1 < m; ++i) {
    ensure(abs_of(out.e[i] - out.e[i + 1]) <= half, "round_chain: |e_i - e_{i+1}| > 1/2");
  }
  return out;
}

/// Evaluates f(N) = N.A + (d-1)/2 (N^2 - N.theta) on one chain.
class TwistFunctional {
 public:
  explicit TwistFunctional(const BoundaryType& bt)
      : chain_(bt.m()), a_(a_standard(bt).divisor()), d_(bt.d()) {}

  Rational operator()(const FibralDivisor& n) const {
    return intersect(chain_, n, a_) +
           rational(d_ - 1, 2) * (intersect(chain_, n, n) - theta_dot(chain_, n));
  }

  const FibralDivisor& a() const { return a_; }
  const ChainModel& chain() const { return chain_; }

 private:
  ChainModel chain_;
  FibralDivisor a_;
  int d_;
};

/// f(N); N lives on R_0..R_m. Adding q F shifts the value by (d-1) q.
inline Rational f_twist(const BoundaryType& bt, const FibralDivisor& n) {
  if (n.m() != bt.m()) throw DomainError("f_twist: divisor does not live on this chain");
  return TwistFunctional(bt)(n);
}

/// a_i = ((m-i)a - delta_i) / (2(d-1)) with a = d-1+c, for i = 0..m-1.
inline std::vector<Rational> critical_n(const BoundaryType& bt) {
  const int m = bt.m();
  const int d = bt.d();
  const int a = d - 1 + bt.c;
  std::vector<Rational> t(m);
  for (int i = 0; i < m; ++i) t[i] = rational((m - i) * a - bt.delta()[i], 2 * (d - 1));
  return t;
}

inline Rational fmax_n_closed_form(const BoundaryType& bt) {
  const int d = bt.d();
  const int c = bt.c;
  const Rational per = rational(c * c, 8 * (d - 1)) + rational(c, 4) + rational(d - 1, 8);
  return bt.m() * per - we_square_closed_form(bt.delta()) / (8 * (d - 1));
}

/// Value of f at the rational critical point.
inline Rational fmax_n(const BoundaryType& bt) {
  const Rational closed = fmax_n_closed_form(bt);
  ensure(closed == f_twist(bt, detail::on_chain(critical_n(bt))), "fmax_n: closed form disagrees with f(N_crit)");
  return closed;
}

/// Sign reading of the fibre-part term: f_A - f_{A_1} = -mc/2 when c > 0, else 0.
inline Rational fibre_term_rule(const BoundaryType& bt) {
  return bt.c > 0 ? rational(-bt.m() * bt.c, 2) : Rational(0);
}

namespace detail {

inline void ensure_effective_twist(const FibralDivisor& a1, const std::string& what) {
  for (int i = 0; i <= a1.m(); ++i) ensure(a1[i] >= 0, what + ": negative coefficient on R_" + std::to_string(i));
  ensure(a1[a1.m()] == 0, what + ": coefficient of R_m is not 0");
}

}  // namespace detail

/// First correction: twist by a boundary line bundle N alone.
inline CorrectionResult correction_n(const BoundaryType& bt, bool explore_ties = false) {
  const int d = bt.d();
  const int m = bt.m();
  const TwistFunctional f(bt);
  CorrectionResult out{bt, 0, round_chain(critical_n(bt), explore_ties), fmax_n(bt), 0, 0, 0};
  const auto n = detail::on_chain(detail::to_rationals(out.point.alpha));
  out.point.value = f(n);
  out.sum_sq = out.point.sum_sq;
  out.ferr = -rational(d - 1, 2) * out.sum_sq;
  ensure(out.point.value == out.fmax + out.ferr, "correction_n: f(alpha) != f_max - (d-1)/2 sum_sq");

  const auto a1 = f.a() + Rational(d - 1) * n;
  detail::ensure_effective_twist(a1, "correction_n: A + (d-1)N");
  out.fibre_term = fibre_multiplicity(f.a()) - fibre_multiplicity(a1);
  ensure(out.fibre_term == fibre_term_rule(bt), "correction_n: fibre parts disagree with the c-sign rule");

  out.delta = out.point.value + out.fibre_term;
  ensure(out.delta >= 0, "correction_n: negative correction for j=" + std::to_string(bt.j) + ", mu=" + bt.mu.str());
  ensure(rational(m, 4) - out.sum_sq >= 0, "correction_n: m/4 - sum_sq < 0");
  return out;
}

struct IntegerMaxCheck {
  bool ok = true;
  Rational at_point;
  Rational box_max;
  std::size_t points = 0;
};

inline IntegerMaxCheck scan_integer_max(const BoundaryType& bt, int radius, bool explore_ties = false) {
  if (radius < 0) throw DomainError("scan_integer_max: negative radius");
  const auto point = round_chain(critical_n(bt), explore_ties);
  const TwistFunctional f(bt);
  const Objective objective = [&f](const LatticePoint& x) {
    return f(detail::on_chain(detail::to_rationals(x)));
  };
  IntegerMaxCheck out;
  out.at_point = objective(point.alpha);
  const auto best = maximize_box(objective, BoxProblem{point.alpha, radius, {}, 1});
  out.box_max = best.value;
  out.points = best.points;
  out.ok = best.value <= out.at_point;
  return out;
}

/// True iff no integral N within `radius` (sup norm) of alpha beats f(alpha).
inline bool verify_integer_max(const BoundaryType& bt, int radius) { return scan_integer_max(bt, radius).ok; }

struct JointCritical {
  std::vector<Rational> x;  // coordinates of X = -W/(2(d-2))
  std::vector<Rational> g;  // coordinates of G = (d-1)theta/2 - A
};

inline void require_unit_part(const BoundaryType& bt, const char* who) {
  if (!bt.mu.has_unit_part()) {
    throw ApplicabilityError(std::string(who) + ": mu=" + bt.mu.str() + " has no part equal to 1");
  }
}

inline JointCritical joint_critical(const BoundaryType& bt) {
  require_unit_part(bt, "joint_critical");
  const int m = bt.m();
  const int d = bt.d();
  const int a = d - 1 + bt.c;
  JointCritical out{std::vector<Rational>(m), std::vector<Rational>(m)};
  for (int i = 0; i < m; ++i) {
    out.g[i] = rational((m - i) * a - bt.delta()[i], 2);
    out.x[i] = rational((m - i) * bt.l - bt.delta()[i], 2 * (d - 2));
    ensure(out.x[i] >= 0, "joint_critical: negative x_" + std::to_string(i));
  }
  return out;
}

/// f(Z, N) = [(d-2)X^2 + W.X + G.G - (d-1)G.theta + 2G.A] / (2(d-1)),
/// G = (d-1)N - X, with W.X = l x_0 + (sum delta_i R_i).X.
/// `n` and `x` hold coefficients of R_0..R_{m-1}.
class JointFunctional {
 public:
  explicit JointFunctional(const BoundaryType& bt)
      : chain_(bt.m()), a_(a_standard(bt).divisor()), we_(we_divisor(bt).we), d_(bt.d()), l_(bt.l) {}

  Rational operator()(const std::vector<Rational>& n, const std::vector<Rational>& x) const {
    const auto nd = detail::on_chain(n);
    const auto xd = detail::on_chain(x);
    const auto g = Rational(d_ - 1) * nd - xd;
    const Rational wx = l_ * xd[0] + intersect(chain_, we_, xd);
    const Rational num = (d_ - 2) * intersect(chain_, xd, xd) + wx + intersect(chain_, g, g) -
                         (d_ - 1) * theta_dot(chain_, g) + 2 * intersect(chain_, g, a_);
    return num / (2 * (d_ - 1));
  }

  /// A + G for the given point.
  FibralDivisor a_plus_g(const std::vector<Rational>& n, const std::vector<Rational>& x) const {
    return a_ + (Rational(d_ - 1) * detail::on_chain(n) - detail::on_chain(x));
  }

  const FibralDivisor& a() const { return a_; }

 private:
  ChainModel chain_;
  FibralDivisor a_;
  FibralDivisor we_;
  int d_;
  int l_;
};

inline Rational f_joint(const BoundaryType& bt, const std::vector<Rational>& n, const std::vector<Rational>& x) {
  require_unit_part(bt, "f_joint");
  if (static_cast<int>(n.size()) != bt.m() || static_cast<int>(x.size()) != bt.m()) {
    throw DomainError("f_joint: need m coefficients for N and for X");
  }
  return JointFunctional(bt)(n, x);
}

/// e'_i = e_i when m-i is even and e_i + 1/2 when m-i is odd.
inline std::vector<Rational> parity_shift(const std::vector<Rational>& e) {
  const int m = static_cast<int>(e.size());
  std::vector<Rational> ep(e);
  for (int i = 0; i < m; ++i) {
    if ((m - i) % 2 != 0) ep[i] += rational(1, 2);
  }
  return ep;
}

inline RoundedPoint joint_round(const BoundaryType& bt, bool explore_ties = false) {
  const auto crit = joint_critical(bt);
  const int m = bt.m();
  const int d = bt.d();
  const int a = d - 1 + bt.c;
  ensure(a - bt.l == (d - 1) * (2 * (bt.q - bt.params.k - 1) + 1), "joint_round: a - l != (d-1)(2(q-k-1)+1)");

  std::vector<Rational> targets(m);
  for (int i = 0; i < m; ++i) targets[i] = (crit.g[i] + crit.x[i]) / (d - 1);
  RoundedPoint point = round_chain(targets, explore_ties);
  point.eprime = parity_shift(point.e);
  point.xi.resize(m);
  for (int i = 0; i < m; ++i) {
    const Rational xi = crit.x[i] + point.eprime[i];
    ensure(is_integral(xi), "joint_round: xi_" + std::to_string(i) + " is not integral");
    point.xi[i] = numerator(xi);
  }
  point.value = JointFunctional(bt)(detail::to_rationals(point.alpha), detail::to_rationals(point.xi));
  return point;
}

/// f_max at the joint critical point.
inline Rational fmax_joint(const BoundaryType& bt) {
  const int d = bt.d();
  const int m = bt.m();
  const int a = d - 1 + bt.c;
  return Rational(m) * (bt.l * bt.l + (d - 2) * a * a) / (8 * (d - 1) * (d - 2)) -
         we_square_closed_form(bt.delta()) / (8 * (d - 2));
}

/// -(d-1)/2 sum t^2 + sum t s - 1/2 sum s^2 with t_i = e_{i-1}-e_i, s_i = e'_{i-1}-e'_i.
inline Rational f_err_expanded(const std::vector<Rational>& e, const std::vector<Rational>& eprime, int d) {
  if (e.size() != eprime.size()) throw DomainError("f_err: e and e' differ in length");
  Rational tt = 0, ts = 0, ss = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Rational t = e[i] - (i + 1 < e.size() ? e[i + 1] : Rational(0));
    const Rational s = eprime[i] - (i + 1 < e.size() ? eprime[i + 1] : Rational(0));
    tt += t * t;
    ts += t * s;
    ss += s * s;
  }
  return -rational(d - 1, 2) * tt + ts - ss / 2;
}

/// -(d-2)/2 sum t^2 - 1/2 sum (t - s)^2.
inline Rational f_err_general(const std::vector<Rational>& e, const std::vector<Rational>& eprime, int d) {
  if (e.size() != eprime.size()) throw DomainError("f_err: e and e' differ in length");
  Rational tt = 0, diff = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Rational t = e[i] - (i + 1 < e.size() ? e[i + 1] : Rational(0));
    const Rational s = eprime[i] - (i + 1 < e.size() ? eprime[i + 1] : Rational(0));
    tt += t * t;
    diff += (t - s) * (t - s);
  }
  return -rational(d - 2, 2) * tt - diff / 2;
}

/// -(d-2)/2 sum_sq - m/8, valid under the parity rule for e'.
inline Rational f_err_closed(const Rational& sum_sq, int m, int d) {
  return -rational(d - 2, 2) * sum_sq - rational(m, 8);
}

/// Second correction: twist jointly by an effective Z upstairs and N.
inline CorrectionResult correction_ln(const BoundaryType& bt, bool explore_ties = false) {
  const int d = bt.d();
  const int m = bt.m();
  const JointFunctional f(bt);
  CorrectionResult out{bt, 0, joint_round(bt, explore_ties), fmax_joint(bt), 0, 0, 0};
  out.sum_sq = out.point.sum_sq;
  out.ferr = f_err_closed(out.sum_sq, m, d);
  ensure(f_err_general(out.point.e, out.point.eprime, d) == out.ferr, "correction_ln: general f_err != closed f_err");
  ensure(f_err_expanded(out.point.e, out.point.eprime, d) == out.ferr, "correction_ln: expanded f_err != closed f_err");
  ensure(out.point.value == out.fmax + out.ferr, "correction_ln: f(alpha, xi) != f_max + f_err");

  const auto a1 = f.a_plus_g(detail::to_rationals(out.point.alpha), detail::to_rationals(out.point.xi));
  detail::ensure_effective_twist(a1, "correction_ln: A + G");
  for (const auto& xi : out.point.xi) ensure(xi >= 0, "correction_ln: Z is not effective");
  out.fibre_term = fibre_multiplicity(f.a()) - fibre_multiplicity(a1);
  ensure(out.fibre_term == fibre_term_rule(bt), "correction_ln: fibre parts disagree with the c-sign rule");

  out.delta = out.fmax + out.ferr + out.fibre_term;
  ensure(out.delta >= 0, "correction_ln: negative correction for j=" + std::to_string(bt.j) + ", mu=" + bt.mu.str());
  return out;
}

inline IntegerMaxCheck scan_joint_max(const BoundaryType& bt, int radius, bool explore_ties = false) {
  if (radius < 0) throw DomainError("scan_joint_max: negative radius");
  const auto point = joint_round(bt, explore_ties);
  const int m = bt.m();
  IntegerMaxCheck out;
  out.at_point = point.value;
  out.box_max = point.value;
  out.points = 1;
  if (radius == 0) return out;

  // Interleaved coordinates (alpha_0, xi_0, alpha_1, xi_1, ...); xi >= 0.
  const JointFunctional f(bt);
  const Objective objective = [&f, m](const LatticePoint& v) {
    std::vector<Rational> n(m), x(m);
    for (int i = 0; i < m; ++i) {
      n[i] = v[2 * i];
      x[i] = v[2 * i + 1];
    }
    return f(n, x);
  };
  BoxProblem problem{LatticePoint(2 * m), radius, std::vector<std::optional<Integer>>(2 * m), 2};
  for (int i = 0; i < m; ++i) {
    problem.center[2 * i] = point.alpha[i];
    problem.center[2 * i + 1] = point.xi[i];
    problem.lower[2 * i + 1] = Integer(0);
  }
  const auto best = maximize_box(objective, problem);
  out.box_max = best.value;
  out.points = best.points;
  out.ok = best.value <= out.at_point;
  return out;
}

/// True iff no integral (N, Z) with Z effective within `radius` of (alpha, xi) beats f(alpha, xi).
inline bool verify_joint_max(const BoundaryType& bt, int radius) { return scan_joint_max(bt, radius).ok; }

}  // namespace maroni
