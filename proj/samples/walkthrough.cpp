// Walks through one boundary type end to end: invariants, the standard
// divisor A, both corrections, and the resulting coefficients.

#include "maroni/maroni.hpp"

#include <iostream>

using namespace maroni;

namespace {

void print_vector(const char* label, const std::vector<Rational>& v) {
  std::cout << "  " << label << " = (";
  for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << to_string(v[i]);
  std::cout << ")\n";
}

void show(const BoundaryType& bt) {
  std::cout << "d=" << bt.d() << " g=" << bt.params.g << " j=" << bt.j << " mu=" << bt.mu.str() << "\n";
  std::cout << "  n=" << bt.n() << " m=" << bt.m() << " q=" << bt.q << " r=" << bt.r << " c=" << bt.c
            << " c'=" << bt.cprime << "\n";

  const auto a = a_standard(bt);
  print_vector("A", a.divisor().coeffs());
  std::cout << "  W_E^2 = " << to_string(we_divisor(bt).we_sq) << "\n";

  print_vector("N_crit", critical_n(bt));
  const auto c1 = correction_n(bt);
  std::cout << "  f_max = " << to_string(c1.fmax) << ", sum_sq = " << to_string(c1.sum_sq)
            << ", delta = " << to_string(c1.delta) << "\n";

  std::cout << "  sigma_st    = " << to_string(sigma_st(bt)) << "\n";
  std::cout << "  sigma_corr1 = " << to_string(sigma_corr1(bt)) << "\n";
  if (const auto c2 = sigma_corr2(bt)) {
    const auto r = correction_ln(bt);
    std::cout << "  sigma_corr2 = " << to_string(*c2) << " (delta " << to_string(r.delta) << ")\n";
  }
  const auto best = sigma_min(bt);
  std::cout << "  sigma_min   = " << to_string(best.value) << " via " << best.provenance << "\n\n";
}

}  // namespace

int main() {
  show(make_boundary_type(HurwitzParams::make(3, 4), 4, Partition({3})));
  show(make_boundary_type(HurwitzParams::make(4, 3), 5, Partition({4})));
  show(make_boundary_type(HurwitzParams::make(3, 6), 6, Partition({1, 1, 1})));
  std::cout << "elliptic tail, k=2, d1=1: " << to_string(special_value(2, 1)) << "\n";
}
