#include "ggb/constraints.hpp"

#include <cassert>

namespace ggb {

SchwarzenbergerResult schwarzenberger_check(const ChernData& c, int n) {
  RRPolynomial p = hilbert_polynomial(c, n);
  for (long j = 0; j <= n; ++j) {
    Rat v = p(Rat(j));
    if (!is_integer(v)) return {false, j, v};
  }
  return {true, 0, Rat(0)};
}

ScreenReport gg_necessary(const ChernData& c, int n) {
  ScreenReport report;
  for (int i = 1; i <= n; ++i) {
    if (c.total.coeff(i) < 0)
      report.violations.emplace_back(
          "chern-nonnegative",
          "c_" + std::to_string(i) + " = " + to_string(c.total.coeff(i)));
  }
  if (n >= 2) {
    Rat gap = c.total.coeff(1) * c.total.coeff(1) - c.total.coeff(2);
    if (gap < 0)
      report.violations.emplace_back("c1^2-c2-nonnegative",
                                     "c_1^2 - c_2 = " + to_string(gap));
  }
  SchwarzenbergerResult s = schwarzenberger_check(c, n);
  if (!s.pass)
    report.violations.emplace_back(
        "schwarzenberger",
        "chi(E(" + std::to_string(s.witness_twist) + ")) = " +
            to_string(s.witness_value));
  return report;
}

ChernData second_reduction(const ChernData& c, int n, int h0) {
  if (c.ambient != n)
    throw AmbientMismatch("Chern data on P^" + std::to_string(c.ambient));
  if (h0 <= c.rank)
    throw RankViolation("h0 = " + std::to_string(h0) +
                        " must exceed the rank " + std::to_string(c.rank));
  // 0 -> K -> O^{h0} -> E -> 0 gives c(K) = 1/c(E); the result is K*.
  ChernData kernel(n, h0 - c.rank, c.total.inverse());
  ChernData result = dual_chern(kernel);
  assert(result.total.coeff(1) == c.total.coeff(1));
  assert(n < 2 || result.total.coeff(2) ==
                      c.total.coeff(1) * c.total.coeff(1) - c.total.coeff(2));
  return result;
}

}  // namespace ggb
