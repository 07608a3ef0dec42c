#pragma once

#include <vector>

#include "ggb/expr.hpp"

namespace ggb {

/// h^0..h^n of a supported expression twisted by j.
struct CohomologyTable {
  int ambient;
  long twist;
  std::vector<Int> h;  // size ambient + 1

  /// sum (-1)^q h^q.
  Int euler() const;
};

/// Bott formula: h^q(P^n, Omega^p(k)).
///   q = 0, k > p     : C(k+n-p, k) * C(k-1, p)
///   q = p, k = 0     : 1
///   q = n, k < p - n : C(-k+p, -k) * C(-k-1, n-p)
///   otherwise 0
/// Binomials use the C(a,b)=0 for a<b or b<0, C(a,0)=1 convention, so the
/// branch edges k = p and k = p - n fall through to 0.
Int bott(int n, int p, long k, int q);

/// Cohomology of e(j) for e a direct sum of possibly twisted, possibly
/// dualized atoms O(a), T, Omega^p, Triv. Quot and Wedge2 are rejected with
/// UnsupportedExpression (their cohomology is not determined by Chern data).
CohomologyTable cohomology_table(const BundleExpr& e, int ambient, long j);
inline CohomologyTable cohomology_table(const ExprPtr& e, int ambient,
                                        long j) {
  return cohomology_table(*e, ambient, j);
}

/// true iff bott(n,p,k,q) == bott(n, n-p, -k, n-q).
bool serre_duality_check(int n, int p, long k, int q);

}  // namespace ggb
