#include "ggb/cohomology.hpp"

namespace ggb {

Int CohomologyTable::euler() const {
  Int s = 0;
  for (std::size_t q = 0; q < h.size(); ++q) s += (q % 2) ? -h[q] : h[q];
  return s;
}

Int bott(int n, int p, long k, int q) {
  check_ambient(n);
  if (p < 0 || p > n)
    throw DomainError("bott: p = " + std::to_string(p) + " out of range");
  if (q < 0 || q > n)
    throw DomainError("bott: q = " + std::to_string(q) + " out of range");
  if (q == 0 && k > p) return binomial(k + n - p, k) * binomial(k - 1, p);
  if (q == p && k == 0) return 1;
  if (q == n && k < p - n) return binomial(-k + p, -k) * binomial(-k - 1, n - p);
  return 0;
}

bool serre_duality_check(int n, int p, long k, int q) {
  return bott(n, p, k, q) == bott(n, n - p, -k, n - q);
}

namespace {

// Normal form of a summand: Omega^p(k) with multiplicity. O(a) is Omega^0(a),
// T = Omega^{n-1}(n+1), and dual(Omega^p(k)) = Omega^{n-p}(n+1-k).
struct Atom {
  int p;
  long k;
  long mult;
};

// Walks the expression with the accumulated twist and dual that apply to the
// current subtree.
void collect(const BundleExpr& e, int n, long j, bool dualized,
             std::vector<Atom>& out) {
  using K = BundleExpr::Kind;
  switch (e.kind) {
    case K::LineBundle:
      out.push_back({0, (dualized ? -e.arg : e.arg) + j, 1});
      return;
    case K::Trivial:
      if (e.arg > 0) out.push_back({0, j, e.arg});
      return;
    case K::Tangent:
      if (dualized)
        out.push_back({1, j, 1});
      else
        out.push_back({n - 1, n + 1 + j, 1});
      return;
    case K::Cotangent: {
      int p = static_cast<int>(e.arg);
      if (p < 1 || p > n)
        throw InvalidAtDimension("Omega^" + std::to_string(p) + " on P^" +
                                 std::to_string(n));
      if (dualized)
        out.push_back({n - p, n + 1 + j, 1});
      else
        out.push_back({p, j, 1});
      return;
    }
    case K::Twist:
      collect(*e.lhs, n, j + (dualized ? -e.arg : e.arg), dualized, out);
      return;
    case K::Dual:
      collect(*e.lhs, n, j, !dualized, out);
      return;
    case K::Sum:
      collect(*e.lhs, n, j, dualized, out);
      collect(*e.rhs, n, j, dualized, out);
      return;
    case K::Wedge2:
    case K::Quot:
      throw UnsupportedExpression(
          "cohomology of wedge2/quot is not determined by Chern data");
  }
}

}  // namespace

CohomologyTable cohomology_table(const BundleExpr& e, int ambient, long j) {
  check_ambient(ambient);
  std::vector<Atom> atoms;
  collect(e, ambient, j, false, atoms);
  CohomologyTable t{ambient, j, std::vector<Int>(ambient + 1)};
  for (const Atom& a : atoms)
    for (int q = 0; q <= ambient; ++q)
      t.h[q] += Int(a.mult) * bott(ambient, a.p, a.k, q);
  return t;
}

}  // namespace ggb
