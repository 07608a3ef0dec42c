#pragma once

#include <vector>

#include "ggb/chern.hpp"

namespace ggb {

/// chi(E(j)) as an exact polynomial in the twist j, degree <= n.
struct RRPolynomial {
  int ambient;
  std::vector<Rat> coeffs;  // coeffs[m] is the coefficient of j^m

  Rat operator()(const Rat& j) const;
  int degree() const;
  std::string str() const;
};

/// Todd class of P^n: truncation of (h / (1 - e^{-h}))^{n+1}. Computed by
/// series inversion of (1 - e^{-h}) / h, which has unit constant term.
ChowClass todd(int n);

/// Hirzebruch-Riemann-Roch: degree-n part of ch(E) * td(P^n). Returned as an
/// exact rational; integrality is not assumed here, non-integral values are
/// the signal the Schwarzenberger screen consumes.
Rat euler_char(const ChernData& c, int n);

RRPolynomial hilbert_polynomial(const ChernData& c, int n);

}  // namespace ggb
