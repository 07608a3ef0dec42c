#include "ggb/riemannroch.hpp"

#include <sstream>

namespace ggb {

Rat RRPolynomial::operator()(const Rat& j) const {
  Rat v = 0;
  for (std::size_t m = coeffs.size(); m-- > 0;) v = v * j + coeffs[m];
  return v;
}

int RRPolynomial::degree() const {
  for (std::size_t m = coeffs.size(); m-- > 0;)
    if (coeffs[m] != 0) return static_cast<int>(m);
  return 0;
}

std::string RRPolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t m = coeffs.size(); m-- > 0;) {
    if (coeffs[m] == 0) continue;
    if (!first) os << " + ";
    os << "(" << to_string(coeffs[m]) << ")";
    if (m >= 1) {
      os << "*j";
      if (m >= 2) os << "^" << m;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

ChowClass todd(int n) {
  check_ambient(n);
  // (1 - e^{-h}) / h = sum_{k>=0} (-1)^k h^k / (k+1)!
  std::vector<Rat> f(n + 1);
  Int fac = 1;
  for (int k = 0; k <= n; ++k) {
    fac *= (k + 1);
    f[k] = Rat((k % 2) ? -1 : 1) / Rat(fac);
  }
  return ChowClass(n, f).inverse().pow(n + 1);
}

Rat euler_char(const ChernData& c, int n) {
  if (c.ambient != n)
    throw AmbientMismatch("Chern data on P^" + std::to_string(c.ambient) +
                          ", expected P^" + std::to_string(n));
  return (chern_character(c).value * todd(n)).coeff(n);
}

RRPolynomial hilbert_polynomial(const ChernData& c, int n) {
  if (c.ambient != n)
    throw AmbientMismatch("Chern data on P^" + std::to_string(c.ambient) +
                          ", expected P^" + std::to_string(n));
  // chi(E(j)) = deg_n( ch(E) e^{jh} td ) = sum_i (ch td)_i j^{n-i} / (n-i)!.
  ChowClass a = chern_character(c).value * todd(n);
  RRPolynomial p{n, std::vector<Rat>(n + 1)};
  Int fac = 1;
  for (int m = 0; m <= n; ++m) {
    if (m >= 2) fac *= m;
    p.coeffs[m] = a.coeff(n - m) / Rat(fac);
  }
  return p;
}

}  // namespace ggb
