#include "ggb/chow.hpp"

#include <sstream>

namespace ggb {

ChowClass ChowClass::operator+(const ChowClass& o) const {
  check_same(o);
  ChowClass r(ambient_);
  for (int i = 0; i <= ambient_; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

ChowClass ChowClass::operator-(const ChowClass& o) const {
  check_same(o);
  ChowClass r(ambient_);
  for (int i = 0; i <= ambient_; ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return r;
}

ChowClass ChowClass::operator-() const {
  ChowClass r(ambient_);
  for (int i = 0; i <= ambient_; ++i) r.coeffs_[i] = -coeffs_[i];
  return r;
}

ChowClass ChowClass::operator*(const ChowClass& o) const {
  check_same(o);
  ChowClass r(ambient_);
  for (int i = 0; i <= ambient_; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= ambient_; ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return r;
}

ChowClass ChowClass::operator*(const Rat& s) const {
  ChowClass r(ambient_);
  for (int i = 0; i <= ambient_; ++i) r.coeffs_[i] = coeffs_[i] * s;
  return r;
}

ChowClass ChowClass::inverse() const {
  if (coeffs_[0] == 0) throw NotAUnit("constant term is zero");
  // u_0 = 1/a_0, then u_k = -(sum_{i=1..k} a_i u_{k-i}) / a_0.
  ChowClass u(ambient_);
  u.coeffs_[0] = Rat(1) / coeffs_[0];
  for (int k = 1; k <= ambient_; ++k) {
    Rat s = 0;
    for (int i = 1; i <= k; ++i) s += coeffs_[i] * u.coeffs_[k - i];
    u.coeffs_[k] = -s / coeffs_[0];
  }
  return u;
}

ChowClass ChowClass::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  ChowClass r = one(ambient_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string ChowClass::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= ambient_; ++i) {
    if (coeffs_[i] == 0) continue;
    Rat c = coeffs_[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    if (a != 1 || i == 0) os << to_string(a);
    if (i >= 1) {
      if (a != 1) os << "*";
      os << var;
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

ChowClass exp_class(int ambient, const Rat& s) {
  ChowClass r(ambient);
  Rat term = 1;
  std::vector<Rat> coeffs;
  for (int k = 0; k <= ambient; ++k) {
    coeffs.push_back(term);
    term = term * s / (k + 1);
  }
  return ChowClass(ambient, coeffs);
}

}  // namespace ggb
