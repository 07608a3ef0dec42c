#pragma once

#include <vector>

#include "ggb/errors.hpp"
#include "ggb/rat.hpp"

namespace ggb {

/// Largest supported ambient dimension. The classification lives on P^1..P^5;
/// the headroom exists for property tests.
inline constexpr int kMaxAmbient = 8;

inline void check_ambient(int n) {
  if (n < 1 || n > kMaxAmbient)
    throw DomainError("ambient dimension must be in [1, " +
                      std::to_string(kMaxAmbient) + "], got " +
                      std::to_string(n));
}

/// An element of Q[h]/(h^{n+1}), the Chow ring of P^n with rational
/// coefficients. coeff(i) is the coefficient of h^i. Values are immutable;
/// every operation returns a fresh class and truncation at degree n is
/// maintained throughout.
class ChowClass {
 public:
  explicit ChowClass(int ambient) : ambient_(ambient), coeffs_(ambient + 1) {
    check_ambient(ambient);
  }

  ChowClass(int ambient, std::vector<Rat> coeffs) : ChowClass(ambient) {
    if (coeffs.size() > coeffs_.size())
      throw DegreeOutOfRange("too many coefficients for P^" +
                             std::to_string(ambient));
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs_[i] = coeffs[i];
  }

  static ChowClass zero(int ambient) { return ChowClass(ambient); }

  static ChowClass one(int ambient) {
    ChowClass c(ambient);
    c.coeffs_[0] = 1;
    return c;
  }

  /// s * h^i.
  static ChowClass monomial(int ambient, int i, Rat s) {
    ChowClass c(ambient);
    if (i < 0 || i > ambient)
      throw DegreeOutOfRange("degree " + std::to_string(i) + " out of range");
    c.coeffs_[i] = std::move(s);
    return c;
  }

  int ambient() const { return ambient_; }

  const Rat& coeff(int i) const {
    if (i < 0 || i > ambient_)
      throw DegreeOutOfRange("degree " + std::to_string(i) +
                             " out of range for P^" + std::to_string(ambient_));
    return coeffs_[i];
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool integral() const {
    for (const auto& c : coeffs_)
      if (!is_integer(c)) return false;
    return true;
  }

  ChowClass operator+(const ChowClass& o) const;
  ChowClass operator-(const ChowClass& o) const;
  ChowClass operator-() const;
  ChowClass operator*(const ChowClass& o) const;
  ChowClass operator*(const Rat& s) const;

  /// Multiplicative inverse in the truncated ring; requires a unit
  /// (nonzero constant term).
  ChowClass inverse() const;

  /// e-th power; negative e goes through inverse().
  ChowClass pow(int e) const;

  bool operator==(const ChowClass& o) const {
    return ambient_ == o.ambient_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const ChowClass& o) const { return !(*this == o); }

  std::string str(const std::string& var = "h") const;

 private:
  void check_same(const ChowClass& o) const {
    if (ambient_ != o.ambient_)
      throw AmbientMismatch("P^" + std::to_string(ambient_) + " vs P^" +
                            std::to_string(o.ambient_));
  }

  int ambient_;
  std::vector<Rat> coeffs_;
};

inline ChowClass operator*(const Rat& s, const ChowClass& c) { return c * s; }

/// exp(s*h) truncated at degree n.
ChowClass exp_class(int ambient, const Rat& s);

}  // namespace ggb
