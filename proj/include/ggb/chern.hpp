#pragma once

#include <vector>

#include "ggb/chow.hpp"

namespace ggb {

/// Rank together with the total Chern class 1 + c_1 h + ... of a bundle-like
/// object on P^n. Coefficients are integers, c_0 = 1, and c_i = 0 for
/// i > min(rank, n).
struct ChernData {
  int ambient;
  int rank;
  ChowClass total;

  ChernData(int ambient, int rank, ChowClass total);

  /// Convenience constructor from c_1, c_2, ...; missing trailing classes
  /// default to 0.
  static ChernData from_classes(int ambient, int rank,
                                const std::vector<long>& classes);

  /// c_i as an integer.
  Int c(int i) const;

  bool operator==(const ChernData& o) const {
    return ambient == o.ambient && rank == o.rank && total == o.total;
  }
};

/// Chern character: ch_0 = rank, ch_k = p_k / k! with p_k the Newton power
/// sums of the Chern roots. Rational coefficients.
struct ChernCharacter {
  int ambient;
  ChowClass value;

  ChernCharacter(int ambient, ChowClass value);

  const Rat& ch(int i) const { return value.coeff(i); }
};

ChernCharacter chern_character(const ChernData& c);

/// Inverse of chern_character. Throws NonIntegralChern when the candidate
/// Chern classes are not integers, RankViolation when they are supported
/// beyond the rank.
ChernData character_to_chern(const ChernCharacter& ch);

/// c_k(E(t)) = sum_i C(r-i, k-i) c_i t^{k-i}, truncated at the ambient degree.
ChernData twist_chern(const ChernData& c, long t);

/// c_i(E*) = (-1)^i c_i(E).
ChernData dual_chern(const ChernData& c);

ChernCharacter twist_character(const ChernCharacter& ch, long t);

/// ch(Lambda^2 E) = (ch(E)^2 - psi^2 ch(E)) / 2, where the Adams operation
/// psi^2 scales the degree-k part by 2^k. Requires rank >= 2.
ChernCharacter wedge2_character(const ChernCharacter& ch);

/// Chern data of E in 0 -> S -> T -> E -> 0, i.e. c(T) / c(S) with
/// rank(T) - rank(S). Integrality and rank-support are the only gates; no
/// attempt is made to certify that the sequence exists at sheaf level.
ChernData quot_chern(const ChernData& total, const ChernData& sub);

}  // namespace ggb
