#include "ggb/chern.hpp"

namespace ggb {

ChernData::ChernData(int ambient_, int rank_, ChowClass total_)
    : ambient(ambient_), rank(rank_), total(std::move(total_)) {
  check_ambient(ambient);
  if (total.ambient() != ambient)
    throw AmbientMismatch("Chern class lives on P^" +
                          std::to_string(total.ambient()) + ", expected P^" +
                          std::to_string(ambient));
  if (rank < 0) throw RankViolation("negative rank");
  if (total.coeff(0) != 1) throw Error("total Chern class must start with 1");
  if (!total.integral())
    throw NonIntegralChern("total Chern class has a non-integer coefficient: " +
                           total.str());
  for (int i = rank + 1; i <= ambient; ++i)
    if (total.coeff(i) != 0)
      throw RankViolation("c_" + std::to_string(i) + " = " +
                          to_string(total.coeff(i)) + " nonzero beyond rank " +
                          std::to_string(rank));
}

ChernData ChernData::from_classes(int ambient, int rank,
                                  const std::vector<long>& classes) {
  ChowClass t = ChowClass::one(ambient);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    int deg = static_cast<int>(i) + 1;
    if (deg > ambient) {
      if (classes[i] != 0)
        throw DegreeOutOfRange("c_" + std::to_string(deg) + " given on P^" +
                               std::to_string(ambient));
      continue;
    }
    t = t + ChowClass::monomial(ambient, deg, Rat(classes[i]));
  }
  return ChernData(ambient, rank, t);
}

Int ChernData::c(int i) const { return numerator(total.coeff(i)); }

ChernCharacter::ChernCharacter(int ambient_, ChowClass value_)
    : ambient(ambient_), value(std::move(value_)) {
  check_ambient(ambient);
  if (value.ambient() != ambient)
    throw AmbientMismatch("character lives on P^" +
                          std::to_string(value.ambient()));
  const Rat& r0 = value.coeff(0);
  if (!is_integer(r0) || r0 < 0)
    throw RankViolation("degree-0 term of a Chern character must be a "
                        "nonnegative integer, got " +
                        to_string(r0));
}

ChernCharacter chern_character(const ChernData& c) {
  const int n = c.ambient;
  // Newton recursion for the power sums of the Chern roots:
  //   p_k = c_1 p_{k-1} - c_2 p_{k-2} + ... + (-1)^k k c_k,
  // then ch_k = p_k / k!.
  std::vector<Rat> p(n + 1);
  for (int k = 1; k <= n; ++k) {
    Rat s = Rat(k) * c.total.coeff(k) * ((k % 2) ? 1 : -1);
    for (int i = 1; i < k; ++i)
      s += c.total.coeff(i) * p[k - i] * ((i % 2) ? 1 : -1);
    p[k] = s;
  }
  std::vector<Rat> ch(n + 1);
  ch[0] = c.rank;
  Int kfac = 1;
  for (int k = 1; k <= n; ++k) {
    kfac *= k;
    ch[k] = p[k] / Rat(kfac);
  }
  return ChernCharacter(n, ChowClass(n, ch));
}

ChernData character_to_chern(const ChernCharacter& ch) {
  const int n = ch.ambient;
  const Rat& r0 = ch.value.coeff(0);
  int rank = static_cast<int>(numerator(r0).get_si());
  // Recover the power sums, then invert Newton:
  //   k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
  std::vector<Rat> p(n + 1);
  Int kfac = 1;
  for (int k = 1; k <= n; ++k) {
    kfac *= k;
    p[k] = ch.value.coeff(k) * Rat(kfac);
  }
  std::vector<Rat> e(n + 1);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rat s = 0;
    for (int i = 1; i <= k; ++i) s += e[k - i] * p[i] * ((i % 2) ? 1 : -1);
    e[k] = s / k;
    if (!is_integer(e[k]))
      throw NonIntegralChern("c_" + std::to_string(k) + " = " +
                             to_string(e[k]) + " is not an integer");
  }
  return ChernData(n, rank, ChowClass(n, e));
}

ChernData twist_chern(const ChernData& c, long t) {
  const int n = c.ambient;
  const int r = c.rank;
  std::vector<Rat> out(n + 1);
  out[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rat s = 0;
    for (int i = 0; i <= k && i <= r; ++i)
      s += Rat(binomial(r - i, k - i)) * c.total.coeff(i) *
           Rat(ipow(t, k - i));
    out[k] = s;
  }
  return ChernData(n, r, ChowClass(n, out));
}

ChernData dual_chern(const ChernData& c) {
  const int n = c.ambient;
  std::vector<Rat> out(n + 1);
  for (int i = 0; i <= n; ++i)
    out[i] = c.total.coeff(i) * ((i % 2) ? -1 : 1);
  return ChernData(n, c.rank, ChowClass(n, out));
}

ChernCharacter twist_character(const ChernCharacter& ch, long t) {
  // ch(E(t)) = ch(E) * exp(t h).
  return ChernCharacter(ch.ambient,
                        ch.value * exp_class(ch.ambient, Rat(t)));
}

ChernCharacter wedge2_character(const ChernCharacter& ch) {
  const int n = ch.ambient;
  if (ch.value.coeff(0) < 2)
    throw RankTooSmall("wedge2 needs rank >= 2, got " +
                       to_string(ch.value.coeff(0)));
  std::vector<Rat> psi2(n + 1);
  Int pow2 = 1;
  for (int k = 0; k <= n; ++k) {
    psi2[k] = ch.value.coeff(k) * Rat(pow2);
    pow2 *= 2;
  }
  ChowClass squared = ch.value * ch.value;
  ChowClass result = (squared - ChowClass(n, psi2)) * Rat(1, 2);
  return ChernCharacter(n, result);
}

ChernData quot_chern(const ChernData& total, const ChernData& sub) {
  if (total.ambient != sub.ambient)
    throw AmbientMismatch("quot: P^" + std::to_string(total.ambient) +
                          " vs P^" + std::to_string(sub.ambient));
  if (total.rank <= sub.rank)
    throw RankViolation("quot: total rank " + std::to_string(total.rank) +
                        " must exceed sub rank " + std::to_string(sub.rank));
  ChowClass q = total.total * sub.total.inverse();
  return ChernData(total.ambient, total.rank - sub.rank, q);
}

}  // namespace ggb
