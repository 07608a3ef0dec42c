#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ggb/chern.hpp"

namespace ggb {

/// Symbolic bundle expression. Atoms: O(a), T, Omega^p, Triv(r).
/// Constructors: twist E(k), dual E*, direct sum, wedge2, quot.
/// Grammar (whitespace-insensitive):
///   expr   := term { "+" term }
///   term   := atom { suffix }
///   atom   := "O" "(" int ")" | "T" | "Omega" [ "^" int ] | "Triv" "(" int ")"
///           | "wedge2" "(" expr ")" | "quot" "(" expr "," expr ")"
///           | "(" expr ")"
///   suffix := "(" int ")"  (twist)  |  "*"  (dual)
struct BundleExpr;
using ExprPtr = std::shared_ptr<const BundleExpr>;

struct BundleExpr {
  enum class Kind {
    LineBundle,   // O(a),            arg = a
    Tangent,      // T
    Cotangent,    // Omega^p,         arg = p >= 1
    Trivial,      // Triv(r),         arg = r >= 0
    Twist,        // lhs(k),          arg = k
    Dual,         // lhs*
    Sum,          // lhs + rhs
    Wedge2,       // wedge2(lhs)
    Quot,         // quot(lhs, rhs)
  };

  Kind kind;
  long arg = 0;
  ExprPtr lhs, rhs;
};

ExprPtr line_bundle(long a);
ExprPtr tangent();
ExprPtr cotangent(long p);
ExprPtr trivial(long r);
ExprPtr twist(ExprPtr e, long k);
ExprPtr dual(ExprPtr e);
ExprPtr sum(ExprPtr a, ExprPtr b);
ExprPtr wedge2(ExprPtr e);
ExprPtr quot(ExprPtr total, ExprPtr sub);

/// Recursive-descent parse of the grammar above. Throws SyntaxError with the
/// byte offset of the failure and the expected-token set.
ExprPtr parse(std::string_view text);

std::string to_string(const BundleExpr& e);
inline std::string to_string(const ExprPtr& e) { return to_string(*e); }

int rank(const BundleExpr& e, int ambient);
inline int rank(const ExprPtr& e, int ambient) { return rank(*e, ambient); }

ChernData chern(const BundleExpr& e, int ambient);
inline ChernData chern(const ExprPtr& e, int ambient) {
  return chern(*e, ambient);
}
inline ChernData chern(std::string_view text, int ambient) {
  return chern(*parse(text), ambient);
}

}  // namespace ggb
