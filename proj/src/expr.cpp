#include "ggb/expr.hpp"

#include <cctype>
#include <sstream>

namespace ggb {

namespace {

ExprPtr node(BundleExpr::Kind kind, long arg = 0, ExprPtr lhs = nullptr,
             ExprPtr rhs = nullptr) {
  auto e = std::make_shared<BundleExpr>();
  e->kind = kind;
  e->arg = arg;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

}  // namespace

ExprPtr line_bundle(long a) { return node(BundleExpr::Kind::LineBundle, a); }
ExprPtr tangent() { return node(BundleExpr::Kind::Tangent); }
ExprPtr cotangent(long p) {
  if (p < 1) throw DomainError("Omega^p needs p >= 1");
  return node(BundleExpr::Kind::Cotangent, p);
}
ExprPtr trivial(long r) {
  if (r < 0) throw DomainError("Triv(r) needs r >= 0");
  return node(BundleExpr::Kind::Trivial, r);
}
ExprPtr twist(ExprPtr e, long k) {
  return node(BundleExpr::Kind::Twist, k, std::move(e));
}
ExprPtr dual(ExprPtr e) {
  return node(BundleExpr::Kind::Dual, 0, std::move(e));
}
ExprPtr sum(ExprPtr a, ExprPtr b) {
  return node(BundleExpr::Kind::Sum, 0, std::move(a), std::move(b));
}
ExprPtr wedge2(ExprPtr e) {
  return node(BundleExpr::Kind::Wedge2, 0, std::move(e));
}
ExprPtr quot(ExprPtr total, ExprPtr sub) {
  return node(BundleExpr::Kind::Quot, 0, std::move(total), std::move(sub));
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("'+' or end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    throw SyntaxError(pos_, expected);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("'") + c + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("integer");
    }
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  long parenthesized_int() {
    expect('(');
    long v = integer();
    expect(')');
    return v;
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (eat('+')) e = sum(e, parse_term());
    return e;
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_atom();
    // Suffixes apply left to right: "Omega^2(2)*" is dual(twist(Omega^2, 2)).
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        e = dual(e);
      } else if (c == '(') {
        e = twist(e, parenthesized_int());
      } else {
        break;
      }
    }
    return e;
  }

  ExprPtr parse_atom() {
    if (eat('(')) {
      ExprPtr e = parse_expr();
      expect(')');
      return e;
    }
    skip_ws();
    std::size_t start = pos_;
    std::string name = ident();
    if (name == "O") {
      // O(a) is the line bundle itself, not a twist of something.
      return line_bundle(parenthesized_int());
    }
    if (name == "T") return tangent();
    if (name == "Omega") {
      long p = 1;
      if (eat('^')) p = integer();
      if (p < 1) {
        pos_ = start;
        fail("Omega power >= 1");
      }
      return cotangent(p);
    }
    if (name == "Triv") {
      long r = parenthesized_int();
      if (r < 0) {
        pos_ = start;
        fail("Triv rank >= 0");
      }
      return trivial(r);
    }
    if (name == "wedge2") {
      expect('(');
      ExprPtr e = parse_expr();
      expect(')');
      return wedge2(e);
    }
    if (name == "quot") {
      expect('(');
      ExprPtr total = parse_expr();
      expect(',');
      ExprPtr sub = parse_expr();
      expect(')');
      return quot(total, sub);
    }
    pos_ = start;
    fail("'O', 'T', 'Omega', 'Triv', 'wedge2', 'quot' or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

bool needs_parens_for_suffix(const BundleExpr& e) {
  return e.kind == BundleExpr::Kind::Sum;
}

}  // namespace

std::string to_string(const BundleExpr& e) {
  using K = BundleExpr::Kind;
  std::ostringstream os;
  switch (e.kind) {
    case K::LineBundle:
      os << "O(" << e.arg << ")";
      break;
    case K::Tangent:
      os << "T";
      break;
    case K::Cotangent:
      os << "Omega";
      if (e.arg != 1) os << "^" << e.arg;
      break;
    case K::Trivial:
      os << "Triv(" << e.arg << ")";
      break;
    case K::Twist:
      if (needs_parens_for_suffix(*e.lhs))
        os << "(" << to_string(*e.lhs) << ")";
      else
        os << to_string(*e.lhs);
      os << "(" << e.arg << ")";
      break;
    case K::Dual:
      if (needs_parens_for_suffix(*e.lhs))
        os << "(" << to_string(*e.lhs) << ")";
      else
        os << to_string(*e.lhs);
      os << "*";
      break;
    case K::Sum:
      os << to_string(*e.lhs) << "+" << to_string(*e.rhs);
      break;
    case K::Wedge2:
      os << "wedge2(" << to_string(*e.lhs) << ")";
      break;
    case K::Quot:
      os << "quot(" << to_string(*e.lhs) << "," << to_string(*e.rhs) << ")";
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Rank and Chern classes
// ---------------------------------------------------------------------------

namespace {

long binom_long(int n, long p) { return binomial(n, p).get_si(); }

}  // namespace

int rank(const BundleExpr& e, int ambient) {
  using K = BundleExpr::Kind;
  check_ambient(ambient);
  switch (e.kind) {
    case K::LineBundle:
      return 1;
    case K::Tangent:
      return ambient;
    case K::Cotangent:
      if (e.arg > ambient)
        throw InvalidAtDimension("Omega^" + std::to_string(e.arg) +
                                 " does not exist on P^" +
                                 std::to_string(ambient));
      return static_cast<int>(binom_long(ambient, e.arg));
    case K::Trivial:
      return static_cast<int>(e.arg);
    case K::Twist:
    case K::Dual:
      return rank(*e.lhs, ambient);
    case K::Sum:
      return rank(*e.lhs, ambient) + rank(*e.rhs, ambient);
    case K::Wedge2: {
      int r = rank(*e.lhs, ambient);
      if (r < 2) throw RankTooSmall("wedge2 of rank " + std::to_string(r));
      return static_cast<int>(binom_long(r, 2));
    }
    case K::Quot: {
      int rt = rank(*e.lhs, ambient);
      int rs = rank(*e.rhs, ambient);
      if (rt <= rs)
        throw RankViolation("quot: total rank " + std::to_string(rt) +
                            " <= sub rank " + std::to_string(rs));
      return rt - rs;
    }
  }
  throw Error("unreachable");
}

namespace {

ChernData chern_tangent(int n) {
  // Euler sequence: c(T) = (1+h)^{n+1} truncated.
  ChowClass h1 = ChowClass::one(n) + ChowClass::monomial(n, 1, 1);
  return ChernData(n, n, h1.pow(n + 1));
}

// Reduction chain for Omega^p on P^n:
//   p == n      : Omega^n = O(-n-1)
//   p == 1      : dual of the tangent bundle
//   p == 2      : Lambda^2 Omega^1 via the Chern character / Adams route
//   n - p == 1  : Omega^{n-1} = T(-n-1), from Omega^p* = Omega^{n-p}(n+1)
//   n - p == 2  : Omega^{n-2} = Omega^2*(-n-1), same identity
// This covers every p on P^n for n <= 5; the remaining middle degrees
// (3 <= p <= n-3) are rejected.
ChernData chern_cotangent(int n, long p) {
  if (p < 1 || p > n)
    throw InvalidAtDimension("Omega^" + std::to_string(p) +
                             " does not exist on P^" + std::to_string(n));
  if (p == n)
    return ChernData(n, 1,
                     ChowClass::one(n) +
                         ChowClass::monomial(n, 1, Rat(-(n + 1))));
  if (p == 1) return dual_chern(chern_tangent(n));
  if (p == 2)
    return character_to_chern(
        wedge2_character(chern_character(chern_cotangent(n, 1))));
  if (n - p == 1) return twist_chern(chern_tangent(n), -(n + 1));
  if (n - p == 2)
    return twist_chern(dual_chern(chern_cotangent(n, 2)), -(n + 1));
  throw UnsupportedOperation("Omega^" + std::to_string(p) + " on P^" +
                             std::to_string(n) +
                             " is outside the supported reduction chain");
}

}  // namespace

ChernData chern(const BundleExpr& e, int ambient) {
  using K = BundleExpr::Kind;
  const int n = ambient;
  check_ambient(n);
  switch (e.kind) {
    case K::LineBundle:
      return ChernData(n, 1,
                       ChowClass::one(n) +
                           ChowClass::monomial(n, 1, Rat(e.arg)));
    case K::Tangent:
      return chern_tangent(n);
    case K::Cotangent:
      return chern_cotangent(n, e.arg);
    case K::Trivial:
      return ChernData(n, static_cast<int>(e.arg), ChowClass::one(n));
    case K::Twist:
      return twist_chern(chern(*e.lhs, n), e.arg);
    case K::Dual:
      return dual_chern(chern(*e.lhs, n));
    case K::Sum: {
      // Whitney product; Trivial summands contribute the identity.
      ChernData a = chern(*e.lhs, n);
      ChernData b = chern(*e.rhs, n);
      return ChernData(n, a.rank + b.rank, a.total * b.total);
    }
    case K::Wedge2:
      return character_to_chern(
          wedge2_character(chern_character(chern(*e.lhs, n))));
    case K::Quot:
      return quot_chern(chern(*e.lhs, n), chern(*e.rhs, n));
  }
  throw Error("unreachable");
}

}  // namespace ggb
