#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ggb/constraints.hpp"
#include "ggb/expr.hpp"

namespace ggb {

/// One row of the c_1 = 3 classification: an identifier, the dimensions where
/// the construction exists, a constructor expression (the quotient families
/// need a concrete rank, k = n is used), and the expected invariants.
struct ClassificationEntry {
  std::string id;
  std::string family;  // human-readable constructor, with n and k symbolic
  int min_n;
  int max_n;  // kMaxAmbient when unrestricted
  std::function<std::string(int n)> expr_for;
  long expected_c2;
  std::vector<long> expected_ct;  // c_1, c_2, ... when a full polynomial is
                                  // expected; empty otherwise

  bool valid_at(int n) const { return n >= min_n && n <= max_n; }
};

/// The 14 concrete entries of the two classification lists. The trailing
/// "extension by trivial summands" items of both lists are a closure rule
/// (padding by Triv never changes Chern data), not entries.
const std::vector<ClassificationEntry>& catalog();

/// Entries valid at n with the given c_2.
std::vector<const ClassificationEntry*> lookup(long c2, int n);

struct CheckRow {
  std::string id;
  std::string check;
  bool pass;
  std::string detail;
};

struct Report {
  std::vector<CheckRow> rows;
  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

/// Recomputes every catalog entry valid at n and checks c_1 = 3, the expected
/// c_2, the full Chern polynomial where one is expected, and the
/// global-generation screen. Skipped entries get an informational row.
Report verify_catalog(int n);

struct Candidate {
  std::string expr;
  ChernData data;
};

/// All multisets of split-type atoms (O(1), O(2), O(3), T(-1), plus the
/// dimension-specific Omega atoms) with total c_1 = 3 and c_2 <= c2_max.
/// Deterministic canonical order.
std::vector<Candidate> enumerate_candidates(int n, long c2_max);

struct P1Splitting {
  std::vector<int> type;  // a_1 >= ... >= a_k >= 0, sum = 3
  int h0;                 // sum (a_i + 1)
};

/// All nonnegative splitting types on P^1 with c_1 = 3 for rank k.
std::vector<P1Splitting> p1_splittings(int k);

/// Executes the claims ledger: every numeric step cited in the source
/// arguments, recomputed from scratch. One row per claim.
Report verify_claims();

}  // namespace ggb
