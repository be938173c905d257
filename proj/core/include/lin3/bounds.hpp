#pragma once

#include <string>

#include "lin3/counts_table.hpp"
#include "lin3/search.hpp"

namespace lin3 {

enum class Verdict { Holds, Fails, Indeterminate };

std::string_view to_string(Verdict v);

/// One instantiated inequality "left <= right". `left`/`right` are exact
/// decimal integers when the side is an integer, otherwise a decimal
/// approximation; the verdict itself is always decided exactly.
struct BoundReport {
  std::string inequality;
  std::string parameters;
  std::string left;
  std::string right;
  double left_value = 0;
  double right_value = 0;
  Verdict verdict = Verdict::Indeterminate;
  double slack = 0;  // right_value - left_value

  bool holds() const noexcept { return verdict == Verdict::Holds; }
};

/// H(x) = -x log2 x - (1-x) log2 (1-x), H(0) = H(1) = 0.
double binary_entropy(double x);

/// sum_{i <= 3 rs} C(C(n,2), i) <= 2^{H(3 rs / C(n,2)) C(n,2)}.
/// Requires 0 <= 3 rs <= C(n,2) / 2, else OutOfRange.
BoundReport entropy_count_bound(int n, int rs_value);

/// log(1 + m(n,r)) / C(n,r) <= log(1 + m(n-t,r-t)) / C(n-t,r-t) for a
/// contraction-closed class stored under `class_name`.
BoundReport verify_blowup(const CountsTable& table, std::string_view class_name, int n, int r, int t);

/// log2 s(n) >= C(n, floor(n/2)) / n with s(n) = sum_r s(n, r) from the table.
BoundReport gs_lower_check(const CountsTable& table, int n);

/// f(n) <= sum_{i <= floor(n^2/9)} C(C(n,3), i).
BoundReport trivial_f_bound(int n, const Count& f_value);
Count trivial_f_limit(int n);

/// p_X(n,3) <= s_X(n,3)^2.
BoundReport pair_encoding_bound(const CountsTable& table, int n);

}  // namespace lin3
