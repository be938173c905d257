#include "lin3/bounds.hpp"

#include <cmath>
#include <sstream>

#include "lin3/error.hpp"

namespace lin3 {

namespace {

double to_double(const Count& c) { return c.convert_to<double>(); }

// log2 of a positive integer; exact enough for reporting, never for verdicts.
double log2_of(const Count& c) {
  const auto bits = static_cast<long>(boost::multiprecision::msb(c));
  if (bits < 1000) return std::log2(to_double(c));
  const Count top = c >> static_cast<unsigned>(bits - 60);
  return std::log2(to_double(top)) + static_cast<double>(bits - 60);
}

Count power(const Count& base, const Count& exponent) {
  return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
}

std::string decimal(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

std::string params(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) s += (s.empty() ? "" : ",") + std::string(k) + "=" + std::to_string(v);
  return s;
}

BoundReport finish(BoundReport r, bool holds) {
  r.verdict = holds ? Verdict::Holds : Verdict::Fails;
  r.slack = r.right_value - r.left_value;
  return r;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "FAILS";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(Errc::OutOfRange, "entropy argument outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

BoundReport entropy_count_bound(int n, int rs_value) {
  if (n < 2 || rs_value < 0) throw Error(Errc::OutOfRange, "need n >= 2 and rs >= 0");
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  const long long k = 3LL * rs_value;
  if (2 * k > pairs) {
    throw Error(Errc::OutOfRange, "3*rs = " + std::to_string(k) + " exceeds C(n,2)/2 = " +
                                      std::to_string(pairs) + "/2");
  }
  Count lhs = 0;
  for (long long i = 0; i <= k; ++i) lhs += binomial(static_cast<int>(pairs), static_cast<int>(i));

  // With x = k/N, 2^{H(x) N} = N^N / (k^k (N-k)^(N-k)) exactly, so the
  // comparison is between integers: lhs * k^k * (N-k)^(N-k) <= N^N.
  const Count N = pairs;
  const Count K = k;
  const Count num = power(N, N);
  const Count den = power(K, K) * power(N - K, N - K);  // 0^0 == 1
  const double exponent = binary_entropy(static_cast<double>(k) / static_cast<double>(pairs)) *
                          static_cast<double>(pairs);

  BoundReport r;
  r.inequality = "entropy-count";
  r.parameters = params({{"n", n}, {"rs", rs_value}});
  r.left = lhs.str();
  r.left_value = to_double(lhs);
  r.right_value = std::exp2(exponent);
  r.right = decimal(r.right_value);
  return finish(r, lhs * den <= num);
}

BoundReport verify_blowup(const CountsTable& table, std::string_view class_name, int n, int r, int t) {
  if (t < 0 || t > r || r > n) throw Error(Errc::OutOfRange, "need 0 <= t <= r <= n");
  const std::string cls(class_name);
  const Count big = table.value({n, r, cls});
  const Count small = table.value({n - t, r - t, cls});
  const Count c_big = binomial(n, r);
  const Count c_small = binomial(n - t, r - t);

  BoundReport rep;
  rep.inequality = "blowup";
  rep.parameters = cls + "," + params({{"n", n}, {"r", r}, {"t", t}});
  rep.left_value = log2_of(big + 1) / to_double(c_big);
  rep.right_value = log2_of(small + 1) / to_double(c_small);
  rep.left = decimal(rep.left_value);
  rep.right = decimal(rep.right_value);
  // log(1+a)/A <= log(1+b)/B  <=>  (1+a)^B <= (1+b)^A
  return finish(rep, power(big + 1, c_small) <= power(small + 1, c_big));
}

BoundReport gs_lower_check(const CountsTable& table, int n) {
  if (n < 1) throw Error(Errc::OutOfRange, "need n >= 1");
  Count total = 0;
  for (int r = 0; r <= n; ++r) total += table.value({n, r, std::string(classes::kSparsePaving)});
  const Count central = binomial(n, n / 2);

  BoundReport rep;
  rep.inequality = "graham-sloane";
  rep.parameters = params({{"n", n}});
  // Reported as RHS <= LHS flipped into left <= right form: C(n,n/2)/n <= log2 s(n).
  rep.left_value = to_double(central) / n;
  rep.right_value = log2_of(total);
  rep.left = decimal(rep.left_value);
  rep.right = decimal(rep.right_value);
  // C/n <= log2 s  <=>  2^C <= s^n
  const Count lhs = Count(1) << central.convert_to<unsigned>();
  return finish(rep, lhs <= boost::multiprecision::pow(total, static_cast<unsigned>(n)));
}

Count trivial_f_limit(int n) {
  if (n < 0) throw Error(Errc::OutOfRange, "negative n");
  const int top = n * n / 9;
  const Count triples = binomial(n, 3);
  Count sum = 0;
  for (int i = 0; i <= top; ++i) sum += binomial(triples.convert_to<int>(), i);
  return sum;
}

BoundReport trivial_f_bound(int n, const Count& f_value) {
  const Count limit = trivial_f_limit(n);
  BoundReport rep;
  rep.inequality = "f-trivial";
  rep.parameters = params({{"n", n}});
  rep.left = f_value.str();
  rep.right = limit.str();
  rep.left_value = to_double(f_value);
  rep.right_value = to_double(limit);
  return finish(rep, f_value <= limit);
}

BoundReport pair_encoding_bound(const CountsTable& table, int n) {
  const Count p = table.value({n, 3, std::string(classes::kPavingX)});
  const Count s = table.value({n, 3, std::string(classes::kSparsePavingX)});
  BoundReport rep;
  rep.inequality = "pair-encoding";
  rep.parameters = params({{"n", n}});
  rep.left = p.str();
  rep.right = Count(s * s).str();
  rep.left_value = to_double(p);
  rep.right_value = to_double(s * s);
  return finish(rep, p <= s * s);
}

}  // namespace lin3
