#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bridgecluster {

using Int = boost::multiprecision::cpp_int;

// Thrown when a checked internal invariant fails. Reaching one of these is a
// bug, not a usage error; the CLI maps it to exit code 2.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

enum class Parity { zero_one, one_one, one_zero };

// Reduced nonnegative rational. den == 0 encodes the formal label 1/0, which
// is valid as a vertex label but rejected at every user-facing entry point.
struct Fraction {
  Int num{0};
  Int den{1};

  Fraction() = default;
  Fraction(Int p, Int q);

  static Fraction formal_one_zero() { return Fraction(Int(1), Int(0)); }
  static Fraction mediant(const Fraction& a, const Fraction& b);

  bool is_formal() const { return den == 0; }
  // strictly between 0 and 1
  bool is_interior() const { return den != 0 && num > 0 && num < den; }
  Fraction complement() const;  // (q-p)/q

  bool operator==(const Fraction&) const = default;
  // value order; the formal 1/0 compares greatest
  bool operator<(const Fraction& o) const { return num * o.den < o.num * den; }
  std::string str() const;
};

// Positive continued fraction [a_1,...,a_n], all a_i >= 1, n >= 1.
struct ContinuedFraction {
  std::vector<Int> terms;

  ContinuedFraction() = default;
  explicit ContinuedFraction(std::vector<Int> t);
  ContinuedFraction(std::initializer_list<long long> t);

  std::size_t length() const { return terms.size(); }
  // l_k = a_1 + ... + a_k
  Int partial_sum(std::size_t k) const;
  // N = l_n - 1, the number of triangles
  Int triangle_count() const;

  bool operator==(const ContinuedFraction&) const = default;
  std::string str() const;
};

enum class CfVariant { canonical, alternate };

// Continued fraction expansion of a reduced fraction in (0,1). The canonical
// variant has a_n >= 2 unless n == 1; the alternate ends in 1.
ContinuedFraction cf_expand(const Fraction& f, CfVariant variant = CfVariant::canonical);

// Value of the nested fraction 1/(a_1 + 1/(a_2 + ...)). Empty input is the
// 0/1 boundary; a lone 0 term yields the formal 1/0.
Fraction cf_value(const ContinuedFraction& cf);

// Merge a trailing 1 so the result ends with a_n >= 2 (identity on values).
ContinuedFraction cf_canonicalize(ContinuedFraction cf);

// Canonical expansion of (q-p)/q. [a_1,...] with a_1 > 1 maps to
// [1,a_1-1,a_2,...]; [1,b,rest] maps to [b+1,rest].
ContinuedFraction mirror(const ContinuedFraction& cf);

Parity parity(const Fraction& f);
std::string parity_str(Parity p);

// Parses "p/q"; demands 0 < p < q and gcd(p,q) = 1.
Fraction parse_fraction(const std::string& text);
// Parses "[a1,a2,...]" or "a1,a2,..."; demands value in (0,1).
ContinuedFraction parse_cf(const std::string& text);

}  // namespace bridgecluster
