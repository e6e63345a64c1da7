#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bridgecluster/fraction.hpp"

namespace bridgecluster {

// Ascending lexicographic order on (y-exponents, x-exponents). Exponent
// vectors have length 2n with x_1..x_n first and y_1..y_n second.
struct YxLexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const std::size_t mid = a.size() / 2;
    for (std::size_t i = mid; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    for (std::size_t i = 0; i < mid; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

// Multivariate Laurent polynomial over Z in x_1..x_n, y_1..y_n. Terms are
// kept in the canonical order above; zero coefficients are never stored.
class MultiLaurent {
public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Int, YxLexLess>;

  explicit MultiLaurent(std::size_t pairs = 0) : n_(pairs) {}

  static MultiLaurent constant(std::size_t pairs, Int c);
  static MultiLaurent monomial(std::size_t pairs, Exponents exp, Int c = Int(1));
  static MultiLaurent x_var(std::size_t pairs, std::size_t i, int e = 1);  // 1-based
  static MultiLaurent y_var(std::size_t pairs, std::size_t i, int e = 1);  // 1-based

  std::size_t pairs() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }

  MultiLaurent operator-() const;
  MultiLaurent operator+(const MultiLaurent& o) const;
  MultiLaurent operator-(const MultiLaurent& o) const;
  MultiLaurent operator*(const MultiLaurent& o) const;
  MultiLaurent& operator+=(const MultiLaurent& o);
  MultiLaurent& operator-=(const MultiLaurent& o);
  bool operator==(const MultiLaurent& o) const;

  // Exact division in the Laurent ring; throws internal_error if the divisor
  // does not divide exactly (that signals a Laurent-phenomenon violation).
  MultiLaurent div_exact(const MultiLaurent& divisor) const;

  // Sum of all coefficients, i.e. the value at x_i = y_i = 1.
  Int eval_all_ones() const;
  bool is_x_free() const;
  bool y_exponents_nonnegative() const;

  // Substitutes 1 for every x variable (the F-polynomial specialization).
  MultiLaurent substitute_x_one() const;
  // Substitutes y_i^{-1} for y_i.
  MultiLaurent invert_y() const;
  // Same polynomial viewed in a ring with more variable pairs.
  MultiLaurent extended(std::size_t pairs) const;

  void add_term(const Exponents& exp, const Int& c);

  std::string str() const;
  std::string latex() const;

private:
  std::size_t n_;
  TermMap terms_;

  void check_compatible(const MultiLaurent& o, const char* op) const;
};

void to_json(nlohmann::json& j, const MultiLaurent& ml);
void from_json(const nlohmann::json& j, MultiLaurent& ml);

// For a single-term Laurent monomial: the x-exponent vector of its
// denominator (componentwise max(-e, 0) on the x part).
MultiLaurent monomial_denominator(const MultiLaurent& m);

// Element of the tropical semifield Trop(y_1,...,y_n): a Laurent monomial in
// the y generators with addition = componentwise min of exponents.
struct TropMonomial {
  std::vector<int> e;

  static TropMonomial one(std::size_t n) { return TropMonomial{std::vector<int>(n, 0)}; }
  static TropMonomial generator(std::size_t n, std::size_t i);  // y_i, 1-based

  std::size_t size() const { return e.size(); }
  TropMonomial operator*(const TropMonomial& o) const;
  TropMonomial inverse() const;
  TropMonomial pow(int k) const;
  TropMonomial oplus(const TropMonomial& o) const;
  TropMonomial oplus_one() const;  // componentwise min(e, 0)
  bool operator==(const TropMonomial&) const = default;

  MultiLaurent as_laurent(std::size_t pairs) const;
  std::string str() const;
};

// Univariate Laurent polynomial in u = t^{1/2} over Z. Half-integer powers
// of t are exact: the key is the u-exponent, twice the t-exponent.
class HalfLaurent {
public:
  HalfLaurent() = default;
  static HalfLaurent constant(Int c);
  static HalfLaurent u_power(int k, Int c = Int(1));

  const std::map<int, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  HalfLaurent operator-() const;
  HalfLaurent operator+(const HalfLaurent& o) const;
  HalfLaurent operator-(const HalfLaurent& o) const;
  HalfLaurent operator*(const HalfLaurent& o) const;
  bool operator==(const HalfLaurent& o) const { return terms_ == o.terms_; }

  HalfLaurent substitute_u_inverse() const;
  bool symmetric() const { return *this == substitute_u_inverse(); }
  bool integral_t_powers_only() const;
  Int eval_at_one() const;
  Int coeff(int u_exp) const;

  void add_term(int u_exp, const Int& c);

  std::string str() const;
  std::string latex() const;

private:
  std::map<int, Int> terms_;
};

void to_json(nlohmann::json& j, const HalfLaurent& hl);
void from_json(const nlohmann::json& j, HalfLaurent& hl);

// Substitutes y_i = -t^{t_exponents[i-1]} into an x-free polynomial.
HalfLaurent specialize_y(const MultiLaurent& f, const std::vector<int>& t_exponents);

}  // namespace bridgecluster
