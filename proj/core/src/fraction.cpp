#include "bridgecluster/fraction.hpp"

#include <sstream>

namespace bridgecluster {

Fraction::Fraction(Int p, Int q) : num(std::move(p)), den(std::move(q)) {
  if (num < 0 || den < 0) throw internal_error("Fraction: negative component");
  if (num == 0 && den == 0) throw internal_error("Fraction: 0/0");
  if (gcd(num, den) > 1) throw internal_error("Fraction: not reduced: " + str());
}

Fraction Fraction::mediant(const Fraction& a, const Fraction& b) {
  return Fraction(a.num + b.num, a.den + b.den);
}

Fraction Fraction::complement() const {
  if (is_formal()) throw internal_error("complement of formal 1/0");
  return Fraction(den - num, den);
}

std::string Fraction::str() const {
  std::ostringstream os;
  os << num << "/" << den;
  return os.str();
}

ContinuedFraction::ContinuedFraction(std::vector<Int> t) : terms(std::move(t)) {
  for (const Int& a : terms)
    if (a < 1) throw internal_error("ContinuedFraction: term < 1");
}

ContinuedFraction::ContinuedFraction(std::initializer_list<long long> t) {
  for (long long a : t) {
    if (a < 1) throw internal_error("ContinuedFraction: term < 1");
    terms.emplace_back(a);
  }
}

Int ContinuedFraction::partial_sum(std::size_t k) const {
  Int s = 0;
  for (std::size_t i = 0; i < k && i < terms.size(); ++i) s += terms[i];
  return s;
}

Int ContinuedFraction::triangle_count() const {
  return partial_sum(terms.size()) - 1;
}

std::string ContinuedFraction::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << ",";
    os << terms[i];
  }
  os << "]";
  return os.str();
}

ContinuedFraction cf_expand(const Fraction& f, CfVariant variant) {
  if (!f.is_interior())
    throw std::invalid_argument("cf_expand: fraction must lie strictly between 0 and 1");
  std::vector<Int> terms;
  // Euclidean expansion of q/p; ends with a_n >= 2 for p/q in (0,1).
  Int a = f.den, b = f.num;
  while (b > 0) {
    terms.push_back(a / b);
    Int r = a % b;
    a = b;
    b = r;
  }
  if (variant == CfVariant::alternate) {
    // Euclid yields a_n >= 2 for interior fractions, so this stays positive.
    terms.back() -= 1;
    terms.emplace_back(1);
  }
  return ContinuedFraction(std::move(terms));
}

Fraction cf_value(const ContinuedFraction& cf) {
  // p_i/q_i = (a_i p_{i-1} + p_{i-2}) / (a_i q_{i-1} + q_{i-2}), seeded with
  // p_{-1}/q_{-1} = 1/0 and p_0/q_0 = 0/1, so [] evaluates to 0/1.
  Int p2 = 1, q2 = 0;
  Int p1 = 0, q1 = 1;
  for (const Int& a : cf.terms) {
    Int p = a * p1 + p2;
    Int q = a * q1 + q2;
    p2 = p1;
    q2 = q1;
    p1 = std::move(p);
    q1 = std::move(q);
  }
  return Fraction(p1, q1);
}

ContinuedFraction cf_canonicalize(ContinuedFraction cf) {
  while (cf.terms.size() >= 2 && cf.terms.back() == 1) {
    cf.terms.pop_back();
    cf.terms.back() += 1;
  }
  return cf;
}

ContinuedFraction mirror(const ContinuedFraction& cf) {
  if (cf.terms.empty()) throw std::invalid_argument("mirror: empty continued fraction");
  std::vector<Int> t;
  if (cf.terms[0] > 1) {
    t.emplace_back(1);
    t.push_back(cf.terms[0] - 1);
    t.insert(t.end(), cf.terms.begin() + 1, cf.terms.end());
  } else {
    if (cf.terms.size() < 2)
      throw std::invalid_argument("mirror: [1] has no mirror in (0,1)");
    t.push_back(cf.terms[1] + 1);
    t.insert(t.end(), cf.terms.begin() + 2, cf.terms.end());
  }
  return cf_canonicalize(ContinuedFraction(std::move(t)));
}

Parity parity(const Fraction& f) {
  int pn = static_cast<int>(f.num % 2);
  int pd = static_cast<int>(f.den % 2);
  if (pn == 0 && pd == 0) throw internal_error("parity: fraction not reduced");
  if (pn == 0) return Parity::zero_one;
  if (pd == 0) return Parity::one_zero;
  return Parity::one_one;
}

std::string parity_str(Parity p) {
  switch (p) {
    case Parity::zero_one: return "0/1";
    case Parity::one_one: return "1/1";
    case Parity::one_zero: return "1/0";
  }
  return "?";
}

Fraction parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
    throw std::invalid_argument("expected a fraction of the form p/q: '" + text + "'");
  Int p, q;
  try {
    p = Int(text.substr(0, slash));
    q = Int(text.substr(slash + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("expected a fraction of the form p/q: '" + text + "'");
  }
  if (q <= 0 || p <= 0 || p >= q)
    throw std::invalid_argument("fraction must satisfy 0 < p < q: '" + text + "'");
  if (gcd(p, q) != 1)
    throw std::invalid_argument("fraction must be reduced: '" + text + "'");
  return Fraction(p, q);
}

ContinuedFraction parse_cf(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw std::invalid_argument("unterminated '[' in: '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Int> terms;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (item.empty()) throw std::invalid_argument("empty continued fraction term in: '" + text + "'");
    Int a;
    try {
      a = Int(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad continued fraction term '" + item + "'");
    }
    if (a < 1) throw std::invalid_argument("continued fraction terms must be >= 1");
    terms.push_back(std::move(a));
  }
  if (terms.empty()) throw std::invalid_argument("empty continued fraction: '" + text + "'");
  ContinuedFraction cf{std::move(terms)};
  if (!cf_value(cf).is_interior())
    throw std::invalid_argument("continued fraction value must lie strictly between 0 and 1");
  return cf;
}

}  // namespace bridgecluster
