#include "bridgecluster/laurent.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace bridgecluster {

namespace {

std::string exp_suffix(int e) {
  if (e == 1) return "";
  return "^" + std::to_string(e);
}

std::string exp_suffix_latex(int e) {
  if (e == 1) return "";
  return "^{" + std::to_string(e) + "}";
}

}  // namespace

MultiLaurent MultiLaurent::constant(std::size_t pairs, Int c) {
  MultiLaurent r(pairs);
  r.add_term(Exponents(2 * pairs, 0), c);
  return r;
}

MultiLaurent MultiLaurent::monomial(std::size_t pairs, Exponents exp, Int c) {
  if (exp.size() != 2 * pairs) throw internal_error("monomial: exponent length mismatch");
  MultiLaurent r(pairs);
  r.add_term(exp, c);
  return r;
}

MultiLaurent MultiLaurent::x_var(std::size_t pairs, std::size_t i, int e) {
  if (i < 1 || i > pairs) throw internal_error("x_var: index out of range");
  Exponents exp(2 * pairs, 0);
  exp[i - 1] = e;
  return monomial(pairs, std::move(exp));
}

MultiLaurent MultiLaurent::y_var(std::size_t pairs, std::size_t i, int e) {
  if (i < 1 || i > pairs) throw internal_error("y_var: index out of range");
  Exponents exp(2 * pairs, 0);
  exp[pairs + i - 1] = e;
  return monomial(pairs, std::move(exp));
}

bool MultiLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         terms_.begin()->first == Exponents(2 * n_, 0);
}

void MultiLaurent::check_compatible(const MultiLaurent& o, const char* op) const {
  if (n_ != o.n_)
    throw internal_error(std::string(op) + ": incompatible variable counts");
}

void MultiLaurent::add_term(const Exponents& exp, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiLaurent MultiLaurent::operator-() const {
  MultiLaurent r(n_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
  check_compatible(o, "add");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
  check_compatible(o, "sub");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& o) const {
  MultiLaurent r = *this;
  r += o;
  return r;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent& o) const {
  MultiLaurent r = *this;
  r -= o;
  return r;
}

MultiLaurent MultiLaurent::operator*(const MultiLaurent& o) const {
  check_compatible(o, "mul");
  MultiLaurent r(n_);
  Exponents e(2 * n_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool MultiLaurent::operator==(const MultiLaurent& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

MultiLaurent MultiLaurent::div_exact(const MultiLaurent& divisor) const {
  check_compatible(divisor, "div_exact");
  if (divisor.is_zero()) throw internal_error("div_exact: division by zero");
  if (is_zero()) return MultiLaurent(n_);

  const std::size_t w = 2 * n_;
  // When q * divisor == *this, per coordinate min(q) = min(a) - min(b) and
  // max(q) = max(a) - max(b) exactly (leading/trailing terms multiply under
  // any coordinate-first order). A candidate term outside that box disproves
  // divisibility, and the box bounds the loop.
  std::vector<int> lo(w), hi(w);
  for (std::size_t i = 0; i < w; ++i) {
    int amin = terms_.begin()->first[i], amax = amin;
    for (const auto& [e, c] : terms_) {
      amin = std::min(amin, e[i]);
      amax = std::max(amax, e[i]);
    }
    int bmin = divisor.terms_.begin()->first[i], bmax = bmin;
    for (const auto& [e, c] : divisor.terms_) {
      bmin = std::min(bmin, e[i]);
      bmax = std::max(bmax, e[i]);
    }
    lo[i] = amin - bmin;
    hi[i] = amax - bmax;
    if (lo[i] > hi[i]) throw internal_error("div_exact: divisor does not divide");
  }

  const auto& lead_b = *divisor.terms_.rbegin();
  MultiLaurent quotient(n_);
  MultiLaurent rem = *this;
  Exponents qe(w);
  while (!rem.is_zero()) {
    const auto& lead_r = *rem.terms_.rbegin();
    for (std::size_t i = 0; i < w; ++i) {
      qe[i] = lead_r.first[i] - lead_b.first[i];
      if (qe[i] < lo[i] || qe[i] > hi[i])
        throw internal_error("div_exact: divisor does not divide");
    }
    Int qc = lead_r.second / lead_b.second;
    if (qc * lead_b.second != lead_r.second)
      throw internal_error("div_exact: coefficient not divisible");
    MultiLaurent qterm = monomial(n_, qe, qc);
    quotient += qterm;
    rem -= qterm * divisor;
  }
  return quotient;
}

Int MultiLaurent::eval_all_ones() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool MultiLaurent::is_x_free() const {
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < n_; ++i)
      if (e[i] != 0) return false;
  return true;
}

bool MultiLaurent::y_exponents_nonnegative() const {
  for (const auto& [e, c] : terms_)
    for (std::size_t i = n_; i < 2 * n_; ++i)
      if (e[i] < 0) return false;
  return true;
}

MultiLaurent MultiLaurent::substitute_x_one() const {
  MultiLaurent r(n_);
  Exponents e(2 * n_, 0);
  for (const auto& [exp, c] : terms_) {
    for (std::size_t i = n_; i < 2 * n_; ++i) e[i] = exp[i];
    r.add_term(e, c);
  }
  return r;
}

MultiLaurent MultiLaurent::invert_y() const {
  MultiLaurent r(n_);
  Exponents e(2 * n_);
  for (const auto& [exp, c] : terms_) {
    for (std::size_t i = 0; i < n_; ++i) e[i] = exp[i];
    for (std::size_t i = n_; i < 2 * n_; ++i) e[i] = -exp[i];
    r.add_term(e, c);
  }
  return r;
}

MultiLaurent MultiLaurent::extended(std::size_t pairs) const {
  if (pairs < n_) throw internal_error("extended: cannot shrink variable count");
  MultiLaurent r(pairs);
  Exponents e(2 * pairs, 0);
  for (const auto& [exp, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < n_; ++i) e[i] = exp[i];
    for (std::size_t i = 0; i < n_; ++i) e[pairs + i] = exp[n_ + i];
    r.add_term(e, c);
  }
  return r;
}

namespace {

void append_term_plain(std::ostringstream& os, bool first, const Int& c,
                       const std::string& vars) {
  Int a = c < 0 ? Int(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (vars.empty()) {
    os << a;
  } else {
    if (a != 1) os << a << "*";
    os << vars;
  }
}

}  // namespace

std::string MultiLaurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string vars;
    for (std::size_t i = 0; i < 2 * n_; ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += (i < n_ ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - n_ + 1));
      vars += exp_suffix(e[i]);
    }
    append_term_plain(os, first, c, vars);
    first = false;
  }
  return os.str();
}

std::string MultiLaurent::latex() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string vars;
    for (std::size_t i = 0; i < 2 * n_; ++i) {
      if (e[i] == 0) continue;
      vars += (i < n_ ? "x_{" + std::to_string(i + 1) + "}"
                      : "y_{" + std::to_string(i - n_ + 1) + "}");
      vars += exp_suffix_latex(e[i]);
    }
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (vars.empty())
      os << a;
    else if (a != 1)
      os << a << vars;
    else
      os << vars;
    first = false;
  }
  return os.str();
}

void to_json(nlohmann::json& j, const MultiLaurent& ml) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= ml.pairs(); ++i) vars.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= ml.pairs(); ++i) vars.push_back("y" + std::to_string(i));
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : ml.terms())
    terms.push_back({{"coef", c.str()}, {"exp", e}});
  j = {{"vars", vars}, {"terms", terms}};
}

void from_json(const nlohmann::json& j, MultiLaurent& ml) {
  const auto& vars = j.at("vars");
  if (vars.size() % 2 != 0) throw std::invalid_argument("MultiLaurent: odd variable count");
  std::size_t pairs = vars.size() / 2;
  ml = MultiLaurent(pairs);
  for (const auto& t : j.at("terms")) {
    auto exp = t.at("exp").get<std::vector<int>>();
    if (exp.size() != 2 * pairs) throw std::invalid_argument("MultiLaurent: exponent length");
    ml.add_term(exp, Int(t.at("coef").get<std::string>()));
  }
}

MultiLaurent monomial_denominator(const MultiLaurent& m) {
  if (m.term_count() != 1) throw internal_error("monomial_denominator: not a monomial");
  const auto& e = m.terms().begin()->first;
  MultiLaurent::Exponents d(e.size(), 0);
  for (std::size_t i = 0; i < e.size() / 2; ++i)
    if (e[i] < 0) d[i] = -e[i];
  return MultiLaurent::monomial(m.pairs(), d);
}

TropMonomial TropMonomial::generator(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw internal_error("TropMonomial: index out of range");
  TropMonomial t{std::vector<int>(n, 0)};
  t.e[i - 1] = 1;
  return t;
}

TropMonomial TropMonomial::operator*(const TropMonomial& o) const {
  if (e.size() != o.e.size()) throw internal_error("TropMonomial: size mismatch");
  TropMonomial r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

TropMonomial TropMonomial::inverse() const {
  TropMonomial r = *this;
  for (int& v : r.e) v = -v;
  return r;
}

TropMonomial TropMonomial::pow(int k) const {
  TropMonomial r = *this;
  for (int& v : r.e) v *= k;
  return r;
}

TropMonomial TropMonomial::oplus(const TropMonomial& o) const {
  if (e.size() != o.e.size()) throw internal_error("TropMonomial: size mismatch");
  TropMonomial r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::min(r.e[i], o.e[i]);
  return r;
}

TropMonomial TropMonomial::oplus_one() const {
  TropMonomial r = *this;
  for (int& v : r.e) v = std::min(v, 0);
  return r;
}

MultiLaurent TropMonomial::as_laurent(std::size_t pairs) const {
  if (pairs < e.size()) throw internal_error("TropMonomial: too few pairs");
  MultiLaurent::Exponents exp(2 * pairs, 0);
  for (std::size_t i = 0; i < e.size(); ++i) exp[pairs + i] = e[i];
  return MultiLaurent::monomial(pairs, std::move(exp));
}

std::string TropMonomial::str() const {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "y" + std::to_string(i + 1) + exp_suffix(e[i]);
  }
  return s.empty() ? "1" : s;
}

HalfLaurent HalfLaurent::constant(Int c) {
  HalfLaurent r;
  r.add_term(0, c);
  return r;
}

HalfLaurent HalfLaurent::u_power(int k, Int c) {
  HalfLaurent r;
  r.add_term(k, c);
  return r;
}

void HalfLaurent::add_term(int u_exp, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(u_exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

HalfLaurent HalfLaurent::operator+(const HalfLaurent& o) const {
  HalfLaurent r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

HalfLaurent HalfLaurent::operator-(const HalfLaurent& o) const {
  HalfLaurent r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

HalfLaurent HalfLaurent::operator*(const HalfLaurent& o) const {
  HalfLaurent r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) r.add_term(ka + kb, ca * cb);
  return r;
}

HalfLaurent HalfLaurent::substitute_u_inverse() const {
  HalfLaurent r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(-k, c);
  return r;
}

bool HalfLaurent::integral_t_powers_only() const {
  for (const auto& [k, c] : terms_)
    if (k % 2 != 0) return false;
  return true;
}

Int HalfLaurent::eval_at_one() const {
  Int s = 0;
  for (const auto& [k, c] : terms_) s += c;
  return s;
}

Int HalfLaurent::coeff(int u_exp) const {
  auto it = terms_.find(u_exp);
  return it == terms_.end() ? Int(0) : it->second;
}

namespace {

std::string t_power_plain(int u_exp) {
  if (u_exp == 0) return "";
  if (u_exp % 2 == 0) {
    int e = u_exp / 2;
    return e == 1 ? "t" : "t^" + std::to_string(e);
  }
  return "t^" + std::to_string(u_exp) + "/2";
}

std::string t_power_latex(int u_exp) {
  if (u_exp == 0) return "";
  if (u_exp % 2 == 0) {
    int e = u_exp / 2;
    return e == 1 ? "t" : "t^{" + std::to_string(e) + "}";
  }
  return "t^{" + std::to_string(u_exp) + "/2}";
}

std::string hl_format(const std::map<int, Int>& terms, bool latex) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    std::string var = latex ? t_power_latex(k) : t_power_plain(k);
    Int a = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (var.empty())
      os << a;
    else if (a == 1)
      os << var;
    else
      os << a << (latex ? "" : "*") << var;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string HalfLaurent::str() const { return hl_format(terms_, false); }
std::string HalfLaurent::latex() const { return hl_format(terms_, true); }

void to_json(nlohmann::json& j, const HalfLaurent& hl) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : hl.terms())
    terms.push_back({{"coef", c.str()}, {"exp", std::vector<int>{k}}});
  j = {{"vars", std::vector<std::string>{"u"}}, {"terms", terms}};
}

void from_json(const nlohmann::json& j, HalfLaurent& hl) {
  hl = HalfLaurent();
  for (const auto& t : j.at("terms")) {
    auto exp = t.at("exp").get<std::vector<int>>();
    if (exp.size() != 1) throw std::invalid_argument("HalfLaurent: exponent length");
    hl.add_term(exp[0], Int(t.at("coef").get<std::string>()));
  }
}

HalfLaurent specialize_y(const MultiLaurent& f, const std::vector<int>& t_exponents) {
  if (!f.is_x_free())
    throw std::invalid_argument("specialize_y: polynomial must be x-free");
  if (t_exponents.size() != f.pairs())
    throw std::invalid_argument("specialize_y: one t-exponent per y variable required");
  const std::size_t n = f.pairs();
  HalfLaurent r;
  for (const auto& [e, c] : f.terms()) {
    long long total_deg = 0;
    long long u_exp = 0;
    for (std::size_t i = 0; i < n; ++i) {
      total_deg += e[n + i];
      u_exp += 2LL * t_exponents[i] * e[n + i];
    }
    Int coeff = (total_deg % 2 == 0) ? c : -c;
    r.add_term(static_cast<int>(u_exp), coeff);
  }
  return r;
}

}  // namespace bridgecluster
