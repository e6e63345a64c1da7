#include "bridgecluster/knot.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

namespace bridgecluster {

namespace {

bool edge_parities_allowed(Parity a, Parity b, bool apex_is_one_one) {
  if (apex_is_one_one)
    return (a == Parity::one_one && b == Parity::one_zero) ||
           (a == Parity::one_zero && b == Parity::one_one);
  return (a == Parity::zero_one && b == Parity::one_zero) ||
         (a == Parity::one_zero && b == Parity::zero_one);
}

bool shares_triangle(const AncestralTriangle& at, int a, int b, int c) {
  const auto& t1 = at.triangles_of_edge(a, b);
  const auto& t2 = at.triangles_of_edge(b, c);
  for (int x : t1)
    for (int y : t2)
      if (x == y) return true;
  return false;
}

}  // namespace

Path seifert_path(const AncestralTriangle& at) {
  const std::vector<Parity> par = vertex_parities(at);
  const bool apex_one_one = par[at.apex] == Parity::one_one;
  std::vector<Path> found;
  for (const Path& p : enumerate_paths(at)) {
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < p.size(); ++i) {
      if (!edge_parities_allowed(par[p[i]], par[p[i + 1]], apex_one_one)) ok = false;
      if (ok && i + 2 < p.size() && shares_triangle(at, p[i], p[i + 1], p[i + 2])) ok = false;
    }
    if (ok) found.push_back(p);
  }
  if (found.size() != 1)
    throw internal_error("seifert_path: expected a unique path, found " +
                         std::to_string(found.size()));
  return found[0];
}

std::vector<FanClass> classify_fans(const AncestralTriangle& at, const Path& sp) {
  std::vector<bool> on_left = left_side(at, sp);
  std::set<std::pair<int, int>> sp_edges;
  for (std::size_t i = 0; i + 1 < sp.size(); ++i)
    sp_edges.insert(AncestralTriangle::edge_key(sp[i], sp[i + 1]));

  std::vector<FanClass> out(at.fans.size());
  for (std::size_t k = 0; k < at.fans.size(); ++k) {
    const Fan& fan = at.fans[k];
    if (fan.bottom_edge &&
        sp_edges.count(AncestralTriangle::edge_key(fan.bottom_edge->first,
                                                   fan.bottom_edge->second))) {
      out[k] = FanClass::bottom_edge_in_path;
      continue;
    }
    if (fan.size == 0) {
      out[k] = FanClass::right_of_path;  // empty F_1; never consulted
      continue;
    }
    const bool first_left = on_left[static_cast<std::size_t>(fan.first_triangle)];
    for (int i = 1; i < fan.size; ++i)
      if (on_left[static_cast<std::size_t>(fan.first_triangle + i)] != first_left)
        throw internal_error("classify_fans: fan split by the Seifert path");
    out[k] = first_left ? FanClass::left_of_path : FanClass::right_of_path;
  }
  return out;
}

SeifertData seifert_data(const AncestralTriangle& at) {
  SeifertData sd;
  sd.path = seifert_path(at);
  sd.fan_class = classify_fans(at, sd.path);

  sd.t.resize(at.fans.size());
  sd.t[0] = parity(at.apex_label()) == Parity::one_one ? -1 : +1;
  for (std::size_t k = 1; k < at.fans.size(); ++k)
    sd.t[k] = sd.fan_class[k] == FanClass::bottom_edge_in_path ? -sd.t[k - 1] : sd.t[k - 1];

  sd.e.resize(at.triangle_count());
  for (std::size_t k = 0; k < at.fans.size(); ++k) {
    const Fan& fan = at.fans[k];
    for (int i = 1; i <= fan.size; ++i) {
      int sign;
      if (sd.fan_class[k] == FanClass::bottom_edge_in_path) {
        sign = (i % 2 == 0) ? +1 : -1;  // (-1)^i
      } else {
        const bool odd_fan = (k % 2 == 0);  // k is 0-based here
        const bool plus_side = odd_fan ? sd.fan_class[k] == FanClass::left_of_path
                                       : sd.fan_class[k] == FanClass::right_of_path;
        sign = plus_side ? +1 : ((i - 1) % 2 == 0 ? +1 : -1);  // +1 or (-1)^{i-1}
      }
      sd.e[static_cast<std::size_t>(fan.first_triangle + i - 1)] = sign;
    }
  }
  return sd;
}

std::vector<int> crossing_signs(const AncestralTriangle& at) { return seifert_data(at).t; }

std::vector<int> triangle_signs(const AncestralTriangle& at) { return seifert_data(at).e; }

std::pair<int, int> exponent_and_sign(const ContinuedFraction& cf, const std::vector<int>& t,
                                      const std::vector<FanClass>& fan_class) {
  const std::size_t n = cf.length();
  if (t.size() != n || fan_class.size() != n)
    throw std::invalid_argument("exponent_and_sign: inconsistent inputs");
  Int dsum = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const bool odd = (k % 2 == 1);
    if ((odd && t[k - 1] == -1) || (!odd && t[k - 1] == +1))
      dsum += cf.terms[k - 1] - 1;
    else if (fan_class[k - 1] == FanClass::bottom_edge_in_path)
      dsum += t[k - 1];
    else
      dsum += 1;
  }
  const int d_times_2 = -dsum.convert_to<int>();

  Fraction v = cf_value(cf);
  Int exp = Int(n) + v.num * v.den;
  for (std::size_t k = 2; k <= n; k += 2) exp += cf.terms[k - 1];
  const int s = (exp % 2 == 0) ? +1 : -1;
  return {d_times_2, s};
}

AlexanderResult alexander_specialized(const ContinuedFraction& cf) {
  AlexanderResult r;
  r.cf = cf;
  AncestralTriangle at = build_triangle(cf);
  r.seifert = seifert_data(at);
  r.f_poly = f_polynomial(at);
  r.f_specialized = specialize_y(r.f_poly, r.seifert.e);
  if (!r.f_specialized.integral_t_powers_only())
    throw internal_error("alexander_specialized: specialized F has half-integer powers");
  auto [d2, s] = exponent_and_sign(cf, r.seifert.t, r.seifert.fan_class);
  r.d_times_2 = d2;
  r.s = s;
  r.delta = HalfLaurent::u_power(d2, Int(s)) * r.f_specialized;
  return r;
}

HalfLaurent SkeinOracle::alexander(const ContinuedFraction& cf) {
  return compute(cf.terms, 0);
}

HalfLaurent SkeinOracle::compute(std::vector<Int> terms, int depth) {
  if (depth > 10000) throw internal_error("skein oracle: recursion guard tripped");

  // conventions: [...,a,0] = [... up to a's predecessor], [] -> 1, [0] -> 0
  while (!terms.empty() && terms.back() == 0) {
    terms.pop_back();
    if (terms.empty()) return HalfLaurent();  // [0]
    terms.pop_back();
  }
  if (terms.empty()) return HalfLaurent::constant(Int(1));
  while (terms.size() >= 2 && terms.back() == 1) {
    terms.pop_back();
    terms.back() += 1;
  }
  if (terms.size() == 1 && terms[0] == 1) return HalfLaurent::constant(Int(1));  // unknot

  auto it = memo_.find(terms);
  if (it != memo_.end()) return it->second;

  const ContinuedFraction cf{terms};
  HalfLaurent result;
  if (parity(cf_value(cf)) == Parity::one_one) {
    // a knot equals its mirror image; (q-p)/q leaves the 1/1 class
    result = compute(mirror(cf).terms, depth + 1);
  } else {
    const std::size_t n = terms.size();
    std::vector<int> t = crossing_signs(build_triangle(cf));
    const int tn = t.back();
    const bool drop_last = (n % 2 == 1) == (tn == +1);

    std::vector<Int> minus2 = terms;
    minus2.back() -= 2;
    std::vector<Int> second = terms;
    if (drop_last)
      second.pop_back();
    else
      second.back() -= 1;

    HalfLaurent skein = HalfLaurent::u_power(1) - HalfLaurent::u_power(-1);
    HalfLaurent tail = skein * compute(std::move(second), depth + 1);
    result = compute(std::move(minus2), depth + 1) + (tn == +1 ? tail : -tail);
  }
  memo_.emplace(std::move(terms), result);
  return result;
}

HalfLaurent alexander_skein_oracle(const ContinuedFraction& cf) {
  SkeinOracle oracle;
  return oracle.alexander(cf);
}

std::string VerifyReport::table() const {
  std::ostringstream os;
  os << "fraction  cf              spec=skein  symmetric  mirror\n";
  std::size_t failures = 0;
  for (const VerifyRow& r : rows) {
    ContinuedFraction cf = cf_expand(r.fraction);
    std::ostringstream head;
    head << r.fraction.str();
    std::string h = head.str();
    h.resize(std::max<std::size_t>(h.size(), 9), ' ');
    std::string c = cf.str();
    c.resize(std::max<std::size_t>(c.size(), 15), ' ');
    os << h << " " << c << " " << (r.match ? "ok " : "FAIL") << "        "
       << (r.symmetry_checked ? (r.symmetry_ok ? "ok " : "FAIL") : "-  ") << "       "
       << (r.symmetry_checked ? (r.mirror_ok ? "ok" : "FAIL") : "-") << "\n";
    if (!r.ok()) ++failures;
  }
  os << rows.size() << " fractions checked up to q = " << q_max << ", " << failures
     << " failure(s)\n";
  return os.str();
}

VerifyReport verify_range(const Int& q_max, int jobs) {
  if (q_max < 2) throw std::invalid_argument("verify_range: q_max must be at least 2");
  if (jobs < 1) throw std::invalid_argument("verify_range: jobs must be positive");

  std::vector<Fraction> fractions;
  for (Int q = 2; q <= q_max; ++q)
    for (Int p = 1; p < q; ++p)
      if (gcd(p, q) == 1) fractions.emplace_back(p, q);

  VerifyReport report;
  report.q_max = q_max;
  report.rows.resize(fractions.size());

  auto worker = [&](int job) {
    SkeinOracle oracle;
    for (std::size_t i = static_cast<std::size_t>(job); i < fractions.size();
         i += static_cast<std::size_t>(jobs)) {
      const Fraction& f = fractions[i];
      VerifyRow row;
      row.fraction = f;
      ContinuedFraction cf = cf_expand(f);
      AlexanderResult spec = alexander_specialized(cf);
      row.match = spec.delta == oracle.alexander(cf);
      if (f.den % 2 == 1) {
        row.symmetry_checked = true;
        row.symmetry_ok = spec.delta.symmetric();
        AlexanderResult mspec = alexander_specialized(cf_expand(f.complement()));
        row.mirror_ok = mspec.delta == spec.delta;
      }
      report.rows[i] = row;
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
    for (auto& th : threads) th.join();
  }
  for (const VerifyRow& r : report.rows) report.all_ok = report.all_ok && r.ok();
  return report;
}

nlohmann::json alexander_to_json(const AlexanderResult& r, bool oracle_match) {
  nlohmann::json jdelta, jfhat;
  to_json(jdelta, r.delta);
  to_json(jfhat, r.f_specialized);
  std::vector<long long> cf_terms;
  for (const Int& a : r.cf.terms) cf_terms.push_back(a.convert_to<long long>());
  return {{"fraction", cf_value(r.cf).str()},
          {"cf", cf_terms},
          {"t_signs", r.seifert.t},
          {"e_signs", r.seifert.e},
          {"d_times_2", r.d_times_2},
          {"s", r.s},
          {"alexander_u_poly", jdelta},
          {"f_specialized", jfhat},
          {"oracle_match", oracle_match}};
}

}  // namespace bridgecluster
