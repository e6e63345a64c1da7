#include "bridgecluster/knot.hpp"

#include <nlohmann/json.hpp>

#include "bridgecluster/verify.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bridgecluster;
using bridgecluster::testutil::frac;

namespace {

std::vector<Fraction> path_labels(const AncestralTriangle& at, const Path& p) {
  std::vector<Fraction> out;
  for (int v : p) out.push_back(at.labels[v]);
  return out;
}

HalfLaurent t_poly(std::initializer_list<std::pair<int, long long>> terms) {
  HalfLaurent h;
  for (auto [tpow, c] : terms) h.add_term(2 * tpow, Int(c));
  return h;
}

}  // namespace

TEST_CASE("Seifert paths of the worked examples") {
  AncestralTriangle at719 = build_triangle(ContinuedFraction{2, 1, 2, 2});
  CHECK(path_labels(at719, seifert_path(at719)) ==
        std::vector<Fraction>{frac(7, 19), frac(3, 8), frac(1, 3), frac(1, 2), frac(1, 1)});

  AncestralTriangle at12 = build_triangle(ContinuedFraction{2});
  CHECK(path_labels(at12, seifert_path(at12)) ==
        std::vector<Fraction>{frac(1, 2), frac(0, 1)});

  AncestralTriangle at35 = build_triangle(ContinuedFraction{1, 1, 2});
  CHECK(path_labels(at35, seifert_path(at35)) ==
        std::vector<Fraction>{frac(3, 5), frac(1, 2), frac(1, 1)});

  AncestralTriangle at27 = build_triangle(ContinuedFraction{3, 2});
  CHECK(path_labels(at27, seifert_path(at27)) ==
        std::vector<Fraction>{frac(2, 7), frac(1, 4), frac(0, 1)});
}

TEST_CASE("fan classification") {
  AncestralTriangle at27 = build_triangle(ContinuedFraction{3, 2});
  CHECK(classify_fans(at27, seifert_path(at27)) ==
        std::vector<FanClass>{FanClass::right_of_path, FanClass::right_of_path});

  AncestralTriangle at719 = build_triangle(ContinuedFraction{2, 1, 2, 2});
  std::vector<FanClass> fc = classify_fans(at719, seifert_path(at719));
  REQUIRE(fc.size() == 4);
  CHECK(fc[1] != FanClass::bottom_edge_in_path);
  CHECK(fc[2] == FanClass::bottom_edge_in_path);
  CHECK(fc[3] == FanClass::bottom_edge_in_path);
}

TEST_CASE("crossing signs") {
  CHECK(crossing_signs(build_triangle(ContinuedFraction{2, 1, 2, 2})) ==
        std::vector<int>{-1, -1, +1, -1});
  CHECK(crossing_signs(build_triangle(ContinuedFraction{3, 2})) ==
        std::vector<int>{+1, +1});
  CHECK(crossing_signs(build_triangle(ContinuedFraction{1, 1, 2})) ==
        std::vector<int>{-1, -1, +1});
}

TEST_CASE("mirror flips braid signs, q odd <= 30") {
  for (long long q = 3; q <= 30; q += 2)
    for (long long p = 1; p < q; ++p) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      ContinuedFraction cf = cf_expand(frac(p, q));
      if (cf.terms[0] < 2) continue;  // partner covers p/q > 1/2
      std::vector<int> t = crossing_signs(build_triangle(cf));
      std::vector<int> tm = crossing_signs(build_triangle(mirror_raw(cf)));
      REQUIRE(tm.size() == t.size() + 1);
      for (std::size_t i = 0; i < t.size(); ++i) REQUIRE(t[i] == -tm[i + 1]);
    }
}

TEST_CASE("top-triangle rule for t_n, q <= 50") {
  for (long long q = 2; q <= 50; ++q)
    for (long long p = 1; p < q; ++p) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      if (parity(frac(p, q)) == Parity::one_zero) continue;
      AncestralTriangle at = build_triangle(cf_expand(frac(p, q)));
      std::vector<int> t = crossing_signs(at);
      const Triangle& top = at.tris.back();
      if (parity(at.labels[top.left_v]) == Parity::one_zero)
        REQUIRE(t.back() == +1);
      else {
        REQUIRE(parity(at.labels[top.right_v]) == Parity::one_zero);
        REQUIRE(t.back() == -1);
      }
    }
}

TEST_CASE("triangle signs") {
  CHECK(triangle_signs(build_triangle(ContinuedFraction{3, 2})) ==
        std::vector<int>{+1, -1, +1, +1});
  CHECK(triangle_signs(build_triangle(ContinuedFraction{1, 1, 2})) ==
        std::vector<int>{+1, -1, +1});
  CHECK(triangle_signs(build_triangle(ContinuedFraction{2, 1, 2, 2})) ==
        std::vector<int>{+1, +1, -1, +1, -1, +1});
}

TEST_CASE("exponent and sign") {
  auto data_for = [](const ContinuedFraction& cf) {
    AncestralTriangle at = build_triangle(cf);
    SeifertData sd = seifert_data(at);
    return exponent_and_sign(cf, sd.t, sd.fan_class);
  };
  CHECK(data_for(ContinuedFraction{1, 1, 2}) == std::make_pair(-2, -1));
  CHECK(data_for(ContinuedFraction{3, 2}) == std::make_pair(-2, +1));
  CHECK(data_for(ContinuedFraction{2, 1, 2, 2}) == std::make_pair(-2, +1));
}

TEST_CASE("Alexander polynomials via specialization") {
  CHECK(alexander_specialized(ContinuedFraction{1, 1, 2}).delta ==
        t_poly({{-1, -1}, {0, 3}, {1, -1}}));
  CHECK(alexander_specialized(ContinuedFraction{3, 2}).delta ==
        t_poly({{-1, 2}, {0, -3}, {1, 2}}));
  CHECK(alexander_specialized(ContinuedFraction{2, 1, 2, 2}).delta ==
        t_poly({{-2, -1}, {-1, 5}, {0, -7}, {1, 5}, {2, -1}}));
  // tb(1/2) has half-integer powers
  CHECK(alexander_specialized(ContinuedFraction{2}).delta ==
        HalfLaurent::u_power(1) - HalfLaurent::u_power(-1));
}

TEST_CASE("skein oracle base cases and examples") {
  CHECK(alexander_skein_oracle(ContinuedFraction{2}) ==
        HalfLaurent::u_power(1) - HalfLaurent::u_power(-1));
  CHECK(alexander_skein_oracle(ContinuedFraction{1, 1, 2}) ==
        t_poly({{-1, -1}, {0, 3}, {1, -1}}));
  // torus-type strips: [a] gives (a/2)(t^{1/2} - t^{-1/2}) for even a
  CHECK(alexander_skein_oracle(ContinuedFraction{4}) ==
        HalfLaurent::u_power(1, Int(2)) - HalfLaurent::u_power(-1, Int(2)));
  // trefoil via [1,2]
  CHECK(alexander_skein_oracle(ContinuedFraction{1, 2}) ==
        t_poly({{-1, 1}, {0, -1}, {1, 1}}));
}

TEST_CASE("skein oracle matches specialization on the examples") {
  for (ContinuedFraction cf :
       {ContinuedFraction{2}, ContinuedFraction{1, 1, 2}, ContinuedFraction{3, 2},
        ContinuedFraction{2, 1, 2, 2}, ContinuedFraction{5}, ContinuedFraction{2, 3}}) {
    CHECK(alexander_specialized(cf).delta == alexander_skein_oracle(cf));
  }
}

TEST_CASE("verify_range") {
  VerifyReport r19 = verify_range(Int(19));
  CHECK(r19.all_ok);
  bool found = false;
  for (const VerifyRow& row : r19.rows)
    if (row.fraction == frac(7, 19)) found = true;
  CHECK(found);
  CHECK(r19.table().find("FAIL") == std::string::npos);

  VerifyReport r2 = verify_range(Int(2));
  CHECK(r2.rows.size() == 1);
  CHECK(r2.all_ok);
}

TEST_CASE("verify_range is independent of the job count") {
  VerifyReport a = verify_range(Int(15), 1);
  VerifyReport b = verify_range(Int(15), 4);
  CHECK(a.table() == b.table());
}

TEST_CASE("delta, d and s agree on both expansions of a fraction, q <= 20") {
  for (long long q = 2; q <= 20; ++q)
    for (long long p = 1; p < q; ++p) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      Fraction f = frac(p, q);
      AlexanderResult a = alexander_specialized(cf_expand(f));
      AlexanderResult b = alexander_specialized(cf_expand(f, CfVariant::alternate));
      REQUIRE(a.delta == b.delta);
      REQUIRE(a.d_times_2 == b.d_times_2);
      REQUIRE(a.s == b.s);
    }
}

TEST_CASE("Seifert path uniqueness never fails up to q = 50") {
  for (long long q = 2; q <= 50; ++q)
    for (long long p = 1; p < q; ++p) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      CHECK_NOTHROW(seifert_path(build_triangle(cf_expand(frac(p, q)))));
    }
}

TEST_CASE("full verify runner") {
  FullVerifyReport r = run_full_verify(Int(10), 2);
  CHECK(r.all_ok);
  CHECK(r.table().find("FAIL") == std::string::npos);
  CHECK(run_full_verify(Int(10), 1).table() == r.table());
}

TEST_CASE("alexander json payload") {
  AlexanderResult r = alexander_specialized(ContinuedFraction{1, 1, 2});
  nlohmann::json j = alexander_to_json(r, true);
  CHECK(j["fraction"] == "3/5");
  CHECK(j["cf"] == std::vector<long long>{1, 1, 2});
  CHECK(j["t_signs"] == std::vector<int>{-1, -1, 1});
  CHECK(j["e_signs"] == std::vector<int>{1, -1, 1});
  CHECK(j["d_times_2"] == -2);
  CHECK(j["s"] == -1);
  CHECK(j["oracle_match"] == true);
}
