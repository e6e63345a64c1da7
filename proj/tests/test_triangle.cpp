#include "bridgecluster/triangle.hpp"

#include <set>

#include "doctest.h"
#include "test_util.hpp"

using namespace bridgecluster;
using bridgecluster::testutil::frac;

namespace {

int vertex_of(const AncestralTriangle& at, long long p, long long q) {
  for (std::size_t v = 0; v < at.labels.size(); ++v)
    if (at.labels[v] == frac(p, q)) return static_cast<int>(v);
  REQUIRE(false);
  return -1;
}

std::string orientations(const AncestralTriangle& at) {
  std::string s;
  for (const Triangle& t : at.tris) s += orientation_letter(t.orient);
  return s;
}

}  // namespace

TEST_CASE("AT(7/19) structure") {
  AncestralTriangle at = build_triangle(ContinuedFraction{2, 1, 2, 2});
  CHECK(at.triangle_count() == 6);
  CHECK(orientations(at) == "RLRRLL");
  CHECK(at.apex_label() == frac(7, 19));
  REQUIRE(at.fans.size() == 4);
  CHECK(at.fans[0].size == 1);
  CHECK(at.fans[1].size == 1);
  CHECK(at.fans[2].size == 2);
  CHECK(at.fans[3].size == 2);
  CHECK_FALSE(at.fans[0].bottom_edge.has_value());

  // bottom edges are the working edges where each fan starts
  auto edge_labels = [&](const std::pair<int, int>& e) {
    return std::make_pair(at.labels[e.first], at.labels[e.second]);
  };
  CHECK(edge_labels(*at.fans[1].bottom_edge) == std::make_pair(frac(0, 1), frac(1, 2)));
  CHECK(edge_labels(*at.fans[2].bottom_edge) == std::make_pair(frac(1, 3), frac(1, 2)));
  CHECK(edge_labels(*at.fans[3].bottom_edge) == std::make_pair(frac(1, 3), frac(3, 8)));

  // the vertices of the example strip
  for (auto [p, q] : {std::pair<long long, long long>{0, 1}, {1, 1}, {1, 2}, {1, 3},
                      {2, 5}, {3, 8}, {4, 11}, {7, 19}})
    CHECK(vertex_of(at, p, q) >= 0);
}

TEST_CASE("AT(3/5) structure") {
  AncestralTriangle at = build_triangle(ContinuedFraction{1, 1, 2});
  CHECK(at.triangle_count() == 3);
  CHECK(orientations(at) == "LRR");
  CHECK(at.apex_label() == frac(3, 5));
  REQUIRE(at.fans.size() == 3);
  CHECK(at.fans[0].size == 0);
  CHECK(at.fans[1].size == 1);
  CHECK(at.fans[2].size == 2);
  // with an empty first fan, fan 2 sits on the base edge
  REQUIRE(at.fans[1].bottom_edge.has_value());
  CHECK(at.fans[1].bottom_edge->first == at.base_left);
  CHECK(at.fans[1].bottom_edge->second == at.base_right);
}

TEST_CASE("AT(1/2) is a single right triangle") {
  AncestralTriangle at = build_triangle(ContinuedFraction{2});
  CHECK(at.triangle_count() == 1);
  CHECK(orientations(at) == "R");
  CHECK(at.apex_label() == frac(1, 2));
  std::set<Fraction> labels(at.labels.begin(), at.labels.end());
  CHECK(labels == std::set<Fraction>{frac(0, 1), frac(1, 1), frac(1, 2)});
}

TEST_CASE("build rejects fractions outside (0,1)") {
  CHECK_THROWS_AS(build_triangle(ContinuedFraction{1}), std::invalid_argument);
  CHECK_THROWS_AS(build_triangle(ContinuedFraction{}), std::invalid_argument);
}

TEST_CASE("vertex parities") {
  AncestralTriangle at35 = build_triangle(ContinuedFraction{1, 1, 2});
  std::vector<Parity> p35 = vertex_parities(at35);
  CHECK(p35[at35.apex] == Parity::one_one);

  AncestralTriangle at719 = build_triangle(ContinuedFraction{2, 1, 2, 2});
  std::vector<Parity> p719 = vertex_parities(at719);
  CHECK(p719[vertex_of(at719, 3, 8)] == Parity::one_zero);
}

TEST_CASE("every triangle carries all three parity classes, q <= 30") {
  for (long long q = 2; q <= 30; ++q)
    for (long long p = 1; p < q; ++p) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      // vertex_parities throws if a triangle misses a parity class
      CHECK_NOTHROW(vertex_parities(build_triangle(cf_expand(frac(p, q)))));
    }
}

TEST_CASE("mirror structure for the worked examples and exhaustively") {
  CHECK(mirror_structure_check(ContinuedFraction{1, 1, 2}));
  CHECK(mirror_structure_check(ContinuedFraction{2}));
  for (long long q = 2; q <= 30; ++q)
    for (long long p = 1; p < q; ++p) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      CHECK(mirror_structure_check(cf_expand(frac(p, q))));
    }
}

TEST_CASE("apex, fan sizes, orientations and mediants, q <= 50") {
  for (long long q = 2; q <= 50; ++q)
    for (long long p = 1; p < q; ++p) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      ContinuedFraction cf = cf_expand(frac(p, q));
      AncestralTriangle at = build_triangle(cf);
      REQUIRE(at.apex_label() == frac(p, q));
      REQUIRE(at.fans.size() == cf.length());
      Int expect_first = cf.terms[0] - 1;
      REQUIRE(Int(at.fans[0].size) == expect_first);
      for (std::size_t k = 1; k < cf.length(); ++k)
        REQUIRE(Int(at.fans[k].size) == cf.terms[k]);
      for (const Triangle& t : at.tris) {
        // orientation alternates by fan parity, fan 1 right
        REQUIRE(t.orient == (t.fan % 2 == 1 ? Orientation::right : Orientation::left));
        // mediant labels and growing denominators
        REQUIRE(at.labels[t.apex_v] ==
                Fraction::mediant(at.labels[t.left_v], at.labels[t.right_v]));
        REQUIRE(at.labels[t.apex_v].den > at.labels[t.left_v].den);
        REQUIRE(at.labels[t.apex_v].den > at.labels[t.right_v].den);
      }
      REQUIRE(Int(at.triangle_count()) == cf.triangle_count());
    }
}

TEST_CASE("svg output is deterministic") {
  AncestralTriangle at = build_triangle(ContinuedFraction{2, 1, 2, 2});
  std::string a = to_svg(at);
  std::string b = to_svg(at);
  CHECK(a == b);
  CHECK(a.find("<svg") == 0);
  CHECK(a.find("7/19") != std::string::npos);
  std::string with_overlay = to_svg(at, {{at.apex, 2, 0}});
  CHECK(with_overlay.find("polyline") != std::string::npos);
}

TEST_CASE("svg golden for the one-triangle strip") {
  AncestralTriangle at = build_triangle(ContinuedFraction{2});
  CHECK(to_svg(at) ==
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
        "height=\"640\" viewBox=\"0 0 800 640\">\n"
        "  <polygon points=\"60.00,580.00 740.00,580.00 400.00,60.00\" fill=\"none\" "
        "stroke=\"black\" stroke-width=\"1\"/>\n"
        "  <text x=\"60.00\" y=\"580.00\" font-size=\"14\" text-anchor=\"middle\" "
        "dy=\"-4\">0/1</text>\n"
        "  <text x=\"740.00\" y=\"580.00\" font-size=\"14\" text-anchor=\"middle\" "
        "dy=\"-4\">1/1</text>\n"
        "  <text x=\"400.00\" y=\"60.00\" font-size=\"14\" text-anchor=\"middle\" "
        "dy=\"-4\">1/2</text>\n"
        "</svg>\n");
}
