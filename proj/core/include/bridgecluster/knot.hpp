#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bridgecluster/laurent.hpp"
#include "bridgecluster/paths.hpp"
#include "bridgecluster/triangle.hpp"

namespace bridgecluster {

enum class FanClass { bottom_edge_in_path, left_of_path, right_of_path };

struct SeifertData {
  Path path;
  std::vector<FanClass> fan_class;  // per fan F_1..F_n
  std::vector<int> t;               // braid signs t_1..t_n, each +-1
  std::vector<int> e;               // triangle signs e_1..e_N, each +-1
};

// The unique path whose edges carry mod-2 endpoint labels {1/1,1/0} (when
// p/q = 1/1 mod 2) or {0/1,1/0}, never using two sides of one triangle.
// Found by filtering the full enumeration; zero or several survivors throw.
Path seifert_path(const AncestralTriangle& at);

// Per fan: bottom edge on the Seifert path, else which side the fan lies on.
std::vector<FanClass> classify_fans(const AncestralTriangle& at, const Path& sp);

SeifertData seifert_data(const AncestralTriangle& at);
std::vector<int> crossing_signs(const AncestralTriangle& at);
std::vector<int> triangle_signs(const AncestralTriangle& at);

// Returns (2d, s): d = -(1/2) sum d(k) with d(k) = a_k - 1 when (k odd and
// t_k = -1) or (k even and t_k = +1), else t_k when the bottom edge of F_k is
// on the Seifert path, else 1; s = (-1)^(n + sum of even-indexed a_i - pq).
std::pair<int, int> exponent_and_sign(const ContinuedFraction& cf, const std::vector<int>& t,
                                      const std::vector<FanClass>& fan_class);

struct AlexanderResult {
  ContinuedFraction cf;
  MultiLaurent f_poly;        // F_{p/q}
  HalfLaurent f_specialized;  // F-hat, y_i = -t^{e_i}
  int d_times_2 = 0;
  int s = 1;
  HalfLaurent delta;  // s * t^d * F-hat
  SeifertData seifert;
};

// Alexander polynomial via the F-polynomial specialization.
AlexanderResult alexander_specialized(const ContinuedFraction& cf);

// Independent oracle: the skein-relation recursion on continued fractions,
// with mirror normalization for the 1/1 parity class and the conventions
// delta([]) = 1, delta([0]) = 0, delta([1]) = 1.
class SkeinOracle {
public:
  HalfLaurent alexander(const ContinuedFraction& cf);

private:
  HalfLaurent compute(std::vector<Int> terms, int depth);
  std::map<std::vector<Int>, HalfLaurent> memo_;
};

HalfLaurent alexander_skein_oracle(const ContinuedFraction& cf);

struct VerifyRow {
  Fraction fraction;
  bool match = false;          // specialization equals skein oracle
  bool symmetry_ok = true;     // q odd: delta(t) = delta(1/t)
  bool mirror_ok = true;       // q odd: delta(p/q) = delta((q-p)/q)
  bool symmetry_checked = false;
  bool ok() const { return match && symmetry_ok && mirror_ok; }
};

struct VerifyReport {
  Int q_max;
  std::vector<VerifyRow> rows;
  bool all_ok = true;
  std::string table() const;
};

// Checks every reduced p/q with 0 < p < q <= q_max; results are identical
// for any job count.
VerifyReport verify_range(const Int& q_max, int jobs = 1);

nlohmann::json alexander_to_json(const AlexanderResult& r, bool oracle_match);

}  // namespace bridgecluster
