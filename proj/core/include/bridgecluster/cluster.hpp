#pragma once

#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "bridgecluster/laurent.hpp"
#include "bridgecluster/triangle.hpp"

namespace bridgecluster {

// Quiver without 1-loops or 2-cycles, stored as its skew-symmetric exchange
// matrix b[i][j] = #(arrows i->j) - #(arrows j->i).
struct Quiver {
  int n = 0;
  std::vector<std::vector<int>> b;

  explicit Quiver(int vertices = 0) : n(vertices), b(vertices, std::vector<int>(vertices, 0)) {}
  static Quiver from_arrows(int vertices, const std::vector<std::pair<int, int>>& arrows);

  // arrows with multiplicity, 1-based, sorted
  std::vector<std::pair<int, int>> arrows() const;
  bool skew_symmetric() const;
  bool operator==(const Quiver&) const = default;
  std::string str() const;
};

// Seed with principal coefficients: x over Z[x^{+-1}, y], y in the tropical
// semifield, plus the quiver.
struct Seed {
  std::vector<MultiLaurent> x;
  std::vector<TropMonomial> y;
  Quiver quiver;

  bool operator==(const Seed&) const = default;
};

Seed initial_seed(const Quiver& q);

// Arrow i+1 -> i below a right triangle T_i, i -> i+1 below a left one.
Quiver initial_quiver(const AncestralTriangle& at);

// Seed mutation at vertex k (1-based). The new x_k entry must divide exactly
// and stay Laurent with nonnegative y-exponents; violations throw.
Seed mutate(const Seed& s, int k);

// x_N of mu_N ... mu_1 applied to the initial seed of AT(p/q).
MultiLaurent cluster_variable(const ContinuedFraction& cf);

// F-polynomial of a cluster variable: substitute 1 for every x_i.
MultiLaurent f_from_cluster(const MultiLaurent& x);

nlohmann::json seed_to_json(const Seed& s);

}  // namespace bridgecluster
