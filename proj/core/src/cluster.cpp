#include "bridgecluster/cluster.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace bridgecluster {

Quiver Quiver::from_arrows(int vertices, const std::vector<std::pair<int, int>>& arrows) {
  Quiver q(vertices);
  for (auto [from, to] : arrows) {
    if (from < 1 || from > vertices || to < 1 || to > vertices || from == to)
      throw internal_error("Quiver: bad arrow");
    q.b[from - 1][to - 1] += 1;
    q.b[to - 1][from - 1] -= 1;
  }
  return q;
}

std::vector<std::pair<int, int>> Quiver::arrows() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < b[i][j]; ++c) out.emplace_back(i + 1, j + 1);
  return out;
}

bool Quiver::skew_symmetric() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b[i][j] != -b[j][i]) return false;
  return true;
}

std::string Quiver::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto [from, to] : arrows()) {
    if (!first) os << ", ";
    os << from << "->" << to;
    first = false;
  }
  return first ? "(no arrows)" : os.str();
}

Seed initial_seed(const Quiver& q) {
  Seed s;
  s.quiver = q;
  const std::size_t n = static_cast<std::size_t>(q.n);
  for (std::size_t i = 1; i <= n; ++i) {
    s.x.push_back(MultiLaurent::x_var(n, i));
    s.y.push_back(TropMonomial::generator(n, i));
  }
  return s;
}

Quiver initial_quiver(const AncestralTriangle& at) {
  const int n = static_cast<int>(at.triangle_count());
  std::vector<std::pair<int, int>> arrows;
  for (int i = 1; i <= n - 1; ++i) {
    if (at.tris[i - 1].orient == Orientation::right)
      arrows.emplace_back(i + 1, i);
    else
      arrows.emplace_back(i, i + 1);
  }
  return Quiver::from_arrows(n, arrows);
}

namespace {

MultiLaurent ml_pow(const MultiLaurent& base, int e) {
  if (e < 0) throw internal_error("ml_pow: negative exponent");
  MultiLaurent r = MultiLaurent::constant(base.pairs(), Int(1));
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

}  // namespace

Seed mutate(const Seed& s, int k) {
  const int n = s.quiver.n;
  if (k < 1 || k > n) throw std::invalid_argument("mutate: vertex out of range");
  const int kk = k - 1;
  const auto& b = s.quiver.b;
  const std::size_t pairs = static_cast<std::size_t>(n);

  Seed out = s;

  // exchange matrix
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == kk || j == kk)
        out.quiver.b[i][j] = -b[i][j];
      else if (b[i][kk] > 0 && b[kk][j] > 0)
        out.quiver.b[i][j] = b[i][j] + b[i][kk] * b[kk][j];
      else if (b[i][kk] < 0 && b[kk][j] < 0)
        out.quiver.b[i][j] = b[i][j] - b[i][kk] * b[kk][j];
    }
  if (!out.quiver.skew_symmetric()) throw internal_error("mutate: matrix not skew-symmetric");

  // tropical y
  const TropMonomial& uk = s.y[kk];
  const TropMonomial uk_plus_one = uk.oplus_one();
  for (int j = 0; j < n; ++j) {
    if (j == kk) {
      out.y[j] = uk.inverse();
    } else {
      int bkj = b[kk][j];
      out.y[j] = s.y[j] * uk.pow(std::max(bkj, 0)) * uk_plus_one.pow(-bkj);
    }
  }

  // x_k: ( prod X_i^{[-b_ik]+} + u_k prod X_i^{[b_ik]+} ) / ((u_k (+) 1) X_k)
  MultiLaurent num_neg = MultiLaurent::constant(pairs, Int(1));
  MultiLaurent num_pos = MultiLaurent::constant(pairs, Int(1));
  for (int i = 0; i < n; ++i) {
    if (b[i][kk] < 0) num_neg = num_neg * ml_pow(s.x[i], -b[i][kk]);
    if (b[i][kk] > 0) num_pos = num_pos * ml_pow(s.x[i], b[i][kk]);
  }
  MultiLaurent numerator = num_neg + uk.as_laurent(pairs) * num_pos;
  MultiLaurent denominator = uk_plus_one.as_laurent(pairs) * s.x[kk];
  out.x[kk] = numerator.div_exact(denominator);
  if (!out.x[kk].y_exponents_nonnegative())
    throw internal_error("mutate: Laurent phenomenon violated (negative y-exponent)");

  return out;
}

MultiLaurent cluster_variable(const ContinuedFraction& cf) {
  AncestralTriangle at = build_triangle(cf);
  Seed s = initial_seed(initial_quiver(at));
  const int n = static_cast<int>(at.triangle_count());
  for (int k = 1; k <= n; ++k) s = mutate(s, k);
  return s.x[static_cast<std::size_t>(n) - 1];
}

MultiLaurent f_from_cluster(const MultiLaurent& x) { return x.substitute_x_one(); }

nlohmann::json seed_to_json(const Seed& s) {
  nlohmann::json jx = nlohmann::json::array();
  for (const auto& xi : s.x) {
    nlohmann::json j;
    to_json(j, xi);
    jx.push_back(std::move(j));
  }
  nlohmann::json jy = nlohmann::json::array();
  for (const auto& yi : s.y) jy.push_back(yi.e);
  nlohmann::json arrows = nlohmann::json::array();
  for (auto [from, to] : s.quiver.arrows()) arrows.push_back({from, to});
  return {{"x", jx}, {"y", jy}, {"arrows", arrows}};
}

}  // namespace bridgecluster
