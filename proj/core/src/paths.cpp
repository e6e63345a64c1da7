#include "bridgecluster/paths.hpp"

#include <algorithm>

namespace bridgecluster {

namespace {

void check_path(const AncestralTriangle& at, const Path& path) {
  if (path.size() < 2 || path.front() != at.apex ||
      (path.back() != at.base_left && path.back() != at.base_right))
    throw std::invalid_argument("not a path from the apex to 0/1 or 1/1");
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!at.has_edge(path[i], path[i + 1]))
      throw std::invalid_argument("path step is not an edge");
    if (at.labels[path[i]].den <= at.labels[path[i + 1]].den)
      throw std::invalid_argument("path step does not decrease the denominator");
  }
}

}  // namespace

std::vector<Path> enumerate_paths(const AncestralTriangle& at) {
  std::vector<Path> out;
  Path cur{at.apex};
  // pre-sorted down_neighbors make this emission order lexicographic
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == at.base_left || v == at.base_right) {
      out.push_back(cur);
      return;
    }
    for (int w : at.down_neighbors[v]) {
      cur.push_back(w);
      self(self, w);
      cur.pop_back();
    }
  };
  dfs(dfs, at.apex);
  return out;
}

std::vector<bool> left_side(const AncestralTriangle& at, const Path& path) {
  check_path(at, path);
  // Close the path into a polygon: down the path, along the base edge when
  // the path ends at 0/1, then up the right boundary chain to the apex.
  std::vector<int> poly = path;
  if (poly.back() == at.base_left) poly.push_back(at.base_right);
  for (std::size_t i = 1; i + 1 < at.right_chain.size(); ++i)
    poly.push_back(at.right_chain[i]);

  const std::size_t m = poly.size();
  std::vector<bool> in_s(at.triangle_count());
  for (std::size_t ti = 0; ti < at.triangle_count(); ++ti) {
    const Triangle& t = at.tris[ti];
    // three times the centroid, so everything stays integral
    const long long px = at.coord_x[t.left_v] + at.coord_x[t.right_v] + at.coord_x[t.apex_v];
    const long long py = at.coord_y[t.left_v] + at.coord_y[t.right_v] + at.coord_y[t.apex_v];
    bool inside = false;
    for (std::size_t i = 0; i < m; ++i) {
      int a = poly[i], b = poly[(i + 1) % m];
      const long long ax = 3 * at.coord_x[a], ay = 3 * at.coord_y[a];
      const long long bx = 3 * at.coord_x[b], by = 3 * at.coord_y[b];
      if ((ay > py) == (by > py)) continue;
      // px < ax + (py-ay)(bx-ax)/(by-ay), cross-multiplied by (by-ay)
      __int128 lhs = static_cast<__int128>(px - ax) * (by - ay);
      __int128 rhs = static_cast<__int128>(py - ay) * (bx - ax);
      if (by > ay ? lhs < rhs : lhs > rhs) inside = !inside;
    }
    in_s[ti] = !inside;
  }
  return in_s;
}

MultiLaurent triangle_weight(const AncestralTriangle& at, std::size_t i) {
  const std::size_t n = at.triangle_count();
  if (i < 1 || i > n) throw std::invalid_argument("triangle_weight: index out of range");
  MultiLaurent::Exponents e(2 * n, 0);
  e[n + i - 1] = 1;  // y_i
  auto bump_x = [&](std::size_t j, int d) {
    if (j >= 1 && j <= n) e[j - 1] += d;  // x_{N+1} = 1
  };
  const bool right_i = at.tris[i - 1].orient == Orientation::right;
  if (i == 1) {
    bump_x(2, right_i ? 1 : -1);
  } else {
    const bool right_prev = at.tris[i - 2].orient == Orientation::right;
    if (right_i && right_prev) {
      bump_x(i + 1, 1);
      bump_x(i - 1, -1);
    } else if (right_i && !right_prev) {
      bump_x(i - 1, 1);
      bump_x(i + 1, 1);
    } else if (!right_i && right_prev) {
      bump_x(i - 1, -1);
      bump_x(i + 1, -1);
    } else {
      bump_x(i - 1, 1);
      bump_x(i + 1, -1);
    }
  }
  return MultiLaurent::monomial(n, std::move(e));
}

MultiLaurent path_weight(const AncestralTriangle& at, const Path& path) {
  const std::size_t n = at.triangle_count();
  std::vector<bool> side = left_side(at, path);
  MultiLaurent w = MultiLaurent::constant(n, Int(1));
  for (std::size_t i = 0; i < n; ++i)
    if (side[i]) w = w * triangle_weight(at, i + 1);
  return w;
}

MultiLaurent cluster_via_paths(const AncestralTriangle& at) {
  const std::size_t n = at.triangle_count();
  // D / (x_1 ... x_N) as one monomial
  MultiLaurent::Exponents pre(2 * n, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    MultiLaurent d = monomial_denominator(triangle_weight(at, i));
    const auto& de = d.terms().begin()->first;
    for (std::size_t j = 0; j < n; ++j) pre[j] += de[j];
  }
  for (std::size_t j = 0; j < n; ++j) pre[j] -= 1;
  MultiLaurent prefactor = MultiLaurent::monomial(n, std::move(pre));

  MultiLaurent sum(n);
  for (const Path& p : enumerate_paths(at)) sum += path_weight(at, p);
  return prefactor * sum;
}

MultiLaurent f_polynomial(const AncestralTriangle& at) {
  const std::size_t n = at.triangle_count();
  MultiLaurent f(n);
  for (const Path& p : enumerate_paths(at)) {
    std::vector<bool> side = left_side(at, p);
    MultiLaurent::Exponents e(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (side[i]) e[n + i] = 1;
    f.add_term(e, Int(1));
  }
  return f;
}

namespace {

// F-polynomial of a sub-continued-fraction, embedded into the ring with
// `pairs` variable pairs. [] and [1] (value 1/1) have no triangles: F = 1.
MultiLaurent sub_f(std::vector<Int> terms, std::size_t pairs) {
  if (terms.empty()) return MultiLaurent::constant(pairs, Int(1));
  ContinuedFraction cf{std::move(terms)};
  if (!cf_value(cf).is_interior()) {
    if (cf_value(cf) == Fraction(Int(1), Int(1)))
      return MultiLaurent::constant(pairs, Int(1));
    throw internal_error("sub_f: unexpected sub-fraction " + cf_value(cf).str());
  }
  return f_polynomial(build_triangle(cf)).extended(pairs);
}

MultiLaurent y_range_product(std::size_t pairs, long long from, long long to) {
  MultiLaurent::Exponents e(2 * pairs, 0);
  for (long long i = from; i <= to; ++i) e[pairs + i - 1] = 1;
  return MultiLaurent::monomial(pairs, std::move(e));
}

}  // namespace

bool f_recursion_check(const ContinuedFraction& cf) {
  const std::size_t n = cf.length();
  if (n == 0) return true;
  if (cf.terms.back() < 2 && n > 1)
    throw std::invalid_argument("f_recursion_check: continued fraction must be canonical");

  const AncestralTriangle at = build_triangle(cf);
  const std::size_t N = at.triangle_count();
  const MultiLaurent f = f_polynomial(at);
  const long long l_prev = cf.partial_sum(n - 1).convert_to<long long>();

  std::vector<Int> base(cf.terms.begin(), cf.terms.end());

  // trailing-1 identity: F_{[...,a_n-1,1]} = F_{[...,a_n]}
  {
    std::vector<Int> alt = base;
    alt.back() -= 1;
    alt.emplace_back(1);
    if (!(f_polynomial(build_triangle(ContinuedFraction{alt})) == f)) return false;
  }

  std::vector<Int> dropped(base.begin(), base.end() - 1);
  std::vector<Int> decremented = base;
  decremented.back() -= 1;
  MultiLaurent f_drop = sub_f(dropped, N);
  MultiLaurent f_dec = sub_f(decremented, N);
  const MultiLaurent y_N = MultiLaurent::y_var(N, N);
  const MultiLaurent one = MultiLaurent::constant(N, Int(1));

  // one-step recursion
  if (n % 2 == 1) {
    if (!(f == f_drop + y_N * f_dec)) return false;
  } else {
    if (!(f == y_range_product(N, l_prev, static_cast<long long>(N)) * f_drop + f_dec))
      return false;
  }

  // two-step recursions
  if (n >= 2 || cf.terms[0] >= 3) {
    std::vector<Int> minus2 = base;
    minus2.back() -= 2;
    if (minus2.back() == 0) {
      minus2.pop_back();
      if (!minus2.empty()) minus2.pop_back();  // [...,a_{n-1},0] = [...,a_{n-2}]
    }
    MultiLaurent f_m2 = sub_f(minus2, N);
    if (n % 2 == 1) {
      if (cf.terms.back() == 2) {
        // only reachable with n >= 3 here; f_dec is F_{[a_1..a_{n-1},1]}
        const long long l_pp = cf.partial_sum(n - 2).convert_to<long long>();
        if (!(f == (one + y_N) * f_drop +
                       y_range_product(N, l_pp, static_cast<long long>(N)) * f_m2))
          return false;
        if (!(f == (one + y_N) * f_dec -
                       y_range_product(N, l_pp, static_cast<long long>(N) - 1) * f_m2))
          return false;
      } else {
        const MultiLaurent y_N1 = MultiLaurent::y_var(N, N - 1);
        if (!(f == (one + y_N) * f_dec - y_N1 * f_m2)) return false;
        if (!(f == (one + y_N) * f_drop + y_N1 * y_N * f_m2)) return false;
      }
    } else {
      if (!(f == (one + y_N) * f_dec - y_N * f_m2)) return false;
      if (!(f == y_range_product(N, l_prev, static_cast<long long>(N) - 1) * (one + y_N) *
                         f_drop +
                     f_m2))
        return false;
    }
  }
  return true;
}

bool mirror_f_check(const ContinuedFraction& cf) {
  const AncestralTriangle at = build_triangle(cf);
  const std::size_t N = at.triangle_count();
  MultiLaurent f = f_polynomial(at);
  MultiLaurent fm = f_polynomial(build_triangle(mirror_raw(cf)));
  return fm == y_range_product(N, 1, static_cast<long long>(N)) * f.invert_y();
}

}  // namespace bridgecluster
