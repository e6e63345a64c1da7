#pragma once

#include <vector>

#include "bridgecluster/laurent.hpp"
#include "bridgecluster/triangle.hpp"

namespace bridgecluster {

// Vertex sequence from the apex down to 0/1 or 1/1 along edges of strictly
// decreasing denominator.
using Path = std::vector<int>;

// All paths, depth-first with lower-denominator neighbors first; the order is
// deterministic (lexicographic in the (denominator, numerator) vertex keys).
std::vector<Path> enumerate_paths(const AncestralTriangle& at);

// S_gamma: flags[i] is true iff T_{i+1} lies on the left side of the path,
// i.e. not strictly inside the polygon closed by the walk from the path's
// endpoint back to the apex along the base edge and the right boundary.
std::vector<bool> left_side(const AncestralTriangle& at, const Path& path);

// w(T_i), 1-based; a Laurent monomial with the convention x_{N+1} = 1.
MultiLaurent triangle_weight(const AncestralTriangle& at, std::size_t i);

// w(gamma) = product of w(T_i) over S_gamma; empty product is 1.
MultiLaurent path_weight(const AncestralTriangle& at, const Path& path);

// X_{p/q} = D/(x_1...x_N) * sum of path weights, D the product of the
// denominators of the triangle weights.
MultiLaurent cluster_via_paths(const AncestralTriangle& at);

// F_{p/q} = sum over paths of prod_{T_i in S_gamma} y_i.
MultiLaurent f_polynomial(const AncestralTriangle& at);

// Checks the one-step and two-step F-polynomial recursions and the trailing-1
// identity against directly computed F-polynomials of the sub-fractions.
bool f_recursion_check(const ContinuedFraction& cf);

// Checks F_{(q-p)/q} = y_1...y_N * F_{p/q}(y_i^{-1}).
bool mirror_f_check(const ContinuedFraction& cf);

}  // namespace bridgecluster
