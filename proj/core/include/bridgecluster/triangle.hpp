#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bridgecluster/fraction.hpp"

namespace bridgecluster {

enum class Orientation { left, right };

inline char orientation_letter(Orientation o) { return o == Orientation::right ? 'R' : 'L'; }

// T_i sits on its working edge (left_v, right_v); apex_v is the mediant.
struct Triangle {
  int left_v;
  int right_v;
  int apex_v;
  Orientation orient;
  int fan;           // 1-based fan index k
  int index_in_fan;  // 1-based position from the bottom of the fan
};

struct Fan {
  int first_triangle = -1;  // 0-based index into tris, -1 when empty
  int size = 0;
  // Edge shared with the previous fan (the base edge when fan 1 is empty);
  // fan 1 itself carries no bottom edge.
  std::optional<std::pair<int, int>> bottom_edge;
};

// The labeled triangle strip of a continued fraction, with an exact planar
// embedding: vertex v sits at (coord_x[v]/scale, coord_y[v]/scale), 0/1 at
// (0,0), 1/1 at (1,0) and the apex at (1/2,1). Left-chain vertices lie on the
// segment from 0/1 to the apex, right-chain vertices on the one from 1/1.
struct AncestralTriangle {
  ContinuedFraction cf;
  std::vector<Fraction> labels;
  std::vector<long long> coord_x;
  std::vector<long long> coord_y;
  long long scale = 1;
  std::vector<Triangle> tris;  // T_1..T_N at indices 0..N-1
  std::vector<Fan> fans;       // F_1..F_n at indices 0..n-1
  int base_left = 0;
  int base_right = 1;
  int apex = -1;
  std::vector<int> left_chain;   // 0/1 up to the apex, inclusive
  std::vector<int> right_chain;  // 1/1 up to the apex, inclusive
  // Neighbors of strictly smaller denominator, sorted by (denominator,
  // numerator); this is the path-step relation.
  std::vector<std::vector<int>> down_neighbors;

  std::size_t triangle_count() const { return tris.size(); }
  std::size_t vertex_count() const { return labels.size(); }
  const Fraction& apex_label() const { return labels[apex]; }

  static std::pair<int, int> edge_key(int u, int v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
  }
  bool has_edge(int u, int v) const;
  const std::vector<int>& triangles_of_edge(int u, int v) const;

  std::map<std::pair<int, int>, std::vector<int>> edge_triangles;
};

// Builds AT(p/q) from a continued fraction with value strictly inside (0,1).
AncestralTriangle build_triangle(const ContinuedFraction& cf);

// The mirror rule without trailing-1 normalization; builds the strip that is
// the exact geometric mirror image ([2] maps to [1,1], not back to [2]).
ContinuedFraction mirror_raw(const ContinuedFraction& cf);

// Builds AT(p/q) and AT((q-p)/q) and checks that orientations reverse and
// every label r/s corresponds to (s-r)/s.
bool mirror_structure_check(const ContinuedFraction& cf);

// Per-vertex mod-2 labels; every triangle carries all three classes.
std::vector<Parity> vertex_parities(const AncestralTriangle& at);

// Deterministic SVG rendering; overlays are vertex sequences drawn as bold
// polylines (first overlay dark red, later ones dark blue).
std::string to_svg(const AncestralTriangle& at,
                   const std::vector<std::vector<int>>& overlays = {});

}  // namespace bridgecluster
