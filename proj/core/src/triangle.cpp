#include "bridgecluster/triangle.hpp"

#include <algorithm>
#include <sstream>

namespace bridgecluster {

namespace {

constexpr long long kMaxTriangles = 1 << 20;

std::vector<long long> checked_terms(const ContinuedFraction& cf) {
  std::vector<long long> t;
  long long total = 0;
  for (const Int& a : cf.terms) {
    if (a > kMaxTriangles) throw std::invalid_argument("continued fraction term too large");
    t.push_back(a.convert_to<long long>());
    total += t.back();
    if (total > kMaxTriangles) throw std::invalid_argument("ancestral triangle too large");
  }
  return t;
}

}  // namespace

bool AncestralTriangle::has_edge(int u, int v) const {
  return edge_triangles.count(edge_key(u, v)) > 0;
}

const std::vector<int>& AncestralTriangle::triangles_of_edge(int u, int v) const {
  auto it = edge_triangles.find(edge_key(u, v));
  if (it == edge_triangles.end()) throw internal_error("triangles_of_edge: no such edge");
  return it->second;
}

AncestralTriangle build_triangle(const ContinuedFraction& cf) {
  if (cf.terms.empty()) throw std::invalid_argument("build_triangle: empty continued fraction");
  if (!cf_value(cf).is_interior())
    throw std::invalid_argument("build_triangle: fraction must lie strictly between 0 and 1");
  std::vector<long long> terms = checked_terms(cf);

  AncestralTriangle at;
  at.cf = cf;
  at.labels.push_back(Fraction(Int(0), Int(1)));
  at.labels.push_back(Fraction(Int(1), Int(1)));

  const std::size_t n = terms.size();
  at.fans.resize(n);

  int left = 0, right = 1;
  std::vector<int> left_mediants, right_mediants;
  for (std::size_t k = 0; k < n; ++k) {
    long long fan_size = (k == 0) ? terms[0] - 1 : terms[k];
    Orientation orient = (k % 2 == 0) ? Orientation::right : Orientation::left;
    at.fans[k].size = static_cast<int>(fan_size);
    if (k > 0) at.fans[k].bottom_edge = std::make_pair(left, right);
    if (fan_size == 0) continue;
    at.fans[k].first_triangle = static_cast<int>(at.tris.size());
    for (long long i = 1; i <= fan_size; ++i) {
      int m = static_cast<int>(at.labels.size());
      at.labels.push_back(Fraction::mediant(at.labels[left], at.labels[right]));
      at.tris.push_back(Triangle{left, right, m, orient, static_cast<int>(k + 1),
                                 static_cast<int>(i)});
      if (orient == Orientation::right) {
        right_mediants.push_back(m);
        right = m;
      } else {
        left_mediants.push_back(m);
        left = m;
      }
    }
  }

  at.apex = static_cast<int>(at.labels.size()) - 1;
  if (at.apex_label() != cf_value(cf))
    throw internal_error("build_triangle: apex label mismatch");

  // The final mediant is the apex; it tops both boundary chains.
  if (!right_mediants.empty() && right_mediants.back() == at.apex) right_mediants.pop_back();
  if (!left_mediants.empty() && left_mediants.back() == at.apex) left_mediants.pop_back();

  const long long s_left = static_cast<long long>(left_mediants.size()) + 1;
  const long long s_right = static_cast<long long>(right_mediants.size()) + 1;
  const long long s = s_left * s_right;
  at.scale = 2 * s;
  at.coord_x.assign(at.labels.size(), 0);
  at.coord_y.assign(at.labels.size(), 0);
  at.coord_x[at.base_right] = 2 * s;
  at.coord_x[at.apex] = s;
  at.coord_y[at.apex] = 2 * s;
  for (std::size_t j = 0; j < left_mediants.size(); ++j) {
    at.coord_x[left_mediants[j]] = static_cast<long long>(j + 1) * s_right;
    at.coord_y[left_mediants[j]] = 2 * static_cast<long long>(j + 1) * s_right;
  }
  for (std::size_t j = 0; j < right_mediants.size(); ++j) {
    at.coord_x[right_mediants[j]] = 2 * s - static_cast<long long>(j + 1) * s_left;
    at.coord_y[right_mediants[j]] = 2 * static_cast<long long>(j + 1) * s_left;
  }

  at.left_chain.push_back(at.base_left);
  at.left_chain.insert(at.left_chain.end(), left_mediants.begin(), left_mediants.end());
  at.left_chain.push_back(at.apex);
  at.right_chain.push_back(at.base_right);
  at.right_chain.insert(at.right_chain.end(), right_mediants.begin(), right_mediants.end());
  at.right_chain.push_back(at.apex);

  for (std::size_t i = 0; i < at.tris.size(); ++i) {
    const Triangle& t = at.tris[i];
    for (auto [u, v] : {std::make_pair(t.left_v, t.right_v),
                        std::make_pair(t.left_v, t.apex_v),
                        std::make_pair(t.right_v, t.apex_v)})
      at.edge_triangles[AncestralTriangle::edge_key(u, v)].push_back(static_cast<int>(i));
  }

  at.down_neighbors.assign(at.labels.size(), {});
  for (const auto& [edge, tris] : at.edge_triangles) {
    auto [u, v] = edge;
    if (at.labels[u].den == at.labels[v].den) continue;  // only the base edge
    if (at.labels[u].den > at.labels[v].den)
      at.down_neighbors[u].push_back(v);
    else
      at.down_neighbors[v].push_back(u);
  }
  for (auto& nbrs : at.down_neighbors)
    std::sort(nbrs.begin(), nbrs.end(), [&](int a, int b) {
      if (at.labels[a].den != at.labels[b].den) return at.labels[a].den < at.labels[b].den;
      return at.labels[a].num < at.labels[b].num;
    });

  return at;
}

ContinuedFraction mirror_raw(const ContinuedFraction& cf) {
  if (cf.terms.empty()) throw std::invalid_argument("mirror_raw: empty continued fraction");
  std::vector<Int> t;
  if (cf.terms[0] > 1) {
    t.emplace_back(1);
    t.push_back(cf.terms[0] - 1);
    t.insert(t.end(), cf.terms.begin() + 1, cf.terms.end());
  } else {
    if (cf.terms.size() < 2) throw std::invalid_argument("mirror_raw: [1] has no mirror");
    t.push_back(cf.terms[1] + 1);
    t.insert(t.end(), cf.terms.begin() + 2, cf.terms.end());
  }
  return ContinuedFraction(std::move(t));
}

bool mirror_structure_check(const ContinuedFraction& cf) {
  AncestralTriangle at = build_triangle(cf);
  AncestralTriangle mt = build_triangle(mirror_raw(cf));
  if (at.tris.size() != mt.tris.size()) return false;
  for (std::size_t i = 0; i < at.tris.size(); ++i) {
    const Triangle& t = at.tris[i];
    const Triangle& m = mt.tris[i];
    if (t.orient == m.orient) return false;
    // mirroring swaps the two base corners of the working edge
    if (mt.labels[m.left_v] != at.labels[t.right_v].complement()) return false;
    if (mt.labels[m.right_v] != at.labels[t.left_v].complement()) return false;
    if (mt.labels[m.apex_v] != at.labels[t.apex_v].complement()) return false;
  }
  return true;
}

std::vector<Parity> vertex_parities(const AncestralTriangle& at) {
  std::vector<Parity> p;
  p.reserve(at.labels.size());
  for (const Fraction& f : at.labels) p.push_back(parity(f));
  for (const Triangle& t : at.tris) {
    bool seen[3] = {false, false, false};
    for (int v : {t.left_v, t.right_v, t.apex_v}) seen[static_cast<int>(p[v])] = true;
    if (!seen[0] || !seen[1] || !seen[2])
      throw internal_error("vertex_parities: triangle missing a parity class");
  }
  return p;
}

namespace {

// margin + t * span in hundredths of a pixel, from the exact rational t
std::string svg_coord(long long num, long long den, long long span, long long margin) {
  long long hundredths = margin * 100 + (num * span * 100 + den / 2) / den;
  std::ostringstream os;
  os << hundredths / 100 << "." << (hundredths % 100 < 10 ? "0" : "")
     << hundredths % 100;
  return os.str();
}

}  // namespace

std::string to_svg(const AncestralTriangle& at, const std::vector<std::vector<int>>& overlays) {
  const long long width = 800, height = 640, margin = 60;
  const long long span_x = width - 2 * margin;
  const long long span_y = height - 2 * margin;
  auto px = [&](int v) { return svg_coord(at.coord_x[v], at.scale, span_x, margin); };
  auto py = [&](int v) {
    return svg_coord(at.scale - at.coord_y[v], at.scale, span_y, margin);
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
     << "\">\n";
  for (std::size_t i = 0; i < at.tris.size(); ++i) {
    const Triangle& t = at.tris[i];
    os << "  <polygon points=\"";
    bool first = true;
    for (int v : {t.left_v, t.right_v, t.apex_v}) {
      if (!first) os << " ";
      os << px(v) << "," << py(v);
      first = false;
    }
    os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (std::size_t k = 0; k < overlays.size(); ++k) {
    os << "  <polyline points=\"";
    for (std::size_t i = 0; i < overlays[k].size(); ++i) {
      if (i) os << " ";
      os << px(overlays[k][i]) << "," << py(overlays[k][i]);
    }
    os << "\" fill=\"none\" stroke=\"" << (k == 0 ? "#aa0000" : "#0000aa")
       << "\" stroke-width=\"3\"/>\n";
  }
  for (std::size_t v = 0; v < at.labels.size(); ++v) {
    os << "  <text x=\"" << px(static_cast<int>(v)) << "\" y=\"" << py(static_cast<int>(v))
       << "\" font-size=\"14\" text-anchor=\"middle\" dy=\"-4\">" << at.labels[v].str()
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace bridgecluster
