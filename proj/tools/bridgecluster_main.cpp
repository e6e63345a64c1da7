// Command line driver: continued fractions, ancestral triangles, cluster
// variables and Alexander polynomials of two-bridge links.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "bridgecluster/cluster.hpp"
#include "bridgecluster/knot.hpp"
#include "bridgecluster/paths.hpp"
#include "bridgecluster/verify.hpp"

using namespace bridgecluster;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string format = "text";
  std::string output;
  std::string fraction;
  std::string cf_literal;
  long long max_q = 1000;
  long long max_n = 60;
};

long long default_max_n() {
  if (const char* env = std::getenv("BRIDGECLUSTER_MAX_N")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed BRIDGECLUSTER_MAX_N='" << env << "'\n";
  }
  return 60;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool takes_fraction) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "latex"}))
      ->capture_default_str();
  cmd->add_option("--output", opts.output, "Write output to a file instead of stdout");
  if (takes_fraction) {
    cmd->add_option("fraction", opts.fraction, "Fraction p/q with 0 < p < q, reduced");
    cmd->add_option("--cf", opts.cf_literal, "Continued fraction terms a1,a2,...");
    cmd->add_option("--max-q", opts.max_q, "Largest accepted denominator")
        ->capture_default_str();
    cmd->add_option("--max-n", opts.max_n, "Largest accepted triangle count")
        ->capture_default_str();
  }
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + opts.output + "'");
  out << text;
}

ContinuedFraction resolve_cf(const CommonOpts& opts) {
  if (!opts.fraction.empty() && !opts.cf_literal.empty())
    throw std::invalid_argument("give either a fraction or --cf, not both");
  ContinuedFraction cf;
  if (!opts.cf_literal.empty())
    cf = parse_cf(opts.cf_literal);
  else if (!opts.fraction.empty())
    cf = cf_expand(parse_fraction(opts.fraction));
  else
    throw std::invalid_argument("provide a fraction p/q or --cf a1,a2,...");
  Fraction f = cf_value(cf);
  if (f.den > opts.max_q)
    throw std::invalid_argument("denominator " + f.den.str() + " exceeds --max-q = " +
                                std::to_string(opts.max_q));
  return cf;
}

void check_triangle_size(const CommonOpts& opts, const ContinuedFraction& cf) {
  Int n = cf.triangle_count();
  if (n > opts.max_n)
    throw std::invalid_argument("triangle count " + n.str() + " exceeds --max-n = " +
                                std::to_string(opts.max_n) +
                                " (override with --max-n or BRIDGECLUSTER_MAX_N)");
  if (n > 40)
    std::cerr << "warning: " << n
              << " triangles; path enumeration grows exponentially beyond N = 40\n";
}

std::vector<long long> cf_as_ints(const ContinuedFraction& cf) {
  std::vector<long long> v;
  for (const Int& a : cf.terms) v.push_back(a.convert_to<long long>());
  return v;
}

// (numerator)/(monomial) display for Laurent polynomials
std::string fraction_form(const MultiLaurent& f, bool latex) {
  const std::size_t w = 2 * f.pairs();
  if (f.is_zero()) return "0";
  std::vector<int> den(w, 0);
  for (const auto& [e, c] : f.terms())
    for (std::size_t i = 0; i < w; ++i) den[i] = std::max(den[i], -e[i]);
  bool trivial = true;
  for (int d : den) trivial = trivial && d == 0;
  if (trivial) return latex ? f.latex() : f.str();
  MultiLaurent den_mono = MultiLaurent::monomial(f.pairs(), den);
  MultiLaurent num = f * den_mono;
  std::string ds = latex ? den_mono.latex() : den_mono.str();
  std::string ns = latex ? num.latex() : num.str();
  return "(" + ns + ") / (" + ds + ")";
}

std::string signs_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i] > 0 ? "+1" : "-1";
  }
  return s + ")";
}

std::string d_str(int d_times_2) {
  if (d_times_2 % 2 == 0) return std::to_string(d_times_2 / 2);
  return std::to_string(d_times_2) + "/2";
}

std::string path_str(const AncestralTriangle& at, const Path& p, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += sep;
    s += at.labels[p[i]].str();
  }
  return s;
}

json hl_json(const HalfLaurent& h) {
  json j;
  to_json(j, h);
  return j;
}

json ml_json(const MultiLaurent& m) {
  json j;
  to_json(j, m);
  return j;
}

// ---- cf ---------------------------------------------------------------

void run_cf(const CommonOpts& opts) {
  ContinuedFraction cf = resolve_cf(opts);
  Fraction f = cf_value(cf);
  ContinuedFraction canonical = cf_canonicalize(cf);
  ContinuedFraction alternate = cf_expand(f, CfVariant::alternate);
  ContinuedFraction mirrored = mirror(canonical);
  Fraction fm = f.complement();

  std::ostringstream os;
  if (opts.format == "json") {
    json j = {{"fraction", f.str()},
              {"canonical", cf_as_ints(canonical)},
              {"alternate", cf_as_ints(alternate)},
              {"mirror", {{"cf", cf_as_ints(mirrored)}, {"fraction", fm.str()}}},
              {"parity", parity_str(parity(f))}};
    os << j.dump(2) << "\n";
  } else if (opts.format == "latex") {
    os << f.num << "/" << f.den << " = " << canonical.str() << " = " << alternate.str()
       << ", \\quad " << fm.num << "/" << fm.den << " = " << mirrored.str() << "\n";
  } else {
    os << "fraction:  " << f.str() << "\n";
    os << "canonical: " << canonical.str() << "\n";
    os << "alternate: " << alternate.str() << "\n";
    os << "mirror:    " << mirrored.str() << " = " << fm.str() << "\n";
    os << "parity:    " << parity_str(parity(f)) << "\n";
  }
  emit(opts, os.str());
}

// ---- triangle -----------------------------------------------------------

void run_triangle(const CommonOpts& opts, const std::string& svg_path, bool seifert) {
  ContinuedFraction cf = resolve_cf(opts);
  check_triangle_size(opts, cf);
  AncestralTriangle at = build_triangle(cf);
  Path sp;
  if (seifert) sp = seifert_path(at);

  if (!svg_path.empty()) {
    std::ofstream svg(svg_path, std::ios::binary);
    if (!svg) throw std::invalid_argument("cannot open svg file '" + svg_path + "'");
    std::vector<std::vector<int>> overlays;
    if (seifert) overlays.push_back(sp);
    svg << to_svg(at, overlays);
  }

  std::ostringstream os;
  if (opts.format == "json") {
    json tris = json::array();
    for (std::size_t i = 0; i < at.tris.size(); ++i) {
      const Triangle& t = at.tris[i];
      tris.push_back({{"index", i + 1},
                      {"orientation", std::string(1, orientation_letter(t.orient))},
                      {"fan", t.fan},
                      {"index_in_fan", t.index_in_fan},
                      {"vertices",
                       {at.labels[t.left_v].str(), at.labels[t.right_v].str(),
                        at.labels[t.apex_v].str()}}});
    }
    json fans = json::array();
    for (const Fan& fan : at.fans) {
      json jf = {{"size", fan.size}};
      if (fan.bottom_edge)
        jf["bottom_edge"] = {at.labels[fan.bottom_edge->first].str(),
                             at.labels[fan.bottom_edge->second].str()};
      else
        jf["bottom_edge"] = nullptr;
      fans.push_back(std::move(jf));
    }
    json j = {{"fraction", at.apex_label().str()},
              {"cf", cf_as_ints(cf)},
              {"triangles", tris},
              {"fans", fans}};
    if (seifert) {
      json edges = json::array();
      for (std::size_t i = 0; i + 1 < sp.size(); ++i)
        edges.push_back({at.labels[sp[i]].str(), at.labels[sp[i + 1]].str()});
      j["seifert_path"] = edges;
    }
    os << j.dump(2) << "\n";
  } else {
    os << "AT(" << at.apex_label().str() << "), cf " << cf.str() << ": "
       << at.triangle_count() << " triangle(s), " << at.fans.size() << " fan(s)\n";
    for (std::size_t i = 0; i < at.tris.size(); ++i) {
      const Triangle& t = at.tris[i];
      os << "T" << i + 1 << " " << orientation_letter(t.orient) << " fan " << t.fan << "."
         << t.index_in_fan << "  (" << at.labels[t.left_v].str() << ", "
         << at.labels[t.right_v].str() << "; " << at.labels[t.apex_v].str() << ")\n";
    }
    for (std::size_t k = 0; k < at.fans.size(); ++k) {
      os << "F" << k + 1 << ": " << at.fans[k].size << " triangle(s)";
      if (at.fans[k].bottom_edge)
        os << ", bottom edge " << at.labels[at.fans[k].bottom_edge->first].str() << "-"
           << at.labels[at.fans[k].bottom_edge->second].str();
      os << "\n";
    }
    if (seifert) os << "Seifert path: " << path_str(at, sp, " -> ") << "\n";
  }
  emit(opts, os.str());
}

// ---- cluster ------------------------------------------------------------

void run_cluster(const CommonOpts& opts, const std::string& method, bool trace) {
  ContinuedFraction cf = resolve_cf(opts);
  check_triangle_size(opts, cf);
  AncestralTriangle at = build_triangle(cf);

  MultiLaurent x(at.triangle_count());
  bool agree = true;
  if (method == "paths") {
    x = cluster_via_paths(at);
  } else if (method == "mutation") {
    x = cluster_variable(cf);
  } else {
    MultiLaurent via_paths = cluster_via_paths(at);
    x = cluster_variable(cf);
    agree = via_paths == x;
    if (!agree)
      throw internal_error("path sum and mutation sequence disagree for " +
                           at.apex_label().str() + ": " + via_paths.str() + " vs " +
                           x.str());
  }
  MultiLaurent f = f_from_cluster(x);

  std::vector<Seed> steps;
  if (trace) {
    Seed s = initial_seed(initial_quiver(at));
    steps.push_back(s);
    for (int k = 1; k <= static_cast<int>(at.triangle_count()); ++k) {
      s = mutate(s, k);
      steps.push_back(s);
    }
  }

  std::ostringstream os;
  if (opts.format == "json") {
    json j = {{"fraction", at.apex_label().str()},
              {"cf", cf_as_ints(cf)},
              {"method", method},
              {"x", ml_json(x)},
              {"f", ml_json(f)}};
    if (method == "both") j["methods_agree"] = agree;
    if (trace) {
      json jsteps = json::array();
      for (const Seed& s : steps) jsteps.push_back(seed_to_json(s));
      j["trace"] = jsteps;
    }
    os << j.dump(2) << "\n";
  } else if (opts.format == "latex") {
    os << "X_{" << at.apex_label().str() << "} = " << x.latex() << "\n";
    os << "F_{" << at.apex_label().str() << "} = " << f.latex() << "\n";
  } else {
    os << "fraction: " << at.apex_label().str() << ", cf " << cf.str() << ", N = "
       << at.triangle_count() << "\n";
    os << "X = " << fraction_form(x, false) << "\n";
    os << "F = " << f.str() << "\n";
    if (method == "both") os << "path sum and mutation sequence agree\n";
    if (trace) {
      for (std::size_t i = 0; i < steps.size(); ++i) {
        os << "step " << i << ":\n";
        for (std::size_t j = 0; j < steps[i].x.size(); ++j)
          os << "  x" << j + 1 << " = " << fraction_form(steps[i].x[j], false) << "\n";
        os << "  y = (";
        for (std::size_t j = 0; j < steps[i].y.size(); ++j)
          os << (j ? ", " : "") << steps[i].y[j].str();
        os << ")\n";
        os << "  quiver: " << steps[i].quiver.str() << "\n";
      }
    }
  }
  emit(opts, os.str());
}

// ---- alexander ----------------------------------------------------------

void run_alexander(const CommonOpts& opts, const std::string& method) {
  ContinuedFraction cf = resolve_cf(opts);
  check_triangle_size(opts, cf);

  std::ostringstream os;
  if (method == "skein") {
    HalfLaurent delta = alexander_skein_oracle(cf);
    if (opts.format == "json") {
      json j = {{"fraction", cf_value(cf).str()},
                {"cf", cf_as_ints(cf)},
                {"method", "skein"},
                {"alexander_u_poly", hl_json(delta)}};
      os << j.dump(2) << "\n";
    } else if (opts.format == "latex") {
      os << "\\Delta_{" << cf_value(cf).str() << "} = " << delta.latex() << "\n";
    } else {
      os << "fraction: " << cf_value(cf).str() << ", cf " << cf.str() << "\n";
      os << "Delta (skein) = " << delta.str() << "\n";
    }
    emit(opts, os.str());
    return;
  }

  AlexanderResult r = alexander_specialized(cf);
  bool oracle_match = true;
  HalfLaurent skein;
  if (method == "both") {
    skein = alexander_skein_oracle(cf);
    oracle_match = skein == r.delta;
    if (!oracle_match)
      throw internal_error("specialization and skein oracle disagree for " +
                           cf_value(cf).str() + ": " + r.delta.str() + " vs " +
                           skein.str());
  }

  if (opts.format == "json") {
    os << alexander_to_json(r, oracle_match).dump(2) << "\n";
  } else if (opts.format == "latex") {
    os << "\\Delta_{" << cf_value(cf).str() << "} = " << r.delta.latex() << "\n";
  } else {
    AncestralTriangle at = build_triangle(cf);
    os << "fraction: " << cf_value(cf).str() << ", cf " << cf.str() << "\n";
    os << "Delta   = " << r.delta.str() << "\n";
    os << "d       = " << d_str(r.d_times_2) << "\n";
    os << "s       = " << (r.s > 0 ? "+1" : "-1") << "\n";
    os << "t-signs = " << signs_str(r.seifert.t) << "\n";
    os << "e-signs = " << signs_str(r.seifert.e) << "\n";
    os << "F-hat   = " << r.f_specialized.str() << "\n";
    os << "Seifert path: " << path_str(at, r.seifert.path, " -> ") << "\n";
    if (method == "both") os << "skein oracle agrees\n";
  }
  emit(opts, os.str());
}

// ---- verify ---------------------------------------------------------------

int run_verify(const CommonOpts& opts, long long q_max, int jobs) {
  FullVerifyReport report = run_full_verify(Int(q_max), jobs);
  std::ostringstream os;
  if (opts.format == "json") {
    json rows = json::array();
    for (const FullVerifyRow& r : report.rows) {
      json jr = {{"fraction", r.fraction.str()},
                 {"cluster_match", r.cluster_match},
                 {"mirror_f", r.mirror_f},
                 {"recursions", r.recursions},
                 {"alexander_match", r.alexander_match}};
      if (r.symmetry_checked) {
        jr["symmetric"] = r.symmetry_ok;
        jr["mirror_delta"] = r.mirror_delta_ok;
      }
      rows.push_back(std::move(jr));
    }
    json j = {{"q_max", q_max}, {"all_ok", report.all_ok}, {"rows", rows}};
    os << j.dump(2) << "\n";
  } else {
    os << report.table();
  }
  emit(opts, os.str());
  if (!report.all_ok) throw internal_error("verification failed; see report");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cluster variables and Alexander polynomials of two-bridge links"};
  app.require_subcommand(1);

  CommonOpts cf_opts, tri_opts, clu_opts, alex_opts, ver_opts;
  cf_opts.max_n = tri_opts.max_n = clu_opts.max_n = alex_opts.max_n = default_max_n();

  CLI::App* cmd_cf = app.add_subcommand("cf", "Continued fraction expansions and mirror");
  add_common(cmd_cf, cf_opts, true);
  cmd_cf->callback([&] { run_cf(cf_opts); });

  std::string svg_path;
  bool seifert = false;
  CLI::App* cmd_tri = app.add_subcommand("triangle", "Ancestral triangle structure and SVG");
  add_common(cmd_tri, tri_opts, true);
  cmd_tri->add_option("--svg", svg_path, "Write an SVG rendering to this file");
  cmd_tri->add_flag("--seifert", seifert, "Mark the Seifert path");
  cmd_tri->callback([&] { run_triangle(tri_opts, svg_path, seifert); });

  std::string clu_method = "both";
  bool trace = false;
  CLI::App* cmd_clu =
      app.add_subcommand("cluster", "Cluster variable X and F-polynomial");
  add_common(cmd_clu, clu_opts, true);
  cmd_clu->add_option("--method", clu_method, "paths, mutation or both")
      ->check(CLI::IsMember({"paths", "mutation", "both"}))
      ->capture_default_str();
  cmd_clu->add_flag("--trace", trace, "Dump every intermediate seed");
  cmd_clu->callback([&] { run_cluster(clu_opts, clu_method, trace); });

  std::string alex_method = "spec";
  CLI::App* cmd_alex = app.add_subcommand("alexander", "Alexander polynomial");
  add_common(cmd_alex, alex_opts, true);
  cmd_alex->add_option("--method", alex_method, "spec, skein or both")
      ->check(CLI::IsMember({"spec", "skein", "both"}))
      ->capture_default_str();
  cmd_alex->callback([&] { run_alexander(alex_opts, alex_method); });

  long long q_max = 25;
  int jobs = 1;
  CLI::App* cmd_ver = app.add_subcommand("verify", "Run every check up to a denominator bound");
  add_common(cmd_ver, ver_opts, false);
  cmd_ver->add_option("--q-max", q_max, "Largest denominator to check")
      ->capture_default_str();
  cmd_ver->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  cmd_ver->callback([&] { run_verify(ver_opts, q_max, jobs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
