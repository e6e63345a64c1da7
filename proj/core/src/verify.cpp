#include "bridgecluster/verify.hpp"

#include <sstream>
#include <thread>

#include "bridgecluster/cluster.hpp"
#include "bridgecluster/knot.hpp"
#include "bridgecluster/paths.hpp"

namespace bridgecluster {

std::string FullVerifyReport::table() const {
  std::ostringstream os;
  os << "fraction   X(paths)=X(mut)  mirror-F  recursions  spec=skein  symmetric  mirror\n";
  for (const FullVerifyRow& r : rows) {
    std::string h = r.fraction.str();
    h.resize(std::max<std::size_t>(h.size(), 10), ' ');
    auto mark = [](bool b) { return b ? "ok  " : "FAIL"; };
    os << h << " " << mark(r.cluster_match) << "             " << mark(r.mirror_f) << "      "
       << mark(r.recursions) << "        " << mark(r.alexander_match) << "        "
       << (r.symmetry_checked ? mark(r.symmetry_ok) : "-   ") << "       "
       << (r.symmetry_checked ? mark(r.mirror_delta_ok) : "-") << "\n";
  }
  os << summary();
  return os.str();
}

std::string FullVerifyReport::summary() const {
  std::size_t failures = 0;
  for (const FullVerifyRow& r : rows)
    if (!r.ok()) ++failures;
  std::ostringstream os;
  os << rows.size() << " fractions checked up to q = " << q_max << ": "
     << (failures == 0 ? "all suites passed" : std::to_string(failures) + " failure(s)")
     << "\n";
  return os.str();
}

FullVerifyReport run_full_verify(const Int& q_max, int jobs) {
  if (q_max < 2) throw std::invalid_argument("run_full_verify: q_max must be at least 2");
  if (jobs < 1) throw std::invalid_argument("run_full_verify: jobs must be positive");

  std::vector<Fraction> fractions;
  for (Int q = 2; q <= q_max; ++q)
    for (Int p = 1; p < q; ++p)
      if (gcd(p, q) == 1) fractions.emplace_back(p, q);

  FullVerifyReport report;
  report.q_max = q_max;
  report.rows.resize(fractions.size());

  auto worker = [&](int job) {
    SkeinOracle oracle;
    for (std::size_t i = static_cast<std::size_t>(job); i < fractions.size();
         i += static_cast<std::size_t>(jobs)) {
      const Fraction& f = fractions[i];
      FullVerifyRow row;
      row.fraction = f;
      ContinuedFraction cf = cf_expand(f);
      AncestralTriangle at = build_triangle(cf);

      row.cluster_match = cluster_via_paths(at) == cluster_variable(cf);
      row.mirror_f = mirror_f_check(cf);
      row.recursions = f_recursion_check(cf);

      AlexanderResult spec = alexander_specialized(cf);
      row.alexander_match = spec.delta == oracle.alexander(cf);
      if (f.den % 2 == 1) {
        row.symmetry_checked = true;
        row.symmetry_ok = spec.delta.symmetric();
        row.mirror_delta_ok =
            alexander_specialized(cf_expand(f.complement())).delta == spec.delta;
      }
      report.rows[i] = row;
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker, j);
    for (auto& th : threads) th.join();
  }
  for (const FullVerifyRow& r : report.rows) report.all_ok = report.all_ok && r.ok();
  return report;
}

}  // namespace bridgecluster
