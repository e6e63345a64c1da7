#pragma once

#include <string>
#include <vector>

#include "bridgecluster/fraction.hpp"

namespace bridgecluster {

struct FullVerifyRow {
  Fraction fraction;
  bool cluster_match = false;   // path-sum X equals mutation X
  bool mirror_f = false;        // mirror F-polynomial identity
  bool recursions = false;      // one-step and two-step F recursions
  bool alexander_match = false; // specialization equals skein oracle
  bool symmetry_ok = true;      // q odd only
  bool mirror_delta_ok = true;  // q odd only
  bool symmetry_checked = false;
  bool ok() const {
    return cluster_match && mirror_f && recursions && alexander_match && symmetry_ok &&
           mirror_delta_ok;
  }
};

struct FullVerifyReport {
  Int q_max;
  std::vector<FullVerifyRow> rows;
  bool all_ok = true;
  std::string table() const;
  std::string summary() const;
};

// Runs every suite on every reduced p/q with q <= q_max: cluster expansion
// equality, mirror-F, F recursions, Alexander specialization vs skein oracle,
// and for q odd the symmetry and mirror invariance of delta. Results do not
// depend on the job count.
FullVerifyReport run_full_verify(const Int& q_max, int jobs = 1);

}  // namespace bridgecluster
