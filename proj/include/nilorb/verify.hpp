#pragma once

// Full oracle sweep: for every classical form up to a size bound and every
// enumerated orbit label, rebuild the orbit from an explicit matrix model
// and compare centralizer-based dimensions and the trace-form compactness
// verdict against the closed formulas and criteria.

#include <functional>
#include <string>
#include <vector>

#include "nilorb/oracle.hpp"
#include "nilorb/selfdual.hpp"

namespace nilorb {

struct VerifyIssue {
  RealFormId form;
  std::string label;
  std::string what;
};

struct VerifyReport {
  long labels_checked = 0;
  std::vector<VerifyIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Classical forms with n bounded by max_n (quaternionic ones by max_quat),
// restricted to the sizes the classification lists.
inline std::vector<RealFormId> verification_forms(int max_n, int max_quat) {
  std::vector<RealFormId> forms;
  for (int n = 2; n <= max_n; ++n) forms.push_back(sl_r(n));
  for (int n = 2; n <= max_n; ++n) forms.push_back(sl_c(n));
  for (int n = 2; n <= max_quat; ++n) forms.push_back(sl_h(n));
  for (int n = 2; n <= max_n; ++n)
    for (int q = 0; 2 * q <= n; ++q) forms.push_back(su(n - q, q));
  for (int n = 3; n <= max_n; n == 3 ? n = 5 : ++n)
    for (int q = 0; 2 * q <= n; ++q) forms.push_back(so(n - q, q));
  for (int n = 3; n <= max_n; n == 3 ? n = 5 : ++n) forms.push_back(so_c(n));
  for (int n = 2; n <= max_n; n += 2) forms.push_back(sp_r(n));
  for (int n = 2; n <= max_n; n += 2) forms.push_back(sp_c(n));
  for (int n = 1; n <= max_quat; ++n)
    for (int q = 0; 2 * q <= n; ++q) forms.push_back(sp_h(n - q, q));
  for (int n = 2; n <= max_quat; ++n) forms.push_back(ustar_h(n));
  return forms;
}

inline VerifyReport verify_forms(const std::vector<RealFormId>& forms,
                                 const std::function<void(const std::string&)>& progress = {}) {
  VerifyReport report;
  for (const auto& form : forms) {
    if (progress) progress(to_string(form));
    for (const auto& rec : enumerate_orbits(form)) {
      ++report.labels_checked;
      auto issue = [&](const std::string& what) {
        report.issues.push_back({form, rec.label(), what});
      };
      MatrixModel model;
      try {
        model = build_model(form, rec);
      } catch (const std::exception& ex) {
        issue(std::string("model construction failed: ") + ex.what());
        continue;
      }
      // The model with no commutation constraints is the whole algebra.
      const long alg = centralizer_dim(model, CentralizeSet::none());
      if (alg != real_dimension(form)) issue("algebra dimension mismatch");
      const long ze = centralizer_dim(model, CentralizeSet::just_e());
      const long oracle_orbit_real = real_dimension(form) - ze;
      const bool complex_family = is_complex_family(form.family);
      const long oracle_dim = complex_family ? oracle_orbit_real / 2 : oracle_orbit_real;
      if (complex_family && oracle_orbit_real % 2 != 0)
        issue("complex orbit has odd real dimension");
      if (oracle_dim != rec.dim_value) {
        issue("dimension formula " + std::to_string(rec.dim_value) + " != oracle " +
              std::to_string(oracle_dim));
      }
      const long zs = centralizer_dim(model, CentralizeSet::triple());
      if (zs > ze) issue("centralizer dimension increased under extra constraints");
      if (!complex_family) {
        const bool oracle_compact = compact_oracle(model);
        const bool criterion = is_compact(form, rec);
        if (oracle_compact != criterion)
          issue(std::string("compactness criterion says ") + (criterion ? "true" : "false") +
                ", trace form says " + (oracle_compact ? "true" : "false"));
      }
    }
  }
  return report;
}

inline VerifyReport verify_up_to(int max_n, int max_quat = 3,
                                 const std::function<void(const std::string&)>& progress = {}) {
  return verify_forms(verification_forms(max_n, max_quat), progress);
}

}  // namespace nilorb
