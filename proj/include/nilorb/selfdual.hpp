#pragma once

// Self-dual projectivized orbit closures: per-label compactness criteria for
// the classical real forms, the translation from real adjoint orbits to
// K-orbits on the complexified isotropy module (which halves dimensions),
// the self-dual inventories (classical and exceptional), and the join
// composition over direct sums.

#include <vector>

#include "nilorb/classical.hpp"
#include "nilorb/exceptional.hpp"

namespace nilorb {

// Compactness of the reductive Levi factor of the stabilizer, decided by
// closed per-part-size conditions.  The verdict depends only on the label;
// all components of one label share it.
inline bool is_compact(const RealFormId& raw, const OrbitRecord& rec) {
  const RealFormId id = normalize(raw);
  if (is_complex_family(id.family) || id.family == Family::Exceptional)
    throw validation_error("compactness defined for real forms only");
  const Partition& base = rec.partition;
  if (base.is_trivial()) throw validation_error("is_compact needs a nonzero orbit");
  auto split = [&](int d) { return rec.fine->split_at(d); };
  switch (id.family) {
    case Family::SL_R:
    case Family::SL_H:
      // Exactly the principal label: a single part of size n.
      return base.part_count() == 1;
    case Family::SU:
      for (auto [d, m] : base.multiplicities()) {
        auto [p, q] = split(d);
        if (p > 0 && q > 0) return false;
      }
      return true;
    case Family::SO:
      for (auto [d, m] : base.multiplicities()) {
        if (d % 2 == 0) return false;  // any even part size is fatal
        auto [p, q] = split(d);
        if (p > 0 && q > 0) return false;
      }
      return true;
    case Family::SP_R:
      for (auto [d, m] : base.multiplicities()) {
        if (d % 2 != 0) return false;
        auto [p, q] = split(d);
        if (p > 0 && q > 0) return false;
      }
      return true;
    case Family::SP_H:
      for (auto [d, m] : base.multiplicities()) {
        if (d % 2 == 0) {
          if (m > 1) return false;
        } else {
          auto [p, q] = split(d);
          if (p > 0 && q > 0) return false;
        }
      }
      return true;
    case Family::USTAR_H:
      for (auto [d, m] : base.multiplicities()) {
        if (d % 2 != 0) {
          if (m > 1) return false;
        } else {
          auto [p, q] = split(d);
          if (p > 0 && q > 0) return false;
        }
      }
      return true;
    default:
      throw validation_error("compactness defined for real forms only");
  }
}

inline bool is_compact(const RealFormId& id, const FinePartition& fine) {
  const RealFormId norm = normalize(id);
  validate_label(norm, fine);
  OrbitRecord rec{norm, fine.base(), fine, component_count(norm, fine),
                  orbit_dimension(norm, fine.base())};
  return is_compact(norm, rec);
}

inline bool is_compact(const RealFormId& id, const Partition& base) {
  const RealFormId norm = normalize(id);
  validate_label(norm, base);
  OrbitRecord rec{norm, base, std::nullopt, component_count(norm, base),
                  orbit_dimension(norm, base)};
  return is_compact(norm, rec);
}

// A K-orbit on the complexified isotropy module: the image of a real adjoint
// orbit under the orbit correspondence, or an exceptional-table row.
struct KOrbitRecord {
  RealFormId form;
  std::string label;
  int component_count = 1;
  long complex_dim = 0;            // dim_C of the K-orbit
  long g_orbit_complex_dim = 0;    // dim_C of the ambient G-orbit = 2 * complex_dim
  long projective_dim = 0;         // complex_dim - 1
  bool minus1_distinguished = false;
  bool self_dual = false;          // always equals minus1_distinguished
};

inline KOrbitRecord ks_k_orbit(const OrbitRecord& rec) {
  if (is_complex_family(rec.form.family))
    throw validation_error("the orbit correspondence applies to real forms");
  if (rec.dim_value % 2 != 0)
    throw validation_error("odd real orbit dimension cannot occur");
  KOrbitRecord k;
  k.form = rec.form;
  k.label = rec.label();
  k.component_count = rec.component_count;
  k.complex_dim = rec.dim_value / 2;
  k.g_orbit_complex_dim = rec.dim_value;
  k.projective_dim = k.complex_dim - 1;
  k.minus1_distinguished = is_compact(rec.form, rec);
  k.self_dual = k.minus1_distinguished;
  return k;
}

// All K-orbit records of a classical real (non-complex) form.
inline std::vector<KOrbitRecord> k_orbit_records(const RealFormId& id) {
  std::vector<KOrbitRecord> out;
  for (const auto& rec : enumerate_orbits(id)) out.push_back(ks_k_orbit(rec));
  return out;
}

// The self-dual inventory.  Classical real forms go through the orbit
// correspondence; exceptional forms come straight from the embedded tables
// (every listed row is self-dual).
inline std::vector<KOrbitRecord> list_selfdual(const RealFormId& raw) {
  const RealFormId id = normalize(raw);
  if (is_complex_family(id.family))
    throw validation_error(
        "complex forms carry no compactness verdict here; compose the "
        "direct-sum criterion with an external distinguished-orbit verdict");
  if (id.family == Family::Exceptional) {
    std::vector<KOrbitRecord> out;
    for (const auto& row : load_tables().rows(id)) {
      KOrbitRecord k;
      k.form = id;
      k.label = id.label + " row " + std::to_string(row.row_no);
      k.component_count = 1;
      k.complex_dim = row.dim_k_orbit;
      k.g_orbit_complex_dim = 2 * row.dim_k_orbit;
      k.projective_dim = row.dim_k_orbit - 1;
      k.minus1_distinguished = true;
      k.self_dual = true;
      out.push_back(std::move(k));
    }
    return out;
  }
  std::vector<KOrbitRecord> out;
  for (auto& k : k_orbit_records(id))
    if (k.minus1_distinguished) out.push_back(std::move(k));
  return out;
}

// Self-duality over a direct sum of stable ideals: the whole closure is
// self-dual exactly when every factor is.
inline bool compose_selfdual(const std::vector<bool>& verdicts) {
  if (verdicts.empty()) throw validation_error("compose_selfdual needs at least one verdict");
  for (bool v : verdicts)
    if (!v) return false;
  return true;
}

// Projective dimension of the join of projective varieties with the given
// projective dimensions: sum plus (count - 1).
inline long join_projective_dim(const std::vector<long>& proj_dims) {
  if (proj_dims.empty()) throw validation_error("join of nothing is undefined");
  long s = static_cast<long>(proj_dims.size()) - 1;
  for (long d : proj_dims) {
    if (d < 0) throw validation_error("projective dimensions must be nonnegative");
    s += d;
  }
  return s;
}

}  // namespace nilorb
