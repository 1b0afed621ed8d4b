#pragma once

// Nilpotent adjoint orbits of the classical real forms: admissible labels
// (partitions, possibly with signed splits), closed dimension formulas, and
// component counts of the orbit sets attached to one label.

#include <algorithm>
#include <optional>
#include <vector>

#include "nilorb/partition.hpp"
#include "nilorb/realform.hpp"

namespace nilorb {

// Split flavor used by a classical family's orbit labels; families labelled
// by plain partitions return nullopt.
inline std::optional<FineFlavor> label_flavor(Family f) {
  switch (f) {
    case Family::SU: return FineFlavor::All;
    case Family::SO: return FineFlavor::OddOnly;       // base symmetric
    case Family::SP_R: return FineFlavor::EvenOnly;    // base skew-symmetric
    case Family::SP_H: return FineFlavor::OddOnly;     // Hermitian type
    case Family::USTAR_H: return FineFlavor::EvenOnly; // skew-Hermitian type
    default: return std::nullopt;
  }
}

// Base-partition admissibility for a family (ignoring splits/signature).
inline bool base_admissible(Family f, const Partition& base) {
  switch (f) {
    case Family::SL_R:
    case Family::SL_H:
    case Family::SL_C:
    case Family::SU:
      return true;
    case Family::SO:
    case Family::SO_C:
      return base.is_symmetric();
    case Family::SP_R:
    case Family::SP_C:
      return base.is_skew_symmetric();
    case Family::SP_H:
    case Family::USTAR_H:
      return true;
    default:
      return false;
  }
}

// One classification record: an orbit label together with the number of
// actual orbits it stands for and their common dimension.
struct OrbitRecord {
  RealFormId form;
  Partition partition;                  // base partition
  std::optional<FinePartition> fine;    // present for signature-labelled families
  int component_count = 1;
  // dim_value is a real dimension for the real families and a complex
  // dimension for sl(n,C)/so(n,C)/sp(n,C).
  long dim_value = 0;

  std::string label() const {
    return fine ? nilorb::to_string(*fine) : nilorb::to_string(partition);
  }
};

// Dimension of the orbits labelled by `base` (split-independent).
inline long orbit_dimension(const RealFormId& id, const Partition& base) {
  const long n = id.n;
  const long tss = base.transpose_square_sum();
  const long odd = base.odd_multiplicity_sum();
  switch (id.family) {
    case Family::SL_R:
    case Family::SU:
    case Family::SL_C:
      return n * n - tss;
    case Family::SL_H:
      return 4 * (n * n - tss);
    case Family::SO:
    case Family::SO_C:
      return (n * n - n - tss + odd) / 2;
    case Family::SP_R:
    case Family::SP_C:
      return (n * n + n - tss - odd) / 2;
    case Family::SP_H:
      return 2 * n * n + n - 2 * tss - odd;
    case Family::USTAR_H:
      return 2 * n * n - n - 2 * tss + odd;
    default:
      throw validation_error("orbit_dimension: not a classical family");
  }
}

// Number of orbits sharing one label.
inline int component_count(const RealFormId& id, const Partition& base) {
  switch (id.family) {
    case Family::SL_R:
    case Family::SO_C: {
      for (auto [d, m] : base.multiplicities())
        if (d % 2 != 0 && m > 0) return 1;
      return 2;
    }
    default:
      return 1;
  }
}

inline int component_count(const RealFormId& id, const FinePartition& fine) {
  if (id.family != Family::SO) return 1;
  bool has_odd = false;
  for (auto [d, m] : fine.base().multiplicities())
    if (d % 2 != 0 && m > 0) has_odd = true;
  if (!has_odd) return 4;
  // Two orbits exactly when one of the two alternating sign patterns on the
  // odd part sizes is realized: p_d = 0 at d = 1 mod 4 and q_d = 0 at
  // d = 3 mod 4, or the same with p and q exchanged.
  bool pat1 = true, pat2 = true;
  for (auto [d, pq] : fine.splits()) {
    if (d % 2 == 0) continue;
    auto [p, q] = pq;
    if (d % 4 == 1) {
      if (p != 0) pat1 = false;
      if (q != 0) pat2 = false;
    } else {
      if (q != 0) pat1 = false;
      if (p != 0) pat2 = false;
    }
  }
  return (pat1 || pat2) ? 2 : 1;
}

// Signature constraint carried by the labels of a signature family.
inline std::optional<int> required_signature(const RealFormId& id) {
  switch (id.family) {
    case Family::SU:
    case Family::SO:
    case Family::SP_H:
      return id.p - id.q;
    default:
      return std::nullopt;
  }
}

// Checks a caller-supplied label against the family's admissibility rules.
inline void validate_label(const RealFormId& id, const FinePartition& fine) {
  if (!base_admissible(id.family, fine.base()))
    throw validation_error("partition fails the family's parity constraint");
  const auto flavor = label_flavor(id.family);
  if (!flavor) throw validation_error("family is labelled by plain partitions");
  if (fine.flavor() != *flavor)
    throw validation_error("label splits the wrong part sizes for this family");
  if (fine.base().size() != id.n)
    throw validation_error("partition size does not match the form");
  if (auto sgn = required_signature(id); sgn && fine.signature() != *sgn)
    throw validation_error("label signature does not match (p,q)");
}

inline void validate_label(const RealFormId& id, const Partition& base) {
  if (label_flavor(id.family))
    throw validation_error("family needs labels with splits");
  if (!base_admissible(id.family, base))
    throw validation_error("partition fails the family's parity constraint");
  if (base.size() != id.n) throw validation_error("partition size does not match the form");
}

// All orbit records of a classical real form, deterministically ordered:
// base partitions in descending-lexicographic order, then splits with p_d
// descending (larger part sizes varying slowest).
inline std::vector<OrbitRecord> enumerate_orbits(const RealFormId& raw, bool strict = true) {
  const RealFormId id = normalize(raw);
  if (id.family == Family::Exceptional)
    throw validation_error("enumerate_orbits handles classical families only");
  validate(id, strict);
  std::vector<OrbitRecord> out;
  auto bases = enumerate_partitions(id.n);
  std::sort(bases.begin(), bases.end(),
            [](const Partition& a, const Partition& b) { return a.precedes(b); });
  const auto flavor = label_flavor(id.family);
  for (const auto& base : bases) {
    if (base.is_trivial()) continue;  // the zero orbit is excluded throughout
    if (!base_admissible(id.family, base)) continue;
    const long dim = orbit_dimension(id, base);
    if (!flavor) {
      out.push_back({id, base, std::nullopt, component_count(id, base), dim});
      continue;
    }
    for (const auto& fine : enumerate_fine(base, *flavor)) {
      if (auto sgn = required_signature(id); sgn && fine.signature() != *sgn) continue;
      out.push_back({id, base, fine, component_count(id, fine), dim});
    }
  }
  return out;
}

// Total number of orbits (components counted individually).
inline long total_orbit_count(const std::vector<OrbitRecord>& records) {
  long c = 0;
  for (const auto& r : records) c += r.component_count;
  return c;
}

// Complexification data: the complex family containing the form and the
// partition labelling the ambient complex nilpotent orbit.
struct ComplexParent {
  RealFormId form;
  Partition partition;
};

inline ComplexParent complex_parent(const RealFormId& id, const Partition& base) {
  auto doubled = [&]() {
    std::map<int, int> m;
    for (auto [d, mult] : base.multiplicities()) m[d] = 2 * mult;
    return Partition::from_multiplicities(m);
  };
  switch (id.family) {
    case Family::SL_R:
    case Family::SU:
      return {sl_c(id.n), base};
    case Family::SL_H:
      return {sl_c(2 * id.n), doubled()};
    case Family::SO:
      return {so_c(id.n), base};
    case Family::SP_R:
      return {sp_c(id.n), base};
    case Family::SP_H:
      return {sp_c(2 * id.n), doubled()};
    case Family::USTAR_H:
      return {so_c(2 * id.n), doubled()};
    default:
      throw validation_error("complex_parent: not a real classical family");
  }
}

}  // namespace nilorb
