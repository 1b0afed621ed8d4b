#pragma once

// Partitions in multiplicity encoding, their transposes, parity classes,
// and "fine" partitions: partitions whose parts of selected sizes carry an
// ordered split (p_d, q_d) with p_d + q_d = m_d.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilorb {

struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : validation_error {
  using validation_error::validation_error;
};

class Partition {
 public:
  Partition() = default;

  // From part sizes (any order, zero parts rejected).
  static Partition from_parts(const std::vector<int>& parts) {
    Partition p;
    for (int d : parts) {
      if (d <= 0) throw validation_error("partition parts must be positive");
      ++p.mult_[d];
    }
    return p;
  }
  static Partition from_multiplicities(const std::map<int, int>& mult) {
    Partition p;
    for (auto [d, m] : mult) {
      if (d <= 0) throw validation_error("partition parts must be positive");
      if (m < 0) throw validation_error("multiplicities must be nonnegative");
      if (m > 0) p.mult_[d] = m;
    }
    return p;
  }

  const std::map<int, int>& multiplicities() const { return mult_; }
  int multiplicity(int d) const {
    auto it = mult_.find(d);
    return it == mult_.end() ? 0 : it->second;
  }
  int size() const {  // the n being partitioned
    int n = 0;
    for (auto [d, m] : mult_) n += d * m;
    return n;
  }
  int part_count() const {
    int c = 0;
    for (auto [d, m] : mult_) c += m;
    return c;
  }
  int largest_part() const { return mult_.empty() ? 0 : mult_.rbegin()->first; }

  std::vector<int> parts_descending() const {
    std::vector<int> out;
    for (auto it = mult_.rbegin(); it != mult_.rend(); ++it)
      out.insert(out.end(), static_cast<std::size_t>(it->second), it->first);
    return out;
  }

  // Transpose (conjugate) of the Young diagram.
  Partition transpose() const {
    std::vector<int> cols;
    for (int j = 1; j <= largest_part(); ++j) {
      int len = 0;
      for (auto [d, m] : mult_)
        if (d >= j) len += m;
      cols.push_back(len);
    }
    return from_parts(cols);
  }

  // Trivial: every part equals 1 (or the partition is empty).
  bool is_trivial() const { return largest_part() <= 1; }
  // Even multiplicity at every even part size.
  bool is_symmetric() const {
    for (auto [d, m] : mult_)
      if (d % 2 == 0 && m % 2 != 0) return false;
    return true;
  }
  // Even multiplicity at every odd part size.
  bool is_skew_symmetric() const {
    for (auto [d, m] : mult_)
      if (d % 2 != 0 && m % 2 != 0) return false;
    return true;
  }

  // Sum over all part sizes d of d^2 * (multiplicity of d in the transpose).
  long transpose_square_sum() const {
    long s = 0;
    const Partition t = transpose();
    for (auto [d, m] : t.multiplicities()) s += static_cast<long>(d) * d * m;
    return s;
  }
  // Sum of multiplicities over odd part sizes.
  int odd_multiplicity_sum() const {
    int s = 0;
    for (auto [d, m] : mult_)
      if (d % 2 != 0) s += m;
    return s;
  }

  bool operator==(const Partition&) const = default;
  // Descending-lexicographic order on part lists; larger parts first.
  bool precedes(const Partition& o) const {
    return parts_descending() > o.parts_descending();
  }

 private:
  std::map<int, int> mult_;  // part size -> multiplicity, positive entries only
};

// Which part sizes of a fine partition carry a split.
enum class FineFlavor {
  All,      // every part size
  OddOnly,  // odd part sizes (base symmetric or Hermitian-type)
  EvenOnly  // even part sizes (base skew-symmetric or skew-Hermitian-type)
};

inline bool flavor_refines(FineFlavor f, int d) {
  switch (f) {
    case FineFlavor::All: return true;
    case FineFlavor::OddOnly: return d % 2 != 0;
    case FineFlavor::EvenOnly: return d % 2 == 0;
  }
  throw std::logic_error("unreachable");
}

class FinePartition {
 public:
  FinePartition() = default;
  FinePartition(Partition base, FineFlavor flavor, std::map<int, std::pair<int, int>> split)
      : base_(std::move(base)), flavor_(flavor), split_(std::move(split)) {
    for (auto [d, m] : base_.multiplicities()) {
      if (!flavor_refines(flavor_, d)) continue;
      auto it = split_.find(d);
      if (it == split_.end()) throw validation_error("missing split at a refined part size");
      auto [p, q] = it->second;
      if (p < 0 || q < 0 || p + q != m)
        throw validation_error("split (p,q) must be nonnegative with p+q = multiplicity");
    }
    for (auto& [d, pq] : split_) {
      if (base_.multiplicity(d) == 0 || !flavor_refines(flavor_, d))
        throw validation_error("split given at an unrefined part size");
    }
  }

  const Partition& base() const { return base_; }
  FineFlavor flavor() const { return flavor_; }
  const std::map<int, std::pair<int, int>>& splits() const { return split_; }
  std::pair<int, int> split_at(int d) const {
    auto it = split_.find(d);
    if (it == split_.end()) throw validation_error("no split at this part size");
    return it->second;
  }
  bool refines(int d) const { return flavor_refines(flavor_, d) && base_.multiplicity(d) > 0; }

  // Signature: sum of p_d - q_d over odd refined part sizes.
  int signature() const {
    int s = 0;
    for (auto [d, pq] : split_)
      if (d % 2 != 0) s += pq.first - pq.second;
    return s;
  }

  bool operator==(const FinePartition&) const = default;

 private:
  Partition base_;
  FineFlavor flavor_ = FineFlavor::All;
  std::map<int, std::pair<int, int>> split_;  // refined part size -> (p, q)
};

// All partitions of n in descending-lexicographic order of part lists.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw validation_error("cannot partition a negative integer");
  std::vector<Partition> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(Partition::from_parts(parts));
      return;
    }
    for (int d = std::min(rest, maxpart); d >= 1; --d) {
      parts.push_back(d);
      self(self, rest - d, d);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

// All fine partitions refining `base` under `flavor`.  Deterministic order:
// splits vary with p_d descending, larger part sizes varying slowest.
inline std::vector<FinePartition> enumerate_fine(const Partition& base, FineFlavor flavor) {
  std::vector<int> refined;
  for (auto [d, m] : base.multiplicities())
    if (flavor_refines(flavor, d)) refined.push_back(d);
  std::sort(refined.rbegin(), refined.rend());
  std::vector<FinePartition> out;
  std::map<int, std::pair<int, int>> split;
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == refined.size()) {
      out.emplace_back(base, flavor, split);
      return;
    }
    const int d = refined[k];
    const int m = base.multiplicity(d);
    for (int p = m; p >= 0; --p) {
      split[d] = {p, m - p};
      self(self, k + 1);
    }
    split.erase(d);
  };
  rec(rec, 0);
  return out;
}

// ---- text form ------------------------------------------------------------
//
// Plain partitions: "[5,1]", parts descending, multiplicities by repetition.
// Fine partitions: refined part sizes appear once as "d:(p,q)"; unrefined
// ones as repeated plain parts.  Example: "[5:(1,0),2,2,1:(0,1)]".

inline std::string to_string(const Partition& p) {
  std::string s = "[";
  bool first = true;
  for (int d : p.parts_descending()) {
    if (!first) s += ',';
    s += std::to_string(d);
    first = false;
  }
  return s + "]";
}

inline std::string to_string(const FinePartition& fp) {
  std::string s = "[";
  bool first = true;
  const auto& mult = fp.base().multiplicities();
  for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
    const int d = it->first;
    if (fp.refines(d)) {
      if (!first) s += ',';
      auto [p, q] = fp.split_at(d);
      s += std::to_string(d) + ":(" + std::to_string(p) + "," + std::to_string(q) + ")";
      first = false;
    } else {
      for (int k = 0; k < it->second; ++k) {
        if (!first) s += ',';
        s += std::to_string(d);
        first = false;
      }
    }
  }
  return s + "]";
}

namespace detail {

struct LabelEntry {
  int d = 0;
  bool refined = false;
  int p = 0, q = 0;
};

inline int parse_int(const std::string& s, std::size_t& i) {
  std::size_t start = i;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
    throw parse_error("expected an integer in '" + s + "' at position " + std::to_string(start));
  return std::stoi(s.substr(start, i - start));
}

inline std::vector<LabelEntry> parse_label_entries(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw parse_error("partition label must be bracketed, e.g. [5,1]");
  std::vector<LabelEntry> entries;
  std::size_t i = 1;
  const std::size_t end = s.size() - 1;
  while (i < end) {
    LabelEntry e;
    e.d = parse_int(s, i);
    if (i < end && s[i] == ':') {
      ++i;
      if (i >= end || s[i] != '(') throw parse_error("expected '(' after ':' in partition label");
      ++i;
      e.p = parse_int(s, i);
      if (i >= end || s[i] != ',') throw parse_error("expected ',' inside split");
      ++i;
      e.q = parse_int(s, i);
      if (i >= end || s[i] != ')') throw parse_error("expected ')' closing split");
      ++i;
      e.refined = true;
    }
    entries.push_back(e);
    if (i < end) {
      if (s[i] != ',') throw parse_error("expected ',' between partition entries");
      ++i;
      if (i >= end) throw parse_error("trailing ',' in partition label");
    }
  }
  if (entries.empty()) throw parse_error("empty partition label");
  return entries;
}

}  // namespace detail

inline Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  for (const auto& e : detail::parse_label_entries(text)) {
    if (e.refined) throw parse_error("plain partition label cannot carry splits");
    parts.push_back(e.d);
  }
  return Partition::from_parts(parts);
}

// Parses a label that may carry splits; the flavor decides which part sizes
// must be refined.
inline FinePartition parse_fine_partition(const std::string& text, FineFlavor flavor) {
  std::map<int, int> mult;
  std::map<int, std::pair<int, int>> split;
  for (const auto& e : detail::parse_label_entries(text)) {
    if (e.refined) {
      if (split.count(e.d) || mult.count(e.d))
        throw parse_error("part size " + std::to_string(e.d) + " appears more than once with a split");
      if (e.p < 0 || e.q < 0 || e.p + e.q <= 0) throw parse_error("split (p,q) must be nonnegative, p+q > 0");
      split[e.d] = {e.p, e.q};
      mult[e.d] += e.p + e.q;
    } else {
      if (split.count(e.d)) throw parse_error("part size appears both split and unsplit");
      ++mult[e.d];
    }
  }
  for (auto [d, pq] : split)
    if (!flavor_refines(flavor, d))
      throw parse_error("part size " + std::to_string(d) + " cannot carry a split here");
  return FinePartition(Partition::from_multiplicities(mult), flavor, split);
}

}  // namespace nilorb
