#pragma once

// Identifiers for the simple real Lie algebras handled here, a parser and
// printer for their text grammar, real dimensions, and the low-rank
// isomorphism table used for cross-checks.

#include <array>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nilorb/partition.hpp"

namespace nilorb {

enum class Family {
  SL_R,     // sl(n,R)
  SL_H,     // sl(n,H)
  SU,       // su(p,q)
  SO,       // so(p,q)
  SP_R,     // sp(n,R), n even
  SP_H,     // sp(p,q)
  USTAR_H,  // u*(n,H)
  SL_C,     // sl(n,C)
  SO_C,     // so(n,C)
  SP_C,     // sp(n,C), n even
  Exceptional
};

inline bool is_complex_family(Family f) {
  return f == Family::SL_C || f == Family::SO_C || f == Family::SP_C;
}
inline bool is_quaternionic_family(Family f) {
  return f == Family::SL_H || f == Family::SP_H || f == Family::USTAR_H;
}

struct RealFormId {
  Family family = Family::SL_R;
  // Classical data: n for one-parameter families, (p,q) for signature ones.
  int n = 0, p = 0, q = 0;
  // Exceptional label, e.g. "E6(2)".
  std::string label;

  bool operator==(const RealFormId&) const = default;
};

inline RealFormId sl_r(int n) { return {Family::SL_R, n, 0, 0, {}}; }
inline RealFormId sl_h(int n) { return {Family::SL_H, n, 0, 0, {}}; }
inline RealFormId su(int p, int q) { return {Family::SU, p + q, p, q, {}}; }
inline RealFormId so(int p, int q) { return {Family::SO, p + q, p, q, {}}; }
inline RealFormId sp_r(int n) { return {Family::SP_R, n, 0, 0, {}}; }
inline RealFormId sp_h(int p, int q) { return {Family::SP_H, p + q, p, q, {}}; }
inline RealFormId ustar_h(int n) { return {Family::USTAR_H, n, 0, 0, {}}; }
inline RealFormId sl_c(int n) { return {Family::SL_C, n, 0, 0, {}}; }
inline RealFormId so_c(int n) { return {Family::SO_C, n, 0, 0, {}}; }
inline RealFormId sp_c(int n) { return {Family::SP_C, n, 0, 0, {}}; }
inline RealFormId exceptional(std::string label) {
  return {Family::Exceptional, 0, 0, 0, std::move(label)};
}

inline const std::array<const char*, 12>& exceptional_labels() {
  static const std::array<const char*, 12> labels = {
      "G2(2)",  "F4(4)",  "F4(-20)", "E6(6)",  "E6(2)",  "E6(-14)",
      "E6(-26)", "E7(7)",  "E7(-5)",  "E7(-25)", "E8(8)",  "E8(-24)"};
  return labels;
}

// (complex dimension of k, complex dimension of p) of the symmetric pair.
inline std::pair<int, int> exceptional_pair_dims(const std::string& label) {
  if (label == "G2(2)") return {6, 8};
  if (label == "F4(4)") return {24, 28};
  if (label == "F4(-20)") return {36, 16};
  if (label == "E6(6)") return {36, 42};
  if (label == "E6(2)") return {38, 40};
  if (label == "E6(-14)") return {46, 32};
  if (label == "E6(-26)") return {52, 26};
  if (label == "E7(7)") return {63, 70};
  if (label == "E7(-5)") return {69, 64};
  if (label == "E7(-25)") return {79, 54};
  if (label == "E8(8)") return {120, 128};
  if (label == "E8(-24)") return {136, 112};
  throw validation_error("unknown exceptional label: " + label);
}

// Swap (p,q) to p >= q where the two describe the same algebra.
inline RealFormId normalize(RealFormId id) {
  switch (id.family) {
    case Family::SU:
    case Family::SO:
    case Family::SP_H:
      if (id.p < id.q) std::swap(id.p, id.q);
      return id;
    default:
      return id;
  }
}

// Validity per the classification table: ranges under which the family
// entry is listed.  strict=false admits smaller degenerate sizes so the
// matrix oracle can still build models for them.
inline void validate(const RealFormId& id, bool strict = true) {
  const auto need = [&](bool ok, const std::string& msg) {
    if (!ok) throw validation_error(msg);
  };
  switch (id.family) {
    case Family::SL_R:
      need(id.n >= (strict ? 2 : 1), "sl(n,R) needs n >= 2");
      break;
    case Family::SL_C:
      need(id.n >= (strict ? 2 : 1), "sl(n,C) needs n >= 2");
      break;
    case Family::SL_H:
      need(id.n >= (strict ? 2 : 1), "sl(n,H) needs n >= 2");
      break;
    case Family::SU:
      need(id.p >= 0 && id.q >= 0 && id.n == id.p + id.q, "su(p,q) needs p,q >= 0");
      need(id.n >= (strict ? 2 : 1), "su(p,q) needs p+q >= 2");
      break;
    case Family::SO:
      need(id.p >= 0 && id.q >= 0 && id.n == id.p + id.q, "so(p,q) needs p,q >= 0");
      need(!strict || id.n == 3 || id.n >= 5, "so(p,q) is listed for p+q = 3 or p+q >= 5");
      need(id.n >= 1, "so(p,q) needs p+q >= 1");
      break;
    case Family::SO_C:
      need(!strict || id.n == 3 || id.n >= 5, "so(n,C) is listed for n = 3 or n >= 5");
      need(id.n >= 1, "so(n,C) needs n >= 1");
      break;
    case Family::SP_R:
      need(id.n >= 2 && id.n % 2 == 0, "sp(n,R) needs even n >= 2");
      break;
    case Family::SP_C:
      need(id.n >= 2 && id.n % 2 == 0, "sp(n,C) needs even n >= 2");
      break;
    case Family::SP_H:
      need(id.p >= 0 && id.q >= 0 && id.n == id.p + id.q, "sp(p,q) needs p,q >= 0");
      need(id.n >= 1, "sp(p,q) needs p+q >= 1");
      break;
    case Family::USTAR_H:
      need(id.n >= (strict ? 2 : 1), "u*(n,H) needs n >= 2");
      break;
    case Family::Exceptional:
      exceptional_pair_dims(id.label);
      break;
  }
}

// Real dimension of the real Lie algebra (for the complex families, of the
// underlying real algebra, i.e. twice the complex dimension).
inline long real_dimension(const RealFormId& id) {
  const long n = id.n;
  switch (id.family) {
    case Family::SL_R: return n * n - 1;
    case Family::SL_H: return 4 * n * n - 1;
    case Family::SU: return n * n - 1;
    case Family::SO: return n * (n - 1) / 2;
    case Family::SP_R: return n * (n + 1) / 2;
    case Family::SP_H: return n * (2 * n + 1);
    case Family::USTAR_H: return n * (2 * n - 1);
    case Family::SL_C: return 2 * (n * n - 1);
    case Family::SO_C: return n * (n - 1);
    case Family::SP_C: return n * (n + 1);
    case Family::Exceptional: {
      auto [k, p] = exceptional_pair_dims(id.label);
      return k + p;
    }
  }
  throw std::logic_error("unreachable");
}

// ---- text grammar ----------------------------------------------------------
// "sl(4,R)", "sl(2,H)", "sl(3,C)", "su(2,1)", "so(3,2)", "so(5,C)",
// "sp(4,R)", "sp(4,C)", "sp(2,1)", "u*(3,H)", "E6(-14)" ... case-insensitive.

inline std::string to_string(const RealFormId& id) {
  auto two = [&](const char* head) {
    return std::string(head) + "(" + std::to_string(id.p) + "," + std::to_string(id.q) + ")";
  };
  auto one = [&](const char* head, const char* field) {
    return std::string(head) + "(" + std::to_string(id.n) + "," + field + ")";
  };
  switch (id.family) {
    case Family::SL_R: return one("sl", "R");
    case Family::SL_H: return one("sl", "H");
    case Family::SL_C: return one("sl", "C");
    case Family::SU: return two("su");
    case Family::SO: return two("so");
    case Family::SO_C: return one("so", "C");
    case Family::SP_R: return one("sp", "R");
    case Family::SP_C: return one("sp", "C");
    case Family::SP_H: return two("sp");
    case Family::USTAR_H: return one("u*", "H");
    case Family::Exceptional: return id.label;
  }
  throw std::logic_error("unreachable");
}

inline RealFormId parse_real_form(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  auto fail = [&]() -> parse_error {
    return parse_error("cannot parse real form '" + text + "'");
  };
  const auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') throw fail();
  const std::string head = s.substr(0, open);
  const std::string body = s.substr(open + 1, s.size() - open - 2);

  // Exceptional labels: head is e6/e7/e8/f4/g2, body an integer.
  if (head.size() == 2 && (head[0] == 'e' || head[0] == 'f' || head[0] == 'g') &&
      std::isdigit(static_cast<unsigned char>(head[1]))) {
    std::string label = head + "(" + body + ")";
    label[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    for (const char* known : exceptional_labels())
      if (label == known) return exceptional(label);
    throw fail();
  }

  const auto comma = body.find(',');
  if (comma == std::string::npos) throw fail();
  const std::string first = body.substr(0, comma);
  const std::string second = body.substr(comma + 1);
  auto to_int = [&](const std::string& t) {
    if (t.empty()) throw fail();
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(t, &pos);
    } catch (const std::exception&) {
      throw fail();
    }
    if (pos != t.size()) throw fail();
    return v;
  };

  RealFormId id;
  if (second == "r" || second == "c" || second == "h") {
    const int n = to_int(first);
    if (n < 0) throw fail();
    if (head == "sl") {
      id = second == "r" ? sl_r(n) : second == "c" ? sl_c(n) : sl_h(n);
    } else if (head == "so" && second == "c") {
      id = so_c(n);
    } else if (head == "sp" && (second == "r" || second == "c")) {
      id = second == "r" ? sp_r(n) : sp_c(n);
    } else if (head == "u*" && second == "h") {
      id = ustar_h(n);
    } else {
      throw fail();
    }
  } else {
    const int p = to_int(first), q = to_int(second);
    if (p < 0 || q < 0) throw fail();
    if (head == "su")
      id = su(p, q);
    else if (head == "so")
      id = so(p, q);
    else if (head == "sp")
      id = sp_h(p, q);
    else
      throw fail();
  }
  return id;
}

// ---- isomorphism table -----------------------------------------------------
// Each class lists mutually isomorphic real algebras; an entry with several
// summands is a direct sum (not simple) and is only reported, never used as
// a cross-check target.

struct IsoEntry {
  std::vector<RealFormId> summands;
  bool simple() const { return summands.size() == 1; }
};

inline const std::vector<std::vector<IsoEntry>>& iso_classes() {
  auto E = [](RealFormId id) { return IsoEntry{{normalize(id)}}; };
  auto S = [](std::vector<RealFormId> v) {
    for (auto& id : v) id = normalize(id);
    return IsoEntry{std::move(v)};
  };
  static const std::vector<std::vector<IsoEntry>> classes = {
      {E(so(2, 0)), E(ustar_h(1))},
      // so(3,C), sl(2,C), sp(2,C) are isomorphic over C; so(3,1) is their
      // common underlying real algebra.
      {E(so_c(3)), E(sl_c(2)), E(sp_c(2)), E(so(3, 1))},
      {E(so(3, 0)), E(su(2, 0)), E(sp_h(1, 0)), E(sl_h(1))},
      {E(so(2, 1)), E(su(1, 1)), E(sl_r(2)), E(sp_r(2))},
      {E(so_c(4)), S({sl_c(2), sl_c(2)})},
      {E(so(4, 0)), S({su(2, 0), su(2, 0)})},
      {E(so(2, 2)), S({sl_r(2), sl_r(2)})},
      {E(ustar_h(2)), S({su(2, 0), sl_r(2)})},
      {E(so_c(5)), E(sp_c(4))},
      {E(so(5, 0)), E(sp_h(2, 0))},
      {E(so(4, 1)), E(sp_h(1, 1))},
      {E(so(3, 2)), E(sp_r(4))},
      {E(so_c(6)), E(sl_c(4))},
      {E(so(6, 0)), E(su(4, 0))},
      {E(so(5, 1)), E(sl_h(2))},
      {E(so(4, 2)), E(su(2, 2))},
      {E(so(3, 3)), E(sl_r(4))},
      {E(ustar_h(3)), E(su(3, 1))},
      {E(ustar_h(4)), E(so(6, 2))},
  };
  return classes;
}

// The other members of id's isomorphism class (empty when id sits in no
// listed class).
inline std::vector<IsoEntry> iso_equivalents(const RealFormId& id) {
  const RealFormId norm = normalize(id);
  for (const auto& cls : iso_classes()) {
    bool found = false;
    for (const auto& e : cls)
      if (e.simple() && e.summands[0] == norm) found = true;
    if (!found) continue;
    std::vector<IsoEntry> out;
    for (const auto& e : cls)
      if (!(e.simple() && e.summands[0] == norm)) out.push_back(e);
    return out;
  }
  return {};
}

}  // namespace nilorb
