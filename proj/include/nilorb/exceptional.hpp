#pragma once

// The classification tables for the exceptional symmetric pairs, embedded as
// structured data.  The loader re-derives every internal consistency identity
// and refuses the dataset wholesale on the first violation.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nilorb/exceptional_data.hpp"
#include "nilorb/realform.hpp"

namespace nilorb {

struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reductive Levi type: multiset of simple/torus summands.
struct LeviType {
  // (token, rank, multiplicity); token one of A,B,C,D,E,F,G,T.
  struct Summand {
    char type = 'T';
    int rank = 0;
    int multiplicity = 1;
    bool operator==(const Summand&) const = default;
  };
  std::vector<Summand> summands;  // empty = the zero algebra

  bool operator==(const LeviType&) const = default;

  long dimension() const {
    long dim = 0;
    for (const auto& s : summands) {
      const long k = s.rank;
      long d = 0;
      switch (s.type) {
        case 'A': d = k * k + 2 * k; break;
        case 'B':
        case 'C': d = 2 * k * k + k; break;
        case 'D': d = 2 * k * k - k; break;
        case 'T': d = k; break;
        case 'G': d = 14; break;
        case 'F': d = 52; break;
        case 'E':
          d = k == 6 ? 78 : k == 7 ? 133 : k == 8 ? 248 : -1;
          break;
        default: d = -1;
      }
      if (d < 0) throw data_error("unknown Levi summand type");
      dim += d * s.multiplicity;
    }
    return dim;
  }

  std::string to_string() const {
    if (summands.empty()) return "0";
    std::string out;
    for (const auto& s : summands) {
      if (!out.empty()) out += '+';
      if (s.multiplicity > 1) out += std::to_string(s.multiplicity);
      out += s.type;
      out += '_';
      out += std::to_string(s.rank);
    }
    return out;
  }

  static LeviType parse(const std::string& text) {
    LeviType levi;
    if (text == "0") return levi;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '+')) {
      Summand s;
      std::size_t i = 0;
      if (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
        std::size_t j = i;
        while (j < tok.size() && std::isdigit(static_cast<unsigned char>(tok[j]))) ++j;
        s.multiplicity = std::stoi(tok.substr(i, j - i));
        i = j;
      }
      if (i >= tok.size() || std::string("ABCDEFGT").find(tok[i]) == std::string::npos)
        throw data_error("bad Levi token: " + tok);
      s.type = tok[i++];
      if (i >= tok.size() || tok[i] != '_') throw data_error("bad Levi token: " + tok);
      ++i;
      if (i >= tok.size()) throw data_error("bad Levi token: " + tok);
      s.rank = std::stoi(tok.substr(i));
      if (s.rank < 1 || s.multiplicity < 1) throw data_error("bad Levi token: " + tok);
      levi.summands.push_back(s);
    }
    if (levi.summands.empty()) throw data_error("empty Levi type");
    return levi;
  }
};

struct ExceptionalRow {
  RealFormId realform;
  int row_no = 0;
  std::vector<int> dyn_k;
  std::vector<int> dyn_g;
  long dim_k_orbit = 0;
  int intersection_count = 0;
  LeviType levi;
  long radu_dim = 0;
};

// Row invariants: the centralizer dimension identity against the symmetric
// pair dimensions, positivity, and the basis-length conventions.
inline bool check_row(const ExceptionalRow& row, std::string* diagnostic = nullptr) {
  auto fail = [&](const std::string& why) {
    if (diagnostic)
      *diagnostic = row.realform.label + " row " + std::to_string(row.row_no) + ": " + why;
    return false;
  };
  auto [dim_k, dim_p] = exceptional_pair_dims(row.realform.label);
  if (row.dim_k_orbit + row.levi.dimension() + row.radu_dim != dim_k)
    return fail("orbit dim + Levi dim + radical dim != dim k");
  if (row.dim_k_orbit < 1 || row.dim_k_orbit > dim_p) return fail("orbit dim out of range");
  if (row.intersection_count < 1) return fail("intersection count must be positive");
  if (row.radu_dim < 0) return fail("negative radical dimension");
  const char rank_digit = row.realform.label[1];
  const std::size_t g_len = static_cast<std::size_t>(rank_digit - '0');
  if (row.dyn_g.size() != g_len) return fail("alpha-side weight count != rank");
  std::size_t k_len = g_len;
  // Four-node beta bases: k = sp_4 for E6(6), k = F4(-52) for E6(-26).
  if (row.realform.label == "E6(6)" || row.realform.label == "E6(-26)") k_len = 4;
  if (row.dyn_k.size() != k_len) return fail("beta-side weight count violates conventions");
  return true;
}

class ExceptionalTables {
 public:
  const std::vector<ExceptionalRow>& rows(const RealFormId& form) const {
    if (form.family != Family::Exceptional)
      throw validation_error("exceptional tables cover exceptional forms only");
    auto it = by_form_.find(form.label);
    if (it == by_form_.end()) throw data_error("no table for " + form.label);
    return it->second;
  }

  template <typename Pred>
  std::vector<ExceptionalRow> query(const RealFormId& form, Pred&& pred) const {
    std::vector<ExceptionalRow> out;
    for (const auto& r : rows(form))
      if (pred(r)) out.push_back(r);
    return out;
  }
  std::vector<ExceptionalRow> query(const RealFormId& form) const {
    return query(form, [](const ExceptionalRow&) { return true; });
  }

  // Rows whose K-orbit stays self-dual in the affine sense: unipotent
  // radical of the centralizer is zero (last table column).
  std::vector<ExceptionalRow> affine_minus1_distinguished(const RealFormId& form) const {
    return query(form, [](const ExceptionalRow& r) { return r.radu_dim == 0; });
  }

  std::size_t total_rows() const {
    std::size_t n = 0;
    for (const auto& [label, rows] : by_form_) n += rows.size();
    return n;
  }

  static ExceptionalTables parse(const std::string& text) {
    ExceptionalTables t;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::string current_form;
    auto refuse = [&](const std::string& why) -> data_error {
      return data_error("exceptional dataset line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ls(line);
      std::string tag;
      ls >> tag;
      if (tag == "form") {
        std::string label;
        int dim_k = 0, dim_p = 0;
        if (!(ls >> label >> dim_k >> dim_p)) throw refuse("malformed form header");
        const auto expect = exceptional_pair_dims(label);
        if (expect != std::make_pair(dim_k, dim_p))
          throw refuse("symmetric pair dimensions disagree for " + label);
        if (t.by_form_.count(label)) throw refuse("duplicate form " + label);
        t.by_form_[label] = {};
        current_form = label;
      } else if (tag == "row") {
        if (current_form.empty()) throw refuse("row before any form header");
        std::string rest;
        std::getline(ls, rest);
        while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
          rest.erase(rest.begin());
        auto fields = split(rest, '|');
        if (fields.size() != 8) throw refuse("expected 8 fields");
        ExceptionalRow row;
        row.realform = exceptional(fields[0]);
        if (fields[0] != current_form) throw refuse("row label outside its form block");
        row.row_no = std::stoi(fields[1]);
        row.dyn_k = parse_ints(fields[2]);
        row.dyn_g = parse_ints(fields[3]);
        row.dim_k_orbit = std::stol(fields[4]);
        row.intersection_count = std::stoi(fields[5]);
        row.levi = LeviType::parse(fields[6]);
        row.radu_dim = std::stol(fields[7]);
        auto& rows = t.by_form_[current_form];
        if (row.row_no != static_cast<int>(rows.size()) + 1)
          throw refuse("row numbers must be contiguous from 1");
        std::string diag;
        if (!check_row(row, &diag)) throw data_error("exceptional dataset: " + diag);
        // Rows sharing a G-orbit characteristic must agree on the orbit
        // dimension (they are the K-pieces of one G-orbit intersection).
        for (const auto& prev : rows)
          if (prev.dyn_g == row.dyn_g && prev.dim_k_orbit != row.dim_k_orbit)
            throw refuse("rows sharing dyn_g disagree on orbit dimension");
        rows.push_back(std::move(row));
      } else {
        throw refuse("unknown tag '" + tag + "'");
      }
    }
    if (t.by_form_.size() != exceptional_labels().size())
      throw data_error("exceptional dataset: expected all 12 forms");
    if (t.total_rows() != 149)
      throw data_error("exceptional dataset: expected 149 rows, found " +
                       std::to_string(t.total_rows()));
    return t;
  }

 private:
  static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == sep) {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  }
  static std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& f : split(s, ',')) out.push_back(std::stoi(f));
    return out;
  }

  std::map<std::string, std::vector<ExceptionalRow>> by_form_;
};

// The embedded dataset (parsed once, immutable afterwards).
inline const ExceptionalTables& load_tables() {
  static const ExceptionalTables tables = ExceptionalTables::parse(detail::kExceptionalTableText);
  return tables;
}

// Parse from the shipped data file instead of the embedded copy.
inline ExceptionalTables load_tables_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open dataset file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return ExceptionalTables::parse(buf.str());
}

}  // namespace nilorb
