// Command-line front end: enumeration, classification, self-duality
// listings, exceptional-table queries, joins, and the oracle sweep.
//
// Exit codes: 0 ok, 2 usage, 3 validation, 4 data integrity, 5 oracle
// mismatch.  --json switches from the aligned human tables to a
// machine-readable document with a stable schema_version.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nilorb/exceptional.hpp"
#include "nilorb/oracle.hpp"
#include "nilorb/selfdual.hpp"
#include "nilorb/verify.hpp"

using nlohmann::json;
using namespace nilorb;

namespace {

constexpr const char* kSchemaVersion = "1";
constexpr const char* kToolVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitData = 4;
constexpr int kExitOracle = 5;

struct CliError {
  int exit_code;
  std::string code;     // machine-readable
  std::string message;  // human-readable
};

[[noreturn]] void fail(int exit_code, const std::string& code, const std::string& message) {
  throw CliError{exit_code, code, message};
}

RealFormId form_from(const std::string& text) {
  try {
    RealFormId id = normalize(parse_real_form(text));
    validate(id);
    return id;
  } catch (const parse_error& ex) {
    fail(kExitUsage, "bad-form-syntax", ex.what());
  } catch (const validation_error& ex) {
    fail(kExitValidation, "invalid-form", ex.what());
  }
}

// Parse an orbit label in the flavor the family expects.
OrbitRecord record_from(const RealFormId& id, const std::string& label_text) {
  if (id.family == Family::Exceptional)
    fail(kExitValidation, "not-classical",
         "exceptional forms are table-driven; use the 'exceptional' command");
  try {
    OrbitRecord rec;
    rec.form = id;
    if (auto flavor = label_flavor(id.family)) {
      const FinePartition fine = parse_fine_partition(label_text, *flavor);
      validate_label(id, fine);
      rec.partition = fine.base();
      rec.fine = fine;
      rec.component_count = component_count(id, fine);
    } else {
      rec.partition = parse_partition(label_text);
      validate_label(id, rec.partition);
      rec.component_count = component_count(id, rec.partition);
    }
    if (rec.partition.is_trivial())
      fail(kExitValidation, "trivial-label", "the zero orbit is excluded from the classification");
    rec.dim_value = orbit_dimension(id, rec.partition);
    return rec;
  } catch (const parse_error& ex) {
    fail(kExitUsage, "bad-label-syntax", ex.what());
  } catch (const validation_error& ex) {
    fail(kExitValidation, "inadmissible-label", ex.what());
  }
}

json orbit_to_json(const OrbitRecord& r) {
  return {{"form", to_string(r.form)},
          {"label", r.label()},
          {"partition", to_string(r.partition)},
          {"component_count", r.component_count},
          {"dim", r.dim_value},
          {"dim_kind", is_complex_family(r.form.family) ? "complex" : "real"}};
}

json k_orbit_to_json(const KOrbitRecord& k) {
  return {{"form", to_string(k.form)},
          {"label", k.label},
          {"component_count", k.component_count},
          {"complex_dim", k.complex_dim},
          {"g_orbit_complex_dim", k.g_orbit_complex_dim},
          {"projective_dim", k.projective_dim},
          {"minus1_distinguished", k.minus1_distinguished},
          {"self_dual", k.self_dual}};
}

json row_to_json(const ExceptionalRow& r) {
  return {{"form", r.realform.label},
          {"row", r.row_no},
          {"dyn_k", r.dyn_k},
          {"dyn_g", r.dyn_g},
          {"dim_k_orbit", r.dim_k_orbit},
          {"intersection_count", r.intersection_count},
          {"levi", r.levi.to_string()},
          {"radu_dim", r.radu_dim}};
}

void emit(bool as_json, const json& payload,
          const std::function<void(const json&)>& human) {
  if (as_json) {
    json doc = {{"status", "ok"}, {"schema_version", kSchemaVersion}};
    doc.update(payload);
    std::printf("%s\n", doc.dump(2).c_str());
  } else {
    human(payload);
  }
}

std::string ints_csv(const json& v) {
  std::string s;
  for (const auto& x : v) {
    if (!s.empty()) s += ',';
    s += std::to_string(x.get<int>());
  }
  return s;
}

void print_orbit_table(const json& payload) {
  std::printf("%-24s %6s %6s %8s\n", "label", "dim", "count", "kind");
  for (const auto& r : payload.at("records"))
    std::printf("%-24s %6ld %6d %8s\n", r.at("label").get<std::string>().c_str(),
                r.at("dim").get<long>(), r.at("component_count").get<int>(),
                r.at("dim_kind").get<std::string>().c_str());
}

void print_k_orbit_table(const json& payload) {
  std::printf("%-24s %6s %6s %6s %6s %10s\n", "label", "dim_C", "dim_G", "P-dim", "count",
              "self-dual");
  for (const auto& r : payload.at("records"))
    std::printf("%-24s %6ld %6ld %6ld %6d %10s\n", r.at("label").get<std::string>().c_str(),
                r.at("complex_dim").get<long>(), r.at("g_orbit_complex_dim").get<long>(),
                r.at("projective_dim").get<long>(), r.at("component_count").get<int>(),
                r.at("self_dual").get<bool>() ? "yes" : "no");
}

void print_row_table(const json& payload) {
  std::printf("%4s %6s %6s %-12s %6s %-20s %-20s\n", "row", "dim", "count", "levi", "radu",
              "weights(beta)", "weights(alpha)");
  for (const auto& r : payload.at("rows"))
    std::printf("%4d %6ld %6d %-12s %6ld %-20s %-20s\n", r.at("row").get<int>(),
                r.at("dim_k_orbit").get<long>(), r.at("intersection_count").get<int>(),
                r.at("levi").get<std::string>().c_str(), r.at("radu_dim").get<long>(),
                ints_csv(r.at("dyn_k")).c_str(), ints_csv(r.at("dyn_g")).c_str());
}

int run(int argc, char** argv) {
  CLI::App app{"classification of projectivized nilpotent orbit closures"};
  app.require_subcommand(1);
  app.fallthrough();  // lets global flags appear after the subcommand
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.set_version_flag("--version", std::string("nilorb ") + kToolVersion);

  std::string form_text, label_text, dims_text, family_text;
  bool affine = false;
  int max_n = 4;

  auto* cmd_enumerate = app.add_subcommand("enumerate", "list all orbit labels of a form");
  cmd_enumerate->add_option("--form", form_text, "real or complex classical form")->required();

  auto* cmd_classify = app.add_subcommand("classify", "classify one orbit label");
  cmd_classify->add_option("--form", form_text, "classical real form")->required();
  cmd_classify->add_option("--label", label_text, "orbit label, e.g. [3:(1,0)]")->required();

  auto* cmd_selfdual = app.add_subcommand("selfdual", "list the self-dual orbit closures");
  cmd_selfdual->add_option("--form", form_text, "real classical or exceptional form")->required();

  auto* cmd_exceptional = app.add_subcommand("exceptional", "query the exceptional tables");
  cmd_exceptional->add_option("--form", form_text, "exceptional form label")->required();
  cmd_exceptional->add_flag("--affine", affine, "only rows with zero unipotent radical");

  auto* cmd_dims = app.add_subcommand("dims", "dimension data for one orbit label");
  cmd_dims->add_option("--form", form_text, "classical form")->required();
  cmd_dims->add_option("--label", label_text, "orbit label")->required();

  auto* cmd_join = app.add_subcommand("join", "projective dimension of a join");
  cmd_join->add_option("--dims", dims_text, "comma-separated projective dimensions")->required();

  auto* cmd_verify = app.add_subcommand("verify", "oracle sweep against the closed formulas");
  cmd_verify->add_option("--max-n", max_n, "bound on n (quaternionic forms capped at 3)");
  cmd_verify->add_option("--family", family_text, "restrict to a single form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error[usage]: %s\n", e.what());
    return kExitUsage;
  }

  try {
    if (cmd_enumerate->parsed()) {
      const RealFormId id = form_from(form_text);
      if (id.family == Family::Exceptional)
        fail(kExitValidation, "not-classical",
             "exceptional forms are table-driven; use the 'exceptional' command");
      json records = json::array();
      const auto recs = enumerate_orbits(id);
      for (const auto& r : recs) records.push_back(orbit_to_json(r));
      emit(as_json,
           {{"form", to_string(id)},
            {"records", records},
            {"total_orbits", total_orbit_count(recs)}},
           [&](const json& p) {
             std::printf("orbits of %s (%ld counting components)\n",
                         p.at("form").get<std::string>().c_str(),
                         p.at("total_orbits").get<long>());
             print_orbit_table(p);
           });
    } else if (cmd_classify->parsed()) {
      const RealFormId id = form_from(form_text);
      const OrbitRecord rec = record_from(id, label_text);
      if (is_complex_family(id.family))
        fail(kExitValidation, "complex-form",
             "complex forms carry no compactness verdict; use 'dims' and compose verdicts "
             "over the real summands");
      const KOrbitRecord k = ks_k_orbit(rec);
      json payload = orbit_to_json(rec);
      payload.update(k_orbit_to_json(k));
      payload["compact"] = k.minus1_distinguished;
      emit(as_json, payload, [&](const json& p) {
        std::printf("%s orbit %s\n", p.at("form").get<std::string>().c_str(),
                    p.at("label").get<std::string>().c_str());
        std::printf("  real dim          %ld\n", p.at("dim").get<long>());
        std::printf("  complex dim (K)   %ld\n", p.at("complex_dim").get<long>());
        std::printf("  complex dim (G)   %ld\n", p.at("g_orbit_complex_dim").get<long>());
        std::printf("  projective dim    %ld\n", p.at("projective_dim").get<long>());
        std::printf("  components        %d\n", p.at("component_count").get<int>());
        std::printf("  compact           %s\n", p.at("compact").get<bool>() ? "true" : "false");
        std::printf("  self-dual         %s\n", p.at("self_dual").get<bool>() ? "true" : "false");
      });
    } else if (cmd_selfdual->parsed()) {
      const RealFormId id = form_from(form_text);
      json records = json::array();
      try {
        for (const auto& k : list_selfdual(id)) records.push_back(k_orbit_to_json(k));
      } catch (const validation_error& ex) {
        fail(kExitValidation, "complex-form", ex.what());
      }
      emit(as_json, {{"form", to_string(id)}, {"records", records}}, [&](const json& p) {
        std::printf("self-dual orbit closures of %s\n", p.at("form").get<std::string>().c_str());
        print_k_orbit_table(p);
      });
    } else if (cmd_exceptional->parsed()) {
      const RealFormId id = form_from(form_text);
      if (id.family != Family::Exceptional)
        fail(kExitValidation, "not-exceptional",
             "classical forms are formula-driven; use 'enumerate' or 'selfdual'");
      const auto& tables = load_tables();
      const auto rows =
          affine ? tables.affine_minus1_distinguished(id) : tables.query(id);
      json jrows = json::array();
      for (const auto& r : rows) jrows.push_back(row_to_json(r));
      emit(as_json, {{"form", id.label}, {"affine", affine}, {"rows", jrows}},
           [&](const json& p) {
             std::printf("%s table rows%s\n", p.at("form").get<std::string>().c_str(),
                         p.at("affine").get<bool>() ? " (affine self-dual only)" : "");
             print_row_table(p);
           });
    } else if (cmd_dims->parsed()) {
      const RealFormId id = form_from(form_text);
      const OrbitRecord rec = record_from(id, label_text);
      json payload = orbit_to_json(rec);
      if (!is_complex_family(id.family)) {
        const auto parent = complex_parent(id, rec.partition);
        payload["complex_parent"] = {{"form", to_string(parent.form)},
                                     {"partition", to_string(parent.partition)}};
        const KOrbitRecord k = ks_k_orbit(rec);
        payload["complex_dim"] = k.complex_dim;
        payload["projective_dim"] = k.projective_dim;
      }
      emit(as_json, payload, [&](const json& p) {
        std::printf("%s orbit %s: dim %ld (%s)\n", p.at("form").get<std::string>().c_str(),
                    p.at("label").get<std::string>().c_str(), p.at("dim").get<long>(),
                    p.at("dim_kind").get<std::string>().c_str());
        if (p.contains("complex_parent"))
          std::printf("  complex parent %s %s, K-orbit dim %ld, projective dim %ld\n",
                      p.at("complex_parent").at("form").get<std::string>().c_str(),
                      p.at("complex_parent").at("partition").get<std::string>().c_str(),
                      p.at("complex_dim").get<long>(), p.at("projective_dim").get<long>());
      });
    } else if (cmd_join->parsed()) {
      std::vector<long> dims;
      try {
        std::size_t i = 0;
        while (i < dims_text.size()) {
          std::size_t used = 0;
          dims.push_back(std::stol(dims_text.substr(i), &used));
          i += used;
          if (i < dims_text.size()) {
            if (dims_text[i] != ',') throw std::invalid_argument("expected ','");
            ++i;
          }
        }
      } catch (const std::exception&) {
        fail(kExitUsage, "bad-dims-syntax", "--dims wants comma-separated integers, e.g. 0,2,3");
      }
      long result = 0;
      try {
        result = join_projective_dim(dims);
      } catch (const validation_error& ex) {
        fail(kExitValidation, "invalid-join", ex.what());
      }
      emit(as_json, {{"dims", dims}, {"join_projective_dim", result}}, [&](const json& p) {
        std::printf("%ld\n", p.at("join_projective_dim").get<long>());
      });
    } else if (cmd_verify->parsed()) {
      std::vector<RealFormId> forms;
      if (!family_text.empty()) {
        const RealFormId id = form_from(family_text);
        if (id.family == Family::Exceptional)
          fail(kExitValidation, "not-classical", "the oracle sweep covers classical forms");
        forms.push_back(id);
      } else {
        forms = verification_forms(max_n, std::min(max_n, 3));
      }
      const auto report = verify_forms(forms);
      json issues = json::array();
      for (const auto& i : report.issues)
        issues.push_back({{"form", to_string(i.form)}, {"label", i.label}, {"what", i.what}});
      emit(as_json,
           {{"labels_checked", report.labels_checked},
            {"issues", issues},
            {"ok", report.ok()}},
           [&](const json& p) {
             for (const auto& i : p.at("issues"))
               std::printf("MISMATCH %s %s: %s\n", i.at("form").get<std::string>().c_str(),
                           i.at("label").get<std::string>().c_str(),
                           i.at("what").get<std::string>().c_str());
             std::printf("%s: %ld labels checked, %zu mismatches\n",
                         p.at("ok").get<bool>() ? "ok" : "FAILED",
                         p.at("labels_checked").get<long>(), p.at("issues").size());
           });
      if (!report.ok()) return kExitOracle;
    }
  } catch (const CliError& e) {
    if (as_json) {
      const json doc = {{"status", "error"},
                        {"schema_version", kSchemaVersion},
                        {"code", e.code},
                        {"message", e.message}};
      std::printf("%s\n", doc.dump(2).c_str());
    } else {
      std::fprintf(stderr, "error[%s]: %s\n", e.code.c_str(), e.message.c_str());
    }
    return e.exit_code;
  } catch (const data_error& ex) {
    std::fprintf(stderr, "error[data-integrity]: %s\n", ex.what());
    return kExitData;
  } catch (const validation_error& ex) {
    std::fprintf(stderr, "error[invalid-request]: %s\n", ex.what());
    return kExitValidation;
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error[internal]: %s\n", ex.what());
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
