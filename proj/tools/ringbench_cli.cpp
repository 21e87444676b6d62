// Command-line front end: validate ring specs, decide properties, run
// the cross-check suite, enumerate small rings, and sweep the integers.
//
// Exit codes: 0 all consistent, 1 a discrepancy or failed validation,
// 2 input or budget error. Machine-format reports are deterministic:
// no timings, no environment data, fixed key order.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ringbench/report.hpp"

namespace fs = std::filesystem;
using namespace ringbench;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw RingError("cannot open file: " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string label_for(const RingSpec& spec, const fs::path& p) {
  if (spec.kind == RingSpec::Kind::table && spec.label.empty())
    return p.stem().string();
  return label_of(spec);
}

struct LoadedSpec {
  std::string label;
  RingSpec spec;
};

LoadedSpec load_spec(const std::string& path) {
  fs::path p(path);
  RingSpec spec = RingSpec::parse_text(read_file(p));
  return {label_for(spec, p), spec};
}

Catalog load_catalog(const std::string& dir) {
  fs::path d(dir);
  if (!fs::is_directory(d))
    throw RingError("catalog directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(d))
    if (e.is_regular_file() && e.path().extension() == ".json")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw RingError("catalog directory holds no .json specs: " + dir);
  Catalog cat;
  for (const auto& f : files) {
    RingSpec spec = RingSpec::parse_text(read_file(f));
    cat.push_back({label_for(spec, f), spec});
  }
  return cat;
}

double budget_from_env(double fallback) {
  if (const char* s = std::getenv("RINGBENCH_BUDGET_SECONDS")) {
    try {
      return std::stod(s);
    } catch (const std::exception&) {
      throw RingError(
          "RINGBENCH_BUDGET_SECONDS must be a number, got: " +
          std::string(s));
    }
  }
  return fallback;
}

void print_doc(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

constexpr const char* kPropertyNames[] = {
    "directly_finite",    "stable_range_one",
    "unit_lifting",       "quasi_morphic",
    "principal_are_annihilators", "uniquely_generated"};

std::vector<PropertyResult> selected_properties(
    const FiniteRing& r, const std::vector<std::string>& names,
    const std::string& side, const Deadline& dl) {
  std::vector<std::string> want(names);
  if (want.empty())
    want.assign(std::begin(kPropertyNames), std::end(kPropertyNames));
  std::vector<Side> sides;
  if (side == "left" || side == "both") sides.push_back(Side::left);
  if (side == "right" || side == "both") sides.push_back(Side::right);
  std::vector<PropertyResult> out;
  for (const std::string& name : want) {
    if (name == "directly_finite") {
      out.push_back(directly_finite(r, dl));
    } else if (name == "stable_range_one") {
      out.push_back(stable_range_one(r, dl));
    } else {
      for (Side s : sides) {
        if (name == "unit_lifting")
          out.push_back(unit_lifting(r, s, dl));
        else if (name == "quasi_morphic")
          out.push_back(quasi_morphic(r, s, dl));
        else if (name == "principal_are_annihilators")
          out.push_back(principal_are_annihilators(r, s, dl));
        else if (name == "uniquely_generated")
          out.push_back(uniquely_generated(r, s, dl));
      }
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for unit and ideal structure of finite rings"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "machine"}))
      ->capture_default_str();

  // validate
  auto* cmd_validate = app.add_subcommand(
      "validate", "check the ring axioms of spec files");
  std::vector<std::string> validate_files;
  cmd_validate->add_option("files", validate_files, "ring spec files")
      ->required()
      ->expected(-1);

  // props
  auto* cmd_props =
      app.add_subcommand("props", "decide properties of spec files");
  std::vector<std::string> props_files;
  std::vector<std::string> props_select;
  std::string props_side = "both";
  double props_budget = 30.0;
  cmd_props->add_option("files", props_files, "ring spec files")
      ->required()
      ->expected(-1);
  cmd_props
      ->add_option("--property", props_select,
                   "property name; repeatable, default all")
      ->check(CLI::IsMember(std::vector<std::string>(
          std::begin(kPropertyNames), std::end(kPropertyNames))));
  cmd_props->add_option("--side", props_side, "side for sided properties")
      ->check(CLI::IsMember({"left", "right", "both"}))
      ->capture_default_str();
  cmd_props->add_option("--budget-seconds", props_budget,
                        "per-ring time budget; 0 disables");

  // check
  auto* cmd_check = app.add_subcommand(
      "check", "run the full property and cross-check suite");
  std::vector<std::string> check_files;
  bool check_catalog = false;
  std::string catalog_dir = "catalog";
  int check_enum_upto = -1;
  double check_budget = 30.0;
  std::size_t check_max_order = 4096;
  cmd_check->add_option("files", check_files, "ring spec files");
  cmd_check->add_flag("--catalog", check_catalog,
                      "run over the bundled catalog directory");
  cmd_check->add_option("--catalog-dir", catalog_dir,
                        "directory of catalog spec files")
      ->capture_default_str();
  cmd_check->add_option(
      "--enumerate-upto", check_enum_upto,
      "also check every ring up to this order (default 4 with --catalog)");
  cmd_check->add_option("--budget-seconds", check_budget,
                        "per-ring time budget; 0 disables");
  cmd_check->add_option("--max-order", check_max_order,
                        "largest constructible ring order");

  // enumerate
  auto* cmd_enum = app.add_subcommand(
      "enumerate", "list every unital ring of one order up to isomorphism");
  int enum_order = 0;
  std::string emit_dir;
  std::size_t enum_max = 8;
  double enum_budget = 0.0;
  cmd_enum->add_option("--order", enum_order, "ring order")->required();
  cmd_enum->add_option("--emit", emit_dir,
                       "write each ring as a spec file into this directory");
  cmd_enum->add_option("--max-order", enum_max,
                       "refuse orders above this (hard limit 16)");
  cmd_enum->add_option("--budget-seconds", enum_budget,
                       "time budget; 0 disables");

  // zdemo
  auto* cmd_zdemo = app.add_subcommand(
      "zdemo", "sweep the decision procedures for the ring of integers");
  long long zdemo_bound = 10;
  cmd_zdemo->add_option("--bound", zdemo_bound,
                        "sweep components in [-bound, bound]; minimum 5")
      ->capture_default_str();

  // let --format appear after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool machine = format == "machine";
  try {
    if (*cmd_validate) {
      bool all_ok = true;
      ordered_json reports = ordered_json::array();
      for (const std::string& f : validate_files) {
        LoadedSpec ls = load_spec(f);
        FiniteRing r = construct(ls.spec);
        ValidationReport vr = validate(r);
        all_ok = all_ok && vr.ok;
        if (machine) {
          ordered_json j;
          j["label"] = ls.label;
          j["spec"] = ls.spec.to_json();
          j.update(json_of(vr));
          reports.push_back(std::move(j));
        } else {
          std::cout << text_of(vr, ls.label);
        }
      }
      if (machine) {
        ordered_json doc;
        doc["tool"] = "ringbench";
        doc["command"] = "validate";
        doc["reports"] = std::move(reports);
        print_doc(doc);
      }
      return all_ok ? 0 : 1;
    }

    if (*cmd_props) {
      const double budget = cmd_props->count("--budget-seconds")
                                ? props_budget
                                : budget_from_env(props_budget);
      ordered_json reports = ordered_json::array();
      for (const std::string& f : props_files) {
        LoadedSpec ls = load_spec(f);
        FiniteRing r = construct(ls.spec);
        ValidationReport vr = validate(r);
        if (!vr.ok)
          throw RingError(ls.label + ": spec is not a ring (violates " +
                          vr.violations.front().axiom + ")");
        Deadline dl =
            budget > 0 ? Deadline::after(budget) : Deadline{};
        auto results = selected_properties(r, props_select, props_side, dl);
        if (machine) {
          ordered_json j;
          j["label"] = ls.label;
          j["order"] = r.order();
          j["spec"] = ls.spec.to_json();
          ordered_json arr = ordered_json::array();
          for (const auto& p : results) arr.push_back(json_of(p));
          j["properties"] = std::move(arr);
          reports.push_back(std::move(j));
        } else {
          std::cout << "ring " << ls.label << " (order " << r.order()
                    << ")\n";
          for (const auto& p : results) std::cout << text_of(p);
        }
      }
      if (machine) {
        ordered_json doc;
        doc["tool"] = "ringbench";
        doc["command"] = "props";
        doc["reports"] = std::move(reports);
        print_doc(doc);
      }
      return 0;
    }

    if (*cmd_check) {
      if (check_files.empty() && !check_catalog)
        throw RingError("check: give spec files or --catalog");
      Catalog cat;
      if (check_catalog) cat = load_catalog(catalog_dir);
      for (const std::string& f : check_files) {
        LoadedSpec ls = load_spec(f);
        cat.push_back({ls.label, ls.spec});
      }
      int enum_upto = check_enum_upto >= 0 ? check_enum_upto
                                           : (check_catalog ? 4 : 0);
      if (enum_upto > 0) append_enumerated(cat, enum_upto);

      SuiteOptions opts;
      opts.budget_seconds = cmd_check->count("--budget-seconds")
                                ? check_budget
                                : budget_from_env(check_budget);
      opts.construct.max_order = check_max_order;
      std::vector<RingReport> reports = run_suite(cat, opts);

      std::size_t discrepancies = 0, errors = 0, skipped = 0;
      for (const RingReport& r : reports) {
        if (!r.error.empty()) ++errors;
        for (const CheckVerdict& c : r.checks) {
          if (c.status == CheckStatus::discrepancy) ++discrepancies;
          if (c.status == CheckStatus::skipped) ++skipped;
        }
      }
      if (machine) {
        ordered_json doc;
        doc["tool"] = "ringbench";
        doc["command"] = "check";
        doc["rings"] = reports.size();
        doc["discrepancies"] = discrepancies;
        doc["errors"] = errors;
        doc["skipped_checks"] = skipped;
        ordered_json arr = ordered_json::array();
        for (const RingReport& r : reports) arr.push_back(json_of(r));
        doc["reports"] = std::move(arr);
        print_doc(doc);
      } else {
        for (const RingReport& r : reports) std::cout << text_of(r);
        std::cout << "checked " << reports.size() << " rings: "
                  << discrepancies << " discrepancies, " << errors
                  << " errors, " << skipped << " skipped checks\n";
      }
      if (discrepancies > 0) return 1;
      if (errors > 0) return 2;
      return 0;
    }

    if (*cmd_enum) {
      EnumerateOptions opts;
      opts.max_order = enum_max;
      if (enum_budget > 0) opts.deadline = Deadline::after(enum_budget);
      std::vector<FiniteRing> rings = enumerate_unital_rings(enum_order, opts);
      std::vector<std::string> emitted;
      if (!emit_dir.empty()) {
        fs::create_directories(emit_dir);
        for (const FiniteRing& r : rings) {
          std::string name = canonical_hash_hex(canonical_form(r)) + ".json";
          std::ofstream out(fs::path(emit_dir) / name, std::ios::binary);
          out << table_spec_of(r).to_json().dump(2) << "\n";
          emitted.push_back(name);
        }
      }
      if (machine) {
        ordered_json doc;
        doc["tool"] = "ringbench";
        doc["command"] = "enumerate";
        doc["order"] = enum_order;
        doc["count"] = rings.size();
        ordered_json arr = ordered_json::array();
        for (const FiniteRing& r : rings)
          arr.push_back(json_of_enumerated(r));
        doc["rings"] = std::move(arr);
        if (!emitted.empty()) doc["emitted"] = emitted;
        print_doc(doc);
      } else {
        std::cout << "order " << enum_order << ": " << rings.size()
                  << " rings up to isomorphism\n";
        for (const FiniteRing& r : rings)
          std::cout << "  " << r.label() << "  units "
                    << units(r, UnitKind::two_sided).count()
                    << "  canonical "
                    << canonical_hash_hex(canonical_form(r)) << "\n";
        if (!emitted.empty())
          std::cout << "emitted " << emitted.size() << " spec files to "
                    << emit_dir << "\n";
      }
      return 0;
    }

    if (*cmd_zdemo) {
      ZDemoReport rep = z_demo_report(zdemo_bound);
      if (machine) {
        ordered_json doc;
        doc["tool"] = "ringbench";
        doc["command"] = "zdemo";
        doc.update(json_of(rep));
        print_doc(doc);
      } else {
        std::cout << text_of(rep);
      }
      return 0;
    }
  } catch (const RingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: time budget exceeded in " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
