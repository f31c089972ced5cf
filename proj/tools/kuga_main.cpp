#include "kuga/checks.hpp"
#include "kuga/errors.hpp"
#include "kuga/family_json.hpp"
#include "kuga/feasibility.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr const char *kVersionLine = "kuga 0.1.0";

// Exit codes: 0 consistent/success, 1 mathematical violation, 2 usage or
// parse error.
enum ExitCode { kOk = 0, kViolated = 1, kUsage = 2 };

bool write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path);
  if (!out)
    return false;
  out << content;
  return out.good();
}

int run_check(const std::string &path, const std::string &json_out) {
  kuga::Report report;
  try {
    report = kuga::check_family(kuga::family_from_file(path));
  } catch (const kuga::SchemaError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::cout << kVersionLine << "\n" << report.render_text();
  if (!json_out.empty()) {
    if (!write_file(json_out, report.render_json().dump(2) + "\n")) {
      std::cerr << "error: cannot write '" << json_out << "'\n";
      return kUsage;
    }
  }
  return report.consistent ? kOk : kViolated;
}

nlohmann::ordered_json certificate_json(const kuga::Certificate &cert) {
  nlohmann::ordered_json doc;
  doc["verdict"] = kuga::to_string(cert.verdict);
  if (cert.verdict == kuga::Verdict::Feasible) {
    nlohmann::ordered_json witness = nlohmann::ordered_json::object();
    for (const auto &[name, value] : cert.witness)
      witness[name] = value.str();
    doc["witness"] = std::move(witness);
  } else {
    nlohmann::ordered_json refutation = nlohmann::ordered_json::array();
    for (const auto &term : cert.refutation) {
      nlohmann::ordered_json t;
      t["constraint"] = term.constraint_name;
      if (term.negated)
        t["side"] = "negated";
      t["multiplier"] = term.multiplier.str();
      refutation.push_back(std::move(t));
    }
    doc["refutation"] = std::move(refutation);
    doc["combined_constant"] = cert.refutation_constant.str();
    doc["combined_strict"] = cert.refutation_strict;
  }
  return doc;
}

int run_scan(const std::string &family, long long g_min, long long g_max,
             const std::string &regime_name, const std::string &cert_out) {
  const kuga::FamilyKind kind = family == "general"
                                    ? kuga::FamilyKind::GeneralStrictlyMaximal
                                    : kuga::FamilyKind::HyperellipticKuga;
  kuga::NcRegime regime = kuga::NcRegime::All;
  if (regime_name == "nc-nonempty")
    regime = kuga::NcRegime::NonEmptyOnly;
  else if (regime_name == "nc-empty")
    regime = kuga::NcRegime::EmptyOnly;

  kuga::ScanResult result;
  try {
    result = kuga::genus_scan(kind, g_min, g_max, regime);
  } catch (const kuga::ScenarioError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::cout << kVersionLine << "\n";
  std::cout << "g\tq_f\tregime\tverdict\tcertificate\n";
  for (const auto &cell : result.cells)
    std::cout << cell.g << "\t" << cell.q_f << "\t" << cell.regime_name() << "\t"
              << kuga::to_string(cell.verdict) << "\t" << cell.digest() << "\n";
  if (auto best = result.max_feasible_g())
    std::cout << "max feasible g = " << *best << "\n";
  else
    std::cout << "max feasible g = none\n";

  if (!cert_out.empty()) {
    nlohmann::ordered_json doc;
    doc["family"] = family;
    doc["g_min"] = g_min;
    doc["g_max"] = g_max;
    doc["regime"] = regime_name;
    doc["cells"] = nlohmann::ordered_json::array();
    for (const auto &cell : result.cells) {
      nlohmann::ordered_json cj;
      cj["g"] = cell.g;
      cj["q_f"] = cell.q_f;
      cj["regime"] = cell.regime_name();
      cj["verdict"] = kuga::to_string(cell.verdict);
      cj["parts"] = nlohmann::ordered_json::array();
      for (const auto &part : cell.parts) {
        nlohmann::ordered_json pj;
        pj["scenario"] = part.scenario.label();
        pj["certificate"] = certificate_json(part.certificate);
        cj["parts"].push_back(std::move(pj));
      }
      doc["cells"].push_back(std::move(cj));
    }
    if (!write_file(cert_out, doc.dump(2) + "\n")) {
      std::cerr << "error: cannot write '" << cert_out << "'\n";
      return kUsage;
    }
  }
  return kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact invariant checks and genus-bound certificates for semi-stable "
               "families of curves"};
  app.require_subcommand(1);

  std::string check_path, check_json;
  CLI::App *check = app.add_subcommand("check", "validate a family JSON document");
  check->add_option("file", check_path, "family document")->required();
  check->add_option("--json", check_json, "write the report as JSON to this path");

  std::string scan_family, scan_regime = "all", scan_cert;
  long long g_max = 0, g_min = 2;
  CLI::App *scan = app.add_subcommand("scan", "decide genus feasibility over a range");
  scan->add_option("family", scan_family, "family kind")
      ->required()
      ->check(CLI::IsMember({"general", "hyperelliptic"}));
  scan->add_option("--g-max", g_max, "largest genus to scan")->required();
  scan->add_option("--g-min", g_min, "smallest genus to scan (default 2)");
  scan->add_option("--regime", scan_regime, "which Jacobian-compactness regime")
      ->check(CLI::IsMember({"nc-nonempty", "nc-empty", "all"}));
  scan->add_option("--certificates", scan_cert, "write full certificates as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed())
      return run_check(check_path, check_json);
    if (g_max < 2) {
      std::cerr << "error: --g-max must be >= 2\n";
      return kUsage;
    }
    return run_scan(scan_family, g_min, g_max, scan_regime, scan_cert);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
