#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gauss/catalogue.hpp"
#include "gauss/spec_string.hpp"
#include "gauss/verify.hpp"

namespace {

using namespace gauss;

Group load_group_file(const std::filesystem::path& path, const Limits& limits) {
  if (path.extension() == ".perm") return read_permutation_generators(path, limits);
  return read_cayley_table(path, limits);
}

Params parse_params(const std::vector<std::string>& raw) {
  Params params;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::InvalidParameter, "expected k=v, got '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group totient toolkit: phi(G), S(G) and verification suites"};
  app.require_subcommand(1);

  RunOptions opt;
  app.add_option("--max-order", opt.limits.max_order, "Largest group order accepted")->capture_default_str();
  app.add_option("--max-subgroups", opt.limits.max_subgroups, "Largest subgroup lattice enumerated")->capture_default_str();
  app.add_option("--jobs", opt.jobs, "Worker threads, 0 = all cores")->capture_default_str();

  auto* summarize_cmd = app.add_subcommand("summarize", "Print phi, S and class-C membership of one group");
  std::string spec_text;
  std::string file;
  auto* spec_opt = summarize_cmd->add_option("--spec", spec_text, "Group spec, e.g. dihedral:6");
  auto* file_opt = summarize_cmd->add_option("--file", file, "Cayley table (.cayley) or generator file (.perm)");
  spec_opt->excludes(file_opt);
  summarize_cmd->require_option(1);

  auto* suite_cmd = app.add_subcommand("suite", "Run a verification suite");
  std::string suite_id;
  std::vector<std::string> raw_params;
  std::string suite_out;
  suite_cmd->add_option("suite_id", suite_id, "One of: prop1 cor2 thm3 thm4 thm5 thm7 thm8 example_pq remark_d2n closing_equality")
      ->required();
  suite_cmd->add_option("--param", raw_params, "Suite parameter k=v (repeatable)");
  suite_cmd->add_option("--output", suite_out, "Also write the JSON report to this path");

  auto* scan_cmd = app.add_subcommand("scan", "Scan a family or catalogue for class-C members");
  std::string family;
  std::uint64_t family_max = 0;
  std::string catalogue;
  std::string csv_path;
  auto* fam_opt = scan_cmd->add_option("--family", family, "Built-in family name");
  auto* fam_max_opt = scan_cmd->add_option("--max-order", family_max, "Largest order in the family");
  auto* cat_opt = scan_cmd->add_option("--catalogue", catalogue, "Directory of .cayley / .perm files");
  scan_cmd->add_option("--csv", csv_path, "Write the CSV summary to this path");
  fam_opt->excludes(cat_opt)->needs(fam_max_opt);
  cat_opt->excludes(fam_opt);
  scan_cmd->require_option(1, 3);

  auto* gauss_cmd = app.add_subcommand("gauss", "Check the divisor sum of the classical totient");
  std::uint64_t limit = 0;
  gauss_cmd->add_option("--limit", limit, "Largest n checked")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*summarize_cmd) {
      const auto g = file.empty() ? construct(parse_spec(spec_text), opt.limits) : load_group_file(file, opt.limits);
      std::cout << render_json(summarize(g, opt.limits));
      return 0;
    }
    if (*suite_cmd) {
      const auto result = run_suite(suite_id, parse_params(raw_params), opt);
      std::cout << render_json(result);
      if (!suite_out.empty()) write_report(result, suite_out, ReportFormat::Json);
      return result.all_pass() ? 0 : 1;
    }
    if (*scan_cmd) {
      std::vector<CorpusEntry> corpus;
      if (!catalogue.empty()) {
        for (auto& e : read_catalogue(catalogue, opt.limits)) corpus.push_back(CorpusEntry::of(e.id, std::move(e.group)));
      } else {
        if (family.empty()) throw Error(ErrorKind::InvalidParameter, "scan needs --family or --catalogue");
        if (family_max > opt.limits.max_order) throw Error(ErrorKind::RangeTooLarge, "family order bound exceeds --max-order cap");
        corpus = to_corpus(builtin_family(family, family_max));
      }
      const auto result = conjecture_scan(corpus, opt);
      std::cout << render_json(result);
      if (!csv_path.empty()) write_report(result, csv_path, ReportFormat::Csv);
      return result.conjecture6_violations.empty() && result.inequality_failures.empty() ? 0 : 1;
    }
    if (*gauss_cmd) {
      const auto result = verify_classical_gauss(limit);
      std::cout << render_json(result);
      return result.all_pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
