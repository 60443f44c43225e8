#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cli/commands.hpp"

using namespace curvefol::cli;

int main(int argc, char** argv) {
  CLI::App app{"Singular loci of foliations by curves: multiplicities, blowups, counts"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string input, output = "json";
  std::optional<long> seed;
  app.add_option("--input", input, "Spec file (YAML)");
  app.add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Accepted for compatibility; nothing here is random");

  auto* analyze = app.add_subcommand("analyze", "Multiplicity profile and classification of the declared curve");
  auto* blowup = app.add_subcommand("blowup", "Total and strict transforms in one blowup chart");
  std::size_t chart = 1;
  blowup->add_option("--chart", chart, "Chart index J, 1-based into curve.normal")->required();
  auto* count = app.add_subcommand("count", "Isolated Milnor total and singularities on the exceptional divisor");
  auto* formulas = app.add_subcommand("formulas", "Closed-form counts for the declared curve data");
  auto* chow = app.add_subcommand("chow-verify", "Closed forms against Chow-ring integrals on a parameter grid");
  std::string n_range, k_range, ell_range, d_range, g_range;
  chow->add_option("--n-range", n_range, "e.g. 3..5 or 3,4");
  chow->add_option("--k-range", k_range);
  chow->add_option("--ell-range", ell_range);
  chow->add_option("--d-range", d_range);
  chow->add_option("--g-range", g_range);
  auto* deform = app.add_subcommand("deform", "Identities of the one-parameter deformation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kSuccess : kInvalid;
  }

  try {
    auto spec = [&] {
      if (input.empty()) throw curvefol::ValidationError("--input is required for this command");
      return load_spec(input);
    };
    Report report;
    if (analyze->parsed()) {
      report = cmd_analyze(spec());
    } else if (blowup->parsed()) {
      report = cmd_blowup(spec(), chart);
    } else if (count->parsed()) {
      report = cmd_count(spec());
    } else if (formulas->parsed()) {
      report = cmd_formulas(spec());
    } else if (chow->parsed()) {
      GridRanges grid;
      if (!n_range.empty()) grid.n = parse_range(n_range);
      if (!k_range.empty()) grid.k = parse_range(k_range);
      if (!ell_range.empty()) grid.ell = parse_range(ell_range);
      if (!d_range.empty()) grid.d = parse_range(d_range);
      if (!g_range.empty()) grid.g = parse_range(g_range);
      report = cmd_chow_verify(grid, input.empty() ? std::nullopt : std::optional<SpecFile>(load_spec(input)));
    } else if (deform->parsed()) {
      report = cmd_deform(spec());
    }
    std::cout << (output == "json" ? render_json(report) : render_text(report));
    return report.exit_code;
  } catch (const curvefol::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
